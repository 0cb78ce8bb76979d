#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "bqcert/biquadratic_form.hpp"
#include "bqcert/execution.hpp"
#include "bqcert/polynomial.hpp"
#include "bqcert/rat_matrix.hpp"

namespace bqcert::numeric {

struct FloatPoint {
  std::array<double, 3> coords{1.0, 0.0, 0.0};

  static FloatPoint normalized(const std::array<double, 3>& v);
  /// Flips the sign so the first coordinate with |c| > 1e-6 is positive.
  FloatPoint canonical() const;
  friend bool operator==(const FloatPoint&, const FloatPoint&) = default;
};

/// Angle between the lines spanned by a and b, in [0, pi/2].
double projective_angle(const FloatPoint& a, const FloatPoint& b);

/// Homogeneous-or-not polynomial in three variables with floating
/// coefficients. Evaluation runs in long double.
class Poly3 {
 public:
  struct Term {
    std::array<int, 3> exponents;
    long double coeff;
  };

  Poly3() = default;
  explicit Poly3(std::vector<Term> terms);
  /// Requires p.is_x_only().
  static Poly3 from_polynomial(const Polynomial& p);
  static Poly3 constant(long double c);
  static Poly3 variable(int i);

  const std::vector<Term>& terms() const { return terms_; }
  int degree() const;
  long double max_abs_coeff() const;

  long double value(const std::array<long double, 3>& x) const;
  void gradient_hessian(const std::array<long double, 3>& x, std::array<long double, 3>& grad,
                        std::array<std::array<long double, 3>, 3>& hess) const;

  friend Poly3 operator+(const Poly3& a, const Poly3& b);
  friend Poly3 operator-(const Poly3& a, const Poly3& b);
  friend Poly3 operator*(const Poly3& a, const Poly3& b);
  friend Poly3 operator*(long double s, const Poly3& a);

 private:
  void compress();
  std::vector<Term> terms_;
};

/// det Phi_t(x x^T) built in floating arithmetic from the matrix entries.
Poly3 det_phi_numeric(double t);

struct RefineOptions {
  int max_iter = 400;
  double grad_tol = 1e-9;  // relative to the largest coefficient
};

struct RefineResult {
  FloatPoint point;
  double value = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Riemannian Newton on the unit sphere with a saddle-free (|eigenvalue|,
/// floored) Hessian, Armijo backtracking, and a gradient-descent fallback.
RefineResult refine_on_sphere(const Poly3& f, const FloatPoint& start, const RefineOptions& opts = {});

/// n Fibonacci-lattice points on the upper hemisphere z >= 0.
std::vector<FloatPoint> fibonacci_hemisphere(int n);
std::vector<FloatPoint> fibonacci_sphere(int n);

/// Independent refinements of every start. Output order matches `starts`
/// and is identical for both execution modes.
std::vector<RefineResult> refine_starts(const Poly3& f, const std::vector<FloatPoint>& starts,
                                        const RefineOptions& opts = {}, Execution exec = Execution::Parallel);

struct ZeroCluster {
  FloatPoint representative;
  int multiplicity = 0;
  double residual = 0.0;
};

enum class EnumerationStatus { Ok, NearDegenerate, NotZeroDimensional };
std::string_view to_string(EnumerationStatus s);

struct EnumerationDiagnostics {
  int starts = 0;
  int converged = 0;
  int nonconverged = 0;
  int rejected_value = 0;
};

struct EnumerationResult {
  EnumerationStatus status = EnumerationStatus::Ok;
  std::vector<ZeroCluster> clusters;
  EnumerationDiagnostics diagnostics;
  std::string message;
};

struct EnumerationOptions {
  int grid_n = 2000;
  double tol_value = 1e-10;
  double tol_cluster = 1e-6;
  Execution exec = Execution::Parallel;
  RefineOptions refine{};
};

inline constexpr double kNearDegenerateBand = 0.05;

/// Zeros of det Phi_t(x x^T) in P2 by multistart refinement.
/// Throws std::invalid_argument if grid_n < 10.
EnumerationResult enumerate_x_zeros(double t, const EnumerationOptions& opts = {});
/// Same clustering pipeline for an arbitrary nonnegative ternary form.
EnumerationResult enumerate_zeros(const Poly3& f, const EnumerationOptions& opts = {});

/// Nearest small-height rational projective point: coordinates are divided
/// by the largest one and each ratio is replaced by the first continued-
/// fraction convergent within `tol`. Fails if a denominator exceeds max_height.
std::optional<RatVector> rationalize(const FloatPoint& p, long max_height = 1'000'000, double tol = 1e-6);

struct SphereMinimum {
  double min_value = 0.0;
  FloatPoint argmin;
};
/// Multistart local minimization of p over the unit sphere (p in x1..x3 only).
SphereMinimum min_on_sphere(const Polynomial& p, int grid_n = 2000, double tol = 1e-12,
                            Execution exec = Execution::Parallel);
SphereMinimum min_on_sphere(const Poly3& p, int grid_n = 2000, double tol = 1e-12,
                            Execution exec = Execution::Parallel);

// Gram matrices of biquadratic forms, indexed by the bilinear monomials
// x_i y_j in order (1,1),(1,2),(1,3),(2,1),...,(3,3).
using GramMatrix = Eigen::Matrix<double, 9, 9>;
constexpr int bilinear_index(int i, int j) { return 3 * i + j; }

struct GramConstraint {
  int xslot = 0;
  int yslot = 0;
  double rhs = 0.0;
  std::vector<std::pair<int, int>> entries;  // ordered (row, col) pairs of G
};

/// One affine equation per (2,2) monomial. The 81 entries of G are
/// partitioned among the 36 equations.
class GramConstraints {
 public:
  explicit GramConstraints(std::vector<GramConstraint> rows) : rows_(std::move(rows)) {}
  const std::vector<GramConstraint>& rows() const { return rows_; }
  const GramConstraint& row(int xslot, int yslot) const;

  /// Max-abs violation over all equations.
  double residual(const GramMatrix& g) const;
  /// Frobenius-nearest matrix satisfying every equation.
  GramMatrix project(const GramMatrix& g) const;

 private:
  std::vector<GramConstraint> rows_;
};

GramConstraints gram_constraints(const BiquadraticForm& f);

/// Eigenvalue clipping at 0.
GramMatrix project_psd(const GramMatrix& g);
double min_eigenvalue(const GramMatrix& g);

struct SosSearchResult {
  bool feasible = false;
  GramMatrix gram = GramMatrix::Zero();  // witness when feasible, last PSD iterate otherwise
  double residual = 0.0;                 // constraint violation of the witness, or set distance
  double min_eigenvalue = 0.0;
  int iterations = 0;
};

/// Both alternate the affine Gram projection with the PSD projection.
/// Dykstra converges to the feasible point nearest the origin but stalls when
/// the only witnesses sit on the boundary of the cone; Douglas-Rachford
/// (reflect, reflect, average) does not, and is the default.
enum class SosMethod { DouglasRachford, Dykstra };
std::string_view to_string(SosMethod m);
SosMethod parse_sos_method(std::string_view name);

/// An infeasible result is evidence only; residual is then the distance
/// between the last affine and PSD iterates.
SosSearchResult alternating_projection_sos(const BiquadraticForm& f, int max_iter = 5000, double tol = 1e-9,
                                           SosMethod method = SosMethod::DouglasRachford);

}  // namespace bqcert::numeric
