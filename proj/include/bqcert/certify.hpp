#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bqcert/biquadratic_form.hpp"
#include "bqcert/check.hpp"
#include "bqcert/choi_maps.hpp"
#include "bqcert/execution.hpp"
#include "bqcert/polynomial.hpp"
#include "bqcert/rat_matrix.hpp"

namespace bqcert {

/// Known bounds on real zero counts of biquadratic forms on P2 x P2.
inline constexpr int kMaxFiniteZerosNonnegative = 10;  // BB_{3,3}
inline constexpr int kPreviousLowerBound = 7;          // lower bound before the 10-zero family
inline constexpr int kMaxFiniteZerosSos = 6;           // BB'_{3,3}

class DegenerateParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using IntVec3 = std::array<Integer, 3>;

/// Canonical representative of a point of P2: primitive integer vector whose
/// leading nonzero entry is positive. Throws on the zero vector.
IntVec3 canonical_projective(std::span<const Rational> v);
std::string to_string(const IntVec3& v);

/// ([x], [y]) in P2 x P2, both in canonical form.
struct ProjectivePointPair {
  IntVec3 x, y;

  static ProjectivePointPair from(std::span<const Rational> x, std::span<const Rational> y);
  RatVector x_rational() const { return to_rational(x); }
  RatVector y_rational() const { return to_rational(y); }
  std::string str() const;  // "[x1,x2,x3;y1,y2,y3]"
  friend bool operator==(const ProjectivePointPair&, const ProjectivePointPair&) = default;
};
bool operator<(const ProjectivePointPair& a, const ProjectivePointPair& b);

struct ZeroCertificate {
  ProjectivePointPair point;
  Rational value;
  std::array<Rational, kNumVars> gradient;
  int matrix_rank = 0;
  int kernel_dim = 0;
  bool kernel_contains_y = false;

  bool gradient_zero() const;
  bool certified() const { return value.is_zero() && gradient_zero() && matrix_rank == 2 && kernel_contains_y; }
};

// Identities behind positivity of Phi_t(x x^T), each compared as exact
// polynomials in x at the given t.
CheckEntry trace_identity(const Rational& t);
CheckEntry minor_sum_identity(const Rational& t);

/// t^4 (x1^6+x2^6+x3^6) + (t^8-2t^2)(x1^4x2^2+...) + (1-2t^6)(x1^2x2^4+...)
/// - 3(t^8-2t^6+t^4-2t^2+1) x1^2x2^2x3^2
Polynomial generalized_robinson(const Rational& t);
Polynomial robinson_polynomial();

/// det Phi_t(x x^T) as an exact polynomial in x1..x3.
Polynomial det_phi_rank_one(const Rational& t);

struct DetIdentity {
  Polynomial sextic;  // S_t
  Polynomial determinant;
  CheckEntry check;
};
/// Compares det Phi_t(x x^T) with (t^2-1)^2 S_t.
DetIdentity det_identity(const Rational& t);

/// p_{+-1} = |x|^2 |y|^2 - (x.y)^2
BiquadraticForm lagrange_form();

/// The ten zeros ([x],[y]) of p_t; throws DegenerateParameter for t in {-1,0,1}.
std::vector<ProjectivePointPair> claimed_zero_set(const Rational& t);

ZeroCertificate verify_zero(const Rational& t, const ProjectivePointPair& pt);
ZeroCertificate verify_zero(const BiquadraticForm& form, const SymLinearMap& map, const ProjectivePointPair& pt);

enum class SosVerdict { SOS, NotSOS, Unknown };
std::string_view to_string(SosVerdict v);

/// NotSOS iff the zero set is finite with more than six points.
SosVerdict quarez_sos_verdict(int zero_count, bool finite);

/// Seven rows per point (value, d/dx1..d/dx3, d/dy1..d/dy3) of the 36
/// coefficient functionals, evaluated at the point's integer coordinates.
RatMatrix second_order_system(const std::vector<ProjectivePointPair>& points);

struct ExtremalityResult {
  int kernel_dim = 0;
  bool spans_pt = false;
  int system_rows = 0;
  int system_rank = 0;
};
/// Throws DegenerateParameter for t in {-1,0,1}.
ExtremalityResult extremality_check(const Rational& t);

/// Exact PSD verdicts of Phi_t(x x^T) over a batch of points. Parallel and
/// serial paths give identical output.
std::vector<PsdVerdict> psd_verdicts(const SymLinearMap& map, const std::vector<RatVector>& points,
                                     Execution exec = Execution::Parallel);

nlohmann::ordered_json to_json(const ZeroCertificate& z);

}  // namespace bqcert
