#pragma once

#include <array>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bqcert/biquadratic_form.hpp"
#include "bqcert/check.hpp"
#include "bqcert/polynomial.hpp"
#include "bqcert/rat_matrix.hpp"

namespace bqcert {

/// Basis of Sym3: E11, E22, E33, E12+E21, E13+E31, E23+E32.
inline constexpr int kSymBasisSize = 6;
inline constexpr std::array<std::string_view, kSymBasisSize> kSymBasisNames{
    "E11", "E22", "E33", "E12+E21", "E13+E31", "E23+E32"};
inline constexpr std::array<std::array<int, 2>, kSymBasisSize> kSymBasisIndex{{
    {0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}}};

RatMatrix sym_basis_element(int k);

/// Linear map Sym3 -> Sym3, stored by the images of the six basis elements.
class SymLinearMap {
 public:
  SymLinearMap();
  /// Throws std::invalid_argument if an image is not a symmetric 3x3 matrix.
  explicit SymLinearMap(std::array<RatMatrix, kSymBasisSize> images);

  const RatMatrix& image(int k) const { return images_[k]; }
  const std::array<RatMatrix, kSymBasisSize>& images() const { return images_; }

  /// Throws std::invalid_argument on a non-symmetric argument.
  RatMatrix apply(const RatMatrix& a) const;
  /// Image of x x^T; throws on x = 0.
  RatMatrix phi_of_rank_one(std::span<const Rational> x) const;
  /// Phi(x x^T) with x1, x2, x3 symbolic; entries are quadratic forms in x.
  std::array<std::array<Polynomial, 3>, 3> symbolic_rank_one() const;

  SymLinearMap& operator*=(const Rational& s);
  friend SymLinearMap operator*(const Rational& s, SymLinearMap m) { return m *= s; }
  friend bool operator==(const SymLinearMap&, const SymLinearMap&) = default;

 private:
  std::array<RatMatrix, kSymBasisSize> images_;
};

/// t together with the quantities that appear throughout the family.
struct RationalParameter {
  Rational t, t2, t4;
  Rational t2_minus_1_sq;  // (t^2 - 1)^2
  Rational off_diag;       // t^4 - t^2 + 1

  explicit RationalParameter(Rational value);
  /// t in {-1, 0, 1}
  bool is_degenerate() const;
  bool is_plus_minus_one() const;
};

/// Phi_t(A)_{11} = (t^2-1)^2 a11 + a22 + t^4 a33, Phi_t(A)_{12} = -(t^4-t^2+1) a12,
/// and cyclically.
SymLinearMap build_phi_t(const Rational& t);

/// p_Phi(x, y) = y^T Phi(x x^T) y.
BiquadraticForm choi_form(const SymLinearMap& map);
SymLinearMap choi_map(const BiquadraticForm& form);

struct CKLParameters {
  Rational a, b, c;
};
CKLParameters ckl_parameters(const Rational& t);
/// Phi[a,b,c](X) = diag(a x11 + b x22 + c x33, c x11 + a x22 + b x33, b x11 + c x22 + a x33) - X.
SymLinearMap ckl_map(const CKLParameters& p);

struct CklCertificate {
  CKLParameters params;
  std::vector<CheckEntry> checks;
  bool passed() const { return all_passed(checks); }
};
CklCertificate verify_ckl(const Rational& t);

nlohmann::ordered_json map_to_json(const SymLinearMap& m, const std::optional<Rational>& t = std::nullopt);
SymLinearMap map_from_json(const nlohmann::json& j);
nlohmann::ordered_json matrix_to_json(const RatMatrix& m);

}  // namespace bqcert
