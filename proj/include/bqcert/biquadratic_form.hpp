#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "bqcert/polynomial.hpp"
#include "bqcert/rat_matrix.hpp"

namespace bqcert {

/// Degree-2 monomials in three variables, in slot order
/// v1^2, v1v2, v1v3, v2^2, v2v3, v3^2.
inline constexpr int kNumQuadratic = 6;
inline constexpr std::array<std::array<int, 3>, kNumQuadratic> kQuadraticExponents{{
    {2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}}};
/// Variable pair (i <= j) of each quadratic slot.
inline constexpr std::array<std::array<int, 2>, kNumQuadratic> kQuadraticPairs{{
    {0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};

/// Slot of v_i v_j for any order of i, j in 0..2.
int quadratic_slot(int i, int j);
int quadratic_slot(const std::array<int, 3>& exponents);

class BidegreeError : public std::invalid_argument {
 public:
  BidegreeError(const Monomial& offending, const std::string& what)
      : std::invalid_argument(what), offending_(offending) {}
  const Monomial& offending() const { return offending_; }

 private:
  Monomial offending_;
};

/// Form of bidegree (2,2) in x = (x1,x2,x3), y = (y1,y2,y3), stored densely
/// as 36 coefficients indexed by (x-slot, y-slot).
class BiquadraticForm {
 public:
  static constexpr int kSize = kNumQuadratic * kNumQuadratic;

  static constexpr int index(int xslot, int yslot) { return xslot * kNumQuadratic + yslot; }
  static Monomial monomial_of(int idx);

  const Rational& coeff(int xslot, int yslot) const { return coeffs_[index(xslot, yslot)]; }
  Rational& coeff(int xslot, int yslot) { return coeffs_[index(xslot, yslot)]; }
  const std::array<Rational, kSize>& coefficients() const { return coeffs_; }
  RatVector coefficient_vector() const { return RatVector(coeffs_.begin(), coeffs_.end()); }
  static BiquadraticForm from_coefficients(std::span<const Rational> coeffs);

  bool is_zero() const;
  Rational eval(std::span<const Rational> x, std::span<const Rational> y) const;
  Polynomial to_polynomial() const;
  /// Throws BidegreeError naming the first monomial not of bidegree (2,2).
  static BiquadraticForm from_polynomial(const Polynomial& p);

  BiquadraticForm& operator+=(const BiquadraticForm& o);
  BiquadraticForm& operator*=(const Rational& s);
  friend BiquadraticForm operator+(BiquadraticForm a, const BiquadraticForm& b) { return a += b; }
  friend BiquadraticForm operator*(const Rational& s, BiquadraticForm a) { return a *= s; }
  friend bool operator==(const BiquadraticForm&, const BiquadraticForm&) = default;

 private:
  std::array<Rational, kSize> coeffs_{};
};

/// {"t": "p/q" (optional), "coeffs": [{"xmono":[a,b,c], "ymono":[d,e,f], "value":"p/q"}, ...]}
/// Only nonzero coefficients are written, in slot order.
nlohmann::ordered_json form_to_json(const BiquadraticForm& f, const std::optional<Rational>& t = std::nullopt);

struct FormFile {
  BiquadraticForm form;
  std::optional<Rational> t;
};
/// Throws std::invalid_argument with a readable message on malformed input.
FormFile form_from_json(const nlohmann::json& j);

}  // namespace bqcert
