#pragma once

#include <array>
#include <functional>
#include <map>
#include <span>
#include <string>

#include "bqcert/rational.hpp"

namespace bqcert {

/// Variables are indexed x1, x2, x3, y1, y2, y3 -> 0..5.
inline constexpr int kNumVars = 6;
inline constexpr int kNumXVars = 3;

using Monomial = std::array<int, kNumVars>;

int x_degree(const Monomial& m);
int y_degree(const Monomial& m);
std::string to_string(const Monomial& m);

/// Sparse polynomial over the rationals in x1..x3, y1..y3. Terms are kept in
/// descending lexicographic order of exponent tuples and never store a zero
/// coefficient.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, std::greater<>>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  static Polynomial monomial(const Monomial& m, const Rational& c = Rational(1));
  static Polynomial variable(int index);
  static Polynomial x(int i) { return variable(i); }
  static Polynomial y(int j) { return variable(kNumXVars + j); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  /// True if no y-variable occurs.
  bool is_x_only() const;
  /// Homogeneous of the given total degree, or for (dx, dy) of that bidegree.
  bool is_homogeneous(int degree) const;
  bool has_bidegree(int dx, int dy) const;

  /// Exact evaluation. `point` has 6 entries, or 3 when is_x_only().
  Rational eval(std::span<const Rational> point) const;
  double eval(std::span<const double> point) const;

  /// Formal partial derivative with respect to variable `index` in 0..5.
  Polynomial partial(int index) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string str() const;

 private:
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, unsigned exponent);

}  // namespace bqcert
