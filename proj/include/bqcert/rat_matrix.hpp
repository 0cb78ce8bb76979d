#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "bqcert/rational.hpp"

namespace bqcert {

using RatVector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Nested brace construction, e.g. RatMatrix::from_rows({{1, 2}, {3, 4}}).
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const Rational> entries() const { return entries_; }
  RatVector row(std::size_t r) const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rational& s);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
  friend RatMatrix operator*(const Rational& s, RatMatrix a) { return a *= s; }
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatVector operator*(const RatMatrix& a, std::span<const Rational> v);
RatMatrix outer(std::span<const Rational> u, std::span<const Rational> v);
RatMatrix transpose(const RatMatrix& m);
Rational dot(std::span<const Rational> u, std::span<const Rational> v);

struct RrefResult {
  RatMatrix matrix;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
};

/// Reduced row echelon form; pivots are taken as the first nonzero entry
/// in column order.
RrefResult rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Basis of the right null space. Each vector is a primitive integer vector
/// (as rationals) with positive leading nonzero entry, one per free column
/// of the rref, in increasing free-column order.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

Rational determinant(const RatMatrix& m);

/// Coefficients of the characteristic polynomial of a symmetric matrix:
/// e1 = trace, e2 = sum of principal 2x2 minors, e3 = determinant (n <= 3;
/// missing ones are 0). Throws std::invalid_argument on non-symmetric input.
struct Elementary {
  Rational e1, e2, e3;
};
Elementary charpoly_elementary(const RatMatrix& m);

enum class PsdVerdict { NotPSD, PSD, PD };
std::string_view to_string(PsdVerdict v);

/// Exact semidefiniteness for symmetric n <= 3 via the signs of e1, e2, e3.
/// PD is reported in preference to PSD when all three are strictly positive.
PsdVerdict psd_verdict(const RatMatrix& m);

/// Clears denominators, divides by the gcd, and makes the leading nonzero
/// entry positive. The zero vector is returned unchanged.
IntVector primitive_integer(std::span<const Rational> v);
RatVector to_rational(std::span<const Integer> v);

}  // namespace bqcert
