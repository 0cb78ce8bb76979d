#include "bqcert/rat_matrix.hpp"

#include <stdexcept>

namespace bqcert {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw std::invalid_argument("RatMatrix: entry count does not match shape");
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Rational> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("RatMatrix: ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return RatMatrix(r, c, std::move(entries));
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RatMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("RatMatrix: product shape mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

RatVector operator*(const RatMatrix& a, std::span<const Rational> v) {
  if (a.cols() != v.size()) throw std::invalid_argument("RatMatrix: vector length mismatch");
  RatVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

RatMatrix outer(std::span<const Rational> u, std::span<const Rational> v) {
  RatMatrix out(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = u[i] * v[j];
  return out;
}

RatMatrix transpose(const RatMatrix& m) {
  RatMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

Rational dot(std::span<const Rational> u, std::span<const Rational> v) {
  if (u.size() != v.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

RrefResult rref(const RatMatrix& input) {
  RatMatrix m = input;
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(pivot_row, j));
    const Rational inv = Rational(1) / m(pivot_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m(i, col).is_zero()) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(pivot_row, j);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(to_rational(primitive_integer(v)));
  }
  return basis;
}

Rational determinant(const RatMatrix& input) {
  if (!input.is_square()) throw std::invalid_argument("determinant: matrix not square");
  RatMatrix m = input;
  const std::size_t n = m.rows();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m(sel, col).is_zero()) ++sel;
    if (sel == n) return Rational(0);
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      const Rational factor = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return det;
}

Elementary charpoly_elementary(const RatMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("charpoly_elementary: matrix not symmetric");
  if (m.rows() > 3) throw std::invalid_argument("charpoly_elementary: only n <= 3 supported");
  const std::size_t n = m.rows();
  Elementary e;
  for (std::size_t i = 0; i < n; ++i) e.e1 += m(i, i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.e2 += m(i, i) * m(j, j) - m(i, j) * m(j, i);
  if (n == 3) e.e3 = determinant(m);
  return e;
}

std::string_view to_string(PsdVerdict v) {
  switch (v) {
    case PsdVerdict::PD: return "PD";
    case PsdVerdict::PSD: return "PSD";
    case PsdVerdict::NotPSD: return "NotPSD";
  }
  return "?";
}

PsdVerdict psd_verdict(const RatMatrix& m) {
  const auto e = charpoly_elementary(m);
  // Pad to size 3: for n < 3 the missing coefficients are 0 and the PD
  // test must only look at the ones that exist.
  const std::size_t n = m.rows();
  const std::array<int, 3> s{e.e1.sign(), e.e2.sign(), e.e3.sign()};
  for (std::size_t k = 0; k < n; ++k)
    if (s[k] < 0) return PsdVerdict::NotPSD;
  for (std::size_t k = 0; k < n; ++k)
    if (s[k] == 0) return PsdVerdict::PSD;
  return PsdVerdict::PD;
}

IntVector primitive_integer(std::span<const Rational> v) {
  Integer lcm_den = 1;
  for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.denominator().get_mpz_t());
  IntVector out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Integer scaled = x.numerator() * (lcm_den / x.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
    out.push_back(std::move(scaled));
  }
  if (g == 0) return out;
  int lead = 0;
  for (const auto& x : out)
    if (x != 0) { lead = sgn(x); break; }
  for (auto& x : out) {
    x /= g;
    if (lead < 0) x = -x;
  }
  return out;
}

RatVector to_rational(std::span<const Integer> v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

}  // namespace bqcert
