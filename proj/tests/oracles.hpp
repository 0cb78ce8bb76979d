#pragma once

// Independent reference computations used only by tests. Nothing in here
// calls into the elimination or map-building code it is compared against.

#include <random>
#include <stdexcept>
#include <vector>

#include "bqcert/rat_matrix.hpp"

namespace bqcert::testing {

/// Rank by fraction-free (Bareiss) elimination over the integers after
/// clearing denominators row by row.
inline std::size_t bareiss_rank(const RatMatrix& m) {
  std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).denominator().get_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).numerator() * (l / m(i, j).denominator());
  }
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Integer v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        if (v % prev != 0) throw std::logic_error("bareiss_rank: inexact division");
        a[i][j] = v / prev;  // exact by Sylvester's identity
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

/// 3x3 determinant by the Leibniz formula.
inline Rational leibniz_det3(const RatMatrix& m) {
  return m(0, 0) * m(1, 1) * m(2, 2) + m(0, 1) * m(1, 2) * m(2, 0) + m(0, 2) * m(1, 0) * m(2, 1) -
         m(0, 2) * m(1, 1) * m(2, 0) - m(0, 1) * m(1, 0) * m(2, 2) - m(0, 0) * m(1, 2) * m(2, 1);
}

/// The displayed matrix Phi_t(x x^T), written out entry by entry.
inline RatMatrix displayed_phi_rank_one(const Rational& t, const RatVector& x) {
  const Rational t2 = t * t, t4 = t2 * t2, w = (t2 - 1) * (t2 - 1), o = t4 - t2 + 1;
  const Rational &x1 = x[0], &x2 = x[1], &x3 = x[2];
  return RatMatrix::from_rows({
      {w * x1 * x1 + x2 * x2 + t4 * x3 * x3, -o * x1 * x2, -o * x1 * x3},
      {-o * x1 * x2, w * x2 * x2 + x3 * x3 + t4 * x1 * x1, -o * x2 * x3},
      {-o * x1 * x3, -o * x2 * x3, w * x3 * x3 + x1 * x1 + t4 * x2 * x2},
  });
}

/// Random p/q with |p/q| <= bound and 1 <= q <= max_den.
inline Rational random_rational(std::mt19937_64& rng, long bound, long max_den) {
  std::uniform_int_distribution<long> den(1, max_den);
  const long q = den(rng);
  std::uniform_int_distribution<long> num(-bound * q, bound * q);
  return Rational(num(rng), q);
}

inline RatVector random_vector(std::mt19937_64& rng, std::size_t n, long bound, long max_den) {
  RatVector v(n);
  for (auto& e : v) e = random_rational(rng, bound, max_den);
  return v;
}

inline RatVector random_nonzero_vector(std::mt19937_64& rng, std::size_t n, long bound, long max_den) {
  for (;;) {
    RatVector v = random_vector(rng, n, bound, max_den);
    for (const auto& e : v)
      if (!e.is_zero()) return v;
  }
}

/// Twenty distinct rational parameters outside {-1, 0, 1}.
inline std::vector<Rational> sample_parameters() {
  return {Rational(2),     Rational(3),     Rational(1, 2),  Rational(-5, 7), Rational(-2),
          Rational(5),     Rational(1, 3),  Rational(-3, 2), Rational(7, 4),  Rational(-1, 5),
          Rational(4, 3),  Rational(11, 7), Rational(-9, 4), Rational(2, 9),  Rational(13, 5),
          Rational(-6),    Rational(3, 10), Rational(8, 3),  Rational(-17, 13), Rational(10)};
}

}  // namespace bqcert::testing
