#include "bqcert/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bqcert {

namespace {

constexpr std::array<const char*, kNumVars> kVarNames{"x1", "x2", "x3", "y1", "y2", "y3"};

void check_index(int index) {
  if (index < 0 || index >= kNumVars)
    throw std::out_of_range("polynomial variable index " + std::to_string(index) + " outside 0..5");
}

}  // namespace

int x_degree(const Monomial& m) { return m[0] + m[1] + m[2]; }
int y_degree(const Monomial& m) { return m[3] + m[4] + m[5]; }

std::string to_string(const Monomial& m) {
  std::string out;
  for (int i = 0; i < kNumVars; ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += kVarNames[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  for (int e : m)
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
  Polynomial p;
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::variable(int index) {
  check_index(index);
  Monomial m{};
  m[index] = 1;
  return monomial(m);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool Polynomial::is_x_only() const {
  for (const auto& [m, c] : terms_)
    if (y_degree(m) != 0) return false;
  return true;
}

bool Polynomial::is_homogeneous(int degree) const {
  for (const auto& [m, c] : terms_)
    if (x_degree(m) + y_degree(m) != degree) return false;
  return true;
}

bool Polynomial::has_bidegree(int dx, int dy) const {
  for (const auto& [m, c] : terms_)
    if (x_degree(m) != dx || y_degree(m) != dy) return false;
  return true;
}

Rational Polynomial::eval(std::span<const Rational> point) const {
  if (point.size() != kNumVars && !(point.size() == kNumXVars && is_x_only()))
    throw std::invalid_argument("polynomial evaluation: point has " + std::to_string(point.size()) +
                                " coordinates, expected 6 (or 3 for x-only polynomials)");
  Rational sum;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (m[i] != 0) term *= pow(point[i], static_cast<unsigned>(m[i]));
    sum += term;
  }
  return sum;
}

double Polynomial::eval(std::span<const double> point) const {
  if (point.size() != kNumVars && !(point.size() == kNumXVars && is_x_only()))
    throw std::invalid_argument("polynomial evaluation: coordinate count mismatch");
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double term = c.to_double();
    for (std::size_t i = 0; i < point.size(); ++i)
      if (m[i] != 0) term *= std::pow(point[i], m[i]);
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::partial(int index) const {
  check_index(index);
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    if (m[index] == 0) continue;
    Monomial d = m;
    --d[index];
    out.add_term(d, c * Rational(m[index]));
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (int i = 0; i < kNumVars; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << '-';
    first = false;
    const Rational mag = abs(c);
    const bool unit = mag == Rational(1);
    const std::string mono = to_string(m);
    if (mono == "1") os << mag;
    else if (unit) os << mono;
    else os << mag << '*' << mono;
  }
  return os.str();
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial out(1);
  for (unsigned i = 0; i < exponent; ++i) out = out * p;
  return out;
}

}  // namespace bqcert
