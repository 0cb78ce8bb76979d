#include "bqcert/biquadratic_form.hpp"

namespace bqcert {

int quadratic_slot(int i, int j) {
  if (i > j) std::swap(i, j);
  for (int s = 0; s < kNumQuadratic; ++s)
    if (kQuadraticPairs[s][0] == i && kQuadraticPairs[s][1] == j) return s;
  throw std::out_of_range("quadratic_slot: variable index outside 0..2");
}

int quadratic_slot(const std::array<int, 3>& exponents) {
  for (int s = 0; s < kNumQuadratic; ++s)
    if (kQuadraticExponents[s] == exponents) return s;
  throw std::invalid_argument("quadratic_slot: exponents are not of degree 2");
}

Monomial BiquadraticForm::monomial_of(int idx) {
  const auto& ex = kQuadraticExponents[idx / kNumQuadratic];
  const auto& ey = kQuadraticExponents[idx % kNumQuadratic];
  return {ex[0], ex[1], ex[2], ey[0], ey[1], ey[2]};
}

BiquadraticForm BiquadraticForm::from_coefficients(std::span<const Rational> coeffs) {
  if (coeffs.size() != kSize) throw std::invalid_argument("biquadratic form needs 36 coefficients");
  BiquadraticForm f;
  std::copy(coeffs.begin(), coeffs.end(), f.coeffs_.begin());
  return f;
}

bool BiquadraticForm::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

Rational BiquadraticForm::eval(std::span<const Rational> x, std::span<const Rational> y) const {
  if (x.size() != 3 || y.size() != 3) throw std::invalid_argument("form_eval: x and y must have 3 entries");
  std::array<Rational, kNumQuadratic> xm, ym;
  for (int s = 0; s < kNumQuadratic; ++s) {
    xm[s] = x[kQuadraticPairs[s][0]] * x[kQuadraticPairs[s][1]];
    ym[s] = y[kQuadraticPairs[s][0]] * y[kQuadraticPairs[s][1]];
  }
  Rational sum;
  for (int a = 0; a < kNumQuadratic; ++a) {
    if (xm[a].is_zero()) continue;
    Rational inner;
    for (int b = 0; b < kNumQuadratic; ++b) inner += coeff(a, b) * ym[b];
    sum += xm[a] * inner;
  }
  return sum;
}

Polynomial BiquadraticForm::to_polynomial() const {
  Polynomial p;
  for (int i = 0; i < kSize; ++i) p.add_term(monomial_of(i), coeffs_[i]);
  return p;
}

BiquadraticForm BiquadraticForm::from_polynomial(const Polynomial& p) {
  BiquadraticForm f;
  for (const auto& [m, c] : p.terms()) {
    if (x_degree(m) != 2 || y_degree(m) != 2)
      throw BidegreeError(m, "monomial " + to_string(m) + " has bidegree (" + std::to_string(x_degree(m)) +
                                 "," + std::to_string(y_degree(m)) + "), expected (2,2)");
    f.coeff(quadratic_slot({m[0], m[1], m[2]}), quadratic_slot({m[3], m[4], m[5]})) = c;
  }
  return f;
}

BiquadraticForm& BiquadraticForm::operator+=(const BiquadraticForm& o) {
  for (int i = 0; i < kSize; ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

BiquadraticForm& BiquadraticForm::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

nlohmann::ordered_json form_to_json(const BiquadraticForm& f, const std::optional<Rational>& t) {
  nlohmann::ordered_json j;
  if (t) j["t"] = t->str();
  auto coeffs = nlohmann::ordered_json::array();
  for (int a = 0; a < kNumQuadratic; ++a)
    for (int b = 0; b < kNumQuadratic; ++b) {
      if (f.coeff(a, b).is_zero()) continue;
      nlohmann::ordered_json c;
      c["xmono"] = kQuadraticExponents[a];
      c["ymono"] = kQuadraticExponents[b];
      c["value"] = f.coeff(a, b).str();
      coeffs.push_back(std::move(c));
    }
  j["coeffs"] = std::move(coeffs);
  return j;
}

namespace {

std::array<int, 3> read_exponents(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != 3)
    throw std::invalid_argument(std::string("form coefficient needs a 3-element \"") + key + "\" array");
  std::array<int, 3> e{};
  for (int i = 0; i < 3; ++i) {
    if (!j[key][i].is_number_integer()) throw std::invalid_argument(std::string("non-integer exponent in \"") + key + "\"");
    e[i] = j[key][i].get<int>();
  }
  return e;
}

Rational read_rational(const nlohmann::json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational values must be \"p/q\" strings or integers");
}

}  // namespace

FormFile form_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("form file must be a JSON object");
  FormFile out;
  if (j.contains("t") && !j["t"].is_null()) out.t = read_rational(j["t"]);
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw std::invalid_argument("form file needs a \"coeffs\" array");
  for (const auto& c : j["coeffs"]) {
    if (!c.is_object() || !c.contains("value")) throw std::invalid_argument("form coefficient needs a \"value\"");
    const auto ex = read_exponents(c, "xmono");
    const auto ey = read_exponents(c, "ymono");
    int xs = -1, ys = -1;
    try {
      xs = quadratic_slot(ex);
      ys = quadratic_slot(ey);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("form coefficient monomial is not of bidegree (2,2)");
    }
    out.form.coeff(xs, ys) += read_rational(c["value"]);
  }
  return out;
}

}  // namespace bqcert
