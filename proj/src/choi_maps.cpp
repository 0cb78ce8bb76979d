#include "bqcert/choi_maps.hpp"

#include <stdexcept>

namespace bqcert {

RatMatrix sym_basis_element(int k) {
  RatMatrix e(3, 3);
  const auto [i, j] = kSymBasisIndex.at(static_cast<std::size_t>(k));
  e(i, j) = 1;
  e(j, i) = 1;
  return e;
}

SymLinearMap::SymLinearMap() {
  for (auto& m : images_) m = RatMatrix(3, 3);
}

SymLinearMap::SymLinearMap(std::array<RatMatrix, kSymBasisSize> images) : images_(std::move(images)) {
  for (int k = 0; k < kSymBasisSize; ++k)
    if (images_[k].rows() != 3 || !images_[k].is_symmetric())
      throw std::invalid_argument("image of " + std::string(kSymBasisNames[k]) + " is not a symmetric 3x3 matrix");
}

RatMatrix SymLinearMap::apply(const RatMatrix& a) const {
  if (a.rows() != 3 || !a.is_symmetric()) throw std::invalid_argument("apply: argument is not a symmetric 3x3 matrix");
  RatMatrix out(3, 3);
  for (int k = 0; k < kSymBasisSize; ++k) {
    const auto [i, j] = kSymBasisIndex[k];
    if (!a(i, j).is_zero()) out += images_[k] * a(i, j);
  }
  return out;
}

RatMatrix SymLinearMap::phi_of_rank_one(std::span<const Rational> x) const {
  if (x.size() != 3) throw std::invalid_argument("phi_of_rank_one: x must have 3 entries");
  if (x[0].is_zero() && x[1].is_zero() && x[2].is_zero())
    throw std::invalid_argument("phi_of_rank_one: x must be nonzero");
  return apply(outer(x, x));
}

std::array<std::array<Polynomial, 3>, 3> SymLinearMap::symbolic_rank_one() const {
  std::array<std::array<Polynomial, 3>, 3> out;
  for (int k = 0; k < kSymBasisSize; ++k) {
    const auto [i, j] = kSymBasisIndex[k];
    const Polynomial xij = Polynomial::x(i) * Polynomial::x(j);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        if (!images_[k](r, c).is_zero()) out[r][c] += xij * images_[k](r, c);
  }
  return out;
}

SymLinearMap& SymLinearMap::operator*=(const Rational& s) {
  for (auto& m : images_) m *= s;
  return *this;
}

RationalParameter::RationalParameter(Rational value)
    : t(std::move(value)), t2(t * t), t4(t2 * t2),
      t2_minus_1_sq((t2 - 1) * (t2 - 1)), off_diag(t4 - t2 + 1) {}

bool RationalParameter::is_degenerate() const { return t.is_zero() || is_plus_minus_one(); }
bool RationalParameter::is_plus_minus_one() const { return t2 == Rational(1); }

SymLinearMap build_phi_t(const Rational& t) {
  const RationalParameter p(t);
  std::array<RatMatrix, kSymBasisSize> images;
  // Diagonal weights: entry r of Phi(E_ii) is (t^2-1)^2, t^4 or 1 depending on
  // the cyclic offset (i - r) mod 3.
  const std::array<Rational, 3> weight{p.t2_minus_1_sq, p.t4, Rational(1)};
  for (int i = 0; i < 3; ++i) {
    RatMatrix m(3, 3);
    for (int r = 0; r < 3; ++r) m(r, r) = weight[(r - i + 3) % 3];
    images[i] = std::move(m);
  }
  for (int k = 3; k < kSymBasisSize; ++k) images[k] = sym_basis_element(k) * (-p.off_diag);
  return SymLinearMap(std::move(images));
}

BiquadraticForm choi_form(const SymLinearMap& map) {
  BiquadraticForm f;
  for (int k = 0; k < kSymBasisSize; ++k) {
    const int xs = quadratic_slot(kSymBasisIndex[k][0], kSymBasisIndex[k][1]);
    const RatMatrix& b = map.image(k);
    for (int j = 0; j < 3; ++j) {
      f.coeff(xs, quadratic_slot(j, j)) += b(j, j);
      for (int l = j + 1; l < 3; ++l) f.coeff(xs, quadratic_slot(j, l)) += b(j, l) * Rational(2);
    }
  }
  return f;
}

SymLinearMap choi_map(const BiquadraticForm& form) {
  std::array<RatMatrix, kSymBasisSize> images;
  const Rational half(1, 2);
  for (int k = 0; k < kSymBasisSize; ++k) {
    const int xs = quadratic_slot(kSymBasisIndex[k][0], kSymBasisIndex[k][1]);
    RatMatrix b(3, 3);
    for (int j = 0; j < 3; ++j) {
      b(j, j) = form.coeff(xs, quadratic_slot(j, j));
      for (int l = j + 1; l < 3; ++l) {
        b(j, l) = form.coeff(xs, quadratic_slot(j, l)) * half;
        b(l, j) = b(j, l);
      }
    }
    images[k] = std::move(b);
  }
  return SymLinearMap(std::move(images));
}

CKLParameters ckl_parameters(const Rational& t) {
  const RationalParameter p(t);
  return {(Rational(2) * p.t4 - Rational(3) * p.t2 + 2) / p.off_diag, Rational(1) / p.off_diag,
          p.t4 / p.off_diag};
}

SymLinearMap ckl_map(const CKLParameters& p) {
  std::array<RatMatrix, kSymBasisSize> images;
  // Row r of the diagonal uses (a, b, c) rotated by r.
  const std::array<Rational, 3> w{p.a, p.b, p.c};
  for (int i = 0; i < 3; ++i) {
    RatMatrix m(3, 3);
    for (int r = 0; r < 3; ++r) m(r, r) = w[(i - r + 3) % 3];
    m(i, i) -= 1;
    images[i] = std::move(m);
  }
  for (int k = 3; k < kSymBasisSize; ++k) images[k] = sym_basis_element(k) * Rational(-1);
  return SymLinearMap(std::move(images));
}

CklCertificate verify_ckl(const Rational& t) {
  const RationalParameter p(t);
  CklCertificate cert{ckl_parameters(t), {}};
  const auto& [a, b, c] = cert.params;
  const std::string abc = "a=" + a.str() + ", b=" + b.str() + ", c=" + c.str();
  cert.checks.push_back(CheckEntry::of("ckl_a_range", Rational(1) <= a && a <= Rational(2), abc));
  cert.checks.push_back(CheckEntry::of("ckl_sum", a + b + c == Rational(3), "a+b+c=" + (a + b + c).str()));
  const Rational two_minus_a = Rational(2) - a;
  cert.checks.push_back(CheckEntry::of("ckl_product", b * c == two_minus_a * two_minus_a,
                                       "bc=" + (b * c).str() + ", (2-a)^2=" + (two_minus_a * two_minus_a).str()));
  cert.checks.push_back(CheckEntry::of("ckl_rescaling", p.off_diag * ckl_map(cert.params) == build_phi_t(t),
                                       "(t^4-t^2+1)=" + p.off_diag.str()));
  return cert;
}

nlohmann::ordered_json matrix_to_json(const RatMatrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json map_to_json(const SymLinearMap& m, const std::optional<Rational>& t) {
  nlohmann::ordered_json j;
  if (t) j["t"] = t->str();
  nlohmann::ordered_json images;
  for (int k = 0; k < kSymBasisSize; ++k) images[std::string(kSymBasisNames[k])] = matrix_to_json(m.image(k));
  j["images"] = std::move(images);
  return j;
}

SymLinearMap map_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("images") || !j["images"].is_object())
    throw std::invalid_argument("map file needs an \"images\" object");
  std::array<RatMatrix, kSymBasisSize> images;
  for (int k = 0; k < kSymBasisSize; ++k) {
    const std::string key(kSymBasisNames[k]);
    if (!j["images"].contains(key)) throw std::invalid_argument("map file missing image of " + key);
    const auto& rows = j["images"][key];
    if (!rows.is_array() || rows.size() != 3) throw std::invalid_argument("image of " + key + " must be 3x3");
    RatMatrix m(3, 3);
    for (int r = 0; r < 3; ++r) {
      if (!rows[r].is_array() || rows[r].size() != 3) throw std::invalid_argument("image of " + key + " must be 3x3");
      for (int c = 0; c < 3; ++c) {
        const auto& e = rows[r][c];
        m(r, c) = e.is_string() ? Rational::parse(e.get<std::string>()) : Rational(e.get<long>());
      }
    }
    images[k] = std::move(m);
  }
  return SymLinearMap(std::move(images));
}

}  // namespace bqcert
