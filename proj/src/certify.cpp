#include "bqcert/certify.hpp"

#include <algorithm>

namespace bqcert {

IntVec3 canonical_projective(std::span<const Rational> v) {
  if (v.size() != 3) throw std::invalid_argument("projective point needs 3 coordinates");
  if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero())
    throw std::invalid_argument("the zero vector is not a projective point");
  const IntVector p = primitive_integer(v);
  return {p[0], p[1], p[2]};
}

std::string to_string(const IntVec3& v) {
  return v[0].get_str() + "," + v[1].get_str() + "," + v[2].get_str();
}

ProjectivePointPair ProjectivePointPair::from(std::span<const Rational> x, std::span<const Rational> y) {
  return {canonical_projective(x), canonical_projective(y)};
}

std::string ProjectivePointPair::str() const { return "[" + to_string(x) + ";" + to_string(y) + "]"; }

bool operator<(const ProjectivePointPair& a, const ProjectivePointPair& b) {
  for (int i = 0; i < 3; ++i)
    if (a.x[i] != b.x[i]) return a.x[i] < b.x[i];
  for (int i = 0; i < 3; ++i)
    if (a.y[i] != b.y[i]) return a.y[i] < b.y[i];
  return false;
}

bool ZeroCertificate::gradient_zero() const {
  return std::all_of(gradient.begin(), gradient.end(), [](const Rational& g) { return g.is_zero(); });
}

namespace {

Polynomial norm_sq_x() { return pow(Polynomial::x(0), 2) + pow(Polynomial::x(1), 2) + pow(Polynomial::x(2), 2); }

Polynomial det3(const std::array<std::array<Polynomial, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Polynomial xmono(int e1, int e2, int e3) { return Polynomial::monomial({e1, e2, e3, 0, 0, 0}); }

/// x_i^a x_{i+1}^b summed cyclically over i.
Polynomial cyclic_sum(int a, int b) {
  Polynomial out;
  for (int i = 0; i < 3; ++i) {
    Monomial m{};
    m[i] += a;
    m[(i + 1) % 3] += b;
    out += Polynomial::monomial(m);
  }
  return out;
}

}  // namespace

CheckEntry trace_identity(const Rational& t) {
  const RationalParameter p(t);
  const auto m = build_phi_t(t).symbolic_rank_one();
  const Polynomial lhs = m[0][0] + m[1][1] + m[2][2];
  const Polynomial rhs = Rational(2) * p.off_diag * norm_sq_x();
  return CheckEntry::of("trace_identity", lhs == rhs, "trace = " + lhs.str());
}

CheckEntry minor_sum_identity(const Rational& t) {
  const RationalParameter p(t);
  const auto m = build_phi_t(t).symbolic_rank_one();
  Polynomial lhs;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) lhs += m[i][i] * m[j][j] - m[i][j] * m[j][i];
  const Polynomial rhs = p.off_diag * p.off_diag * pow(norm_sq_x(), 2);
  return CheckEntry::of("minor_sum_identity", lhs == rhs,
                        "factor (t^4-t^2+1)^2 = " + (p.off_diag * p.off_diag).str());
}

Polynomial generalized_robinson(const Rational& t) {
  const RationalParameter p(t);
  const Rational t6 = p.t4 * p.t2;
  const Rational t8 = p.t4 * p.t4;
  Polynomial s = p.t4 * (xmono(6, 0, 0) + xmono(0, 6, 0) + xmono(0, 0, 6));
  s += (t8 - Rational(2) * p.t2) * cyclic_sum(4, 2);
  s += (Rational(1) - Rational(2) * t6) * cyclic_sum(2, 4);
  s -= Rational(3) * (t8 - Rational(2) * t6 + p.t4 - Rational(2) * p.t2 + 1) * xmono(2, 2, 2);
  return s;
}

Polynomial robinson_polynomial() {
  Polynomial r = xmono(6, 0, 0) + xmono(0, 6, 0) + xmono(0, 0, 6);
  r -= cyclic_sum(4, 2) + cyclic_sum(2, 4);
  r += Rational(3) * xmono(2, 2, 2);
  return r;
}

Polynomial det_phi_rank_one(const Rational& t) { return det3(build_phi_t(t).symbolic_rank_one()); }

DetIdentity det_identity(const Rational& t) {
  const RationalParameter p(t);
  DetIdentity out{generalized_robinson(t), det_phi_rank_one(t), {}};
  const bool ok = out.determinant == p.t2_minus_1_sq * out.sextic;
  std::string detail = "(t^2-1)^2 = " + p.t2_minus_1_sq.str();
  if (out.determinant.is_zero()) detail += "; determinant is identically zero";
  out.check = CheckEntry::of("det_identity", ok, std::move(detail));
  return out;
}

BiquadraticForm lagrange_form() {
  Polynomial nx, ny, xy;
  for (int i = 0; i < 3; ++i) {
    nx += pow(Polynomial::x(i), 2);
    ny += pow(Polynomial::y(i), 2);
    xy += Polynomial::x(i) * Polynomial::y(i);
  }
  return BiquadraticForm::from_polynomial(nx * ny - xy * xy);
}

std::vector<ProjectivePointPair> claimed_zero_set(const Rational& t) {
  const RationalParameter p(t);
  if (p.is_degenerate())
    throw DegenerateParameter("t = " + t.str() + " is degenerate: the ten-zero set requires t not in {-1,0,1}");
  const Rational o(1), z(0), m = -t;
  const std::vector<std::array<std::array<Rational, 3>, 2>> raw{
      {{{o, o, o}, {o, o, o}}},       {{{o, o, -o}, {o, o, -o}}},     {{{o, -o, o}, {o, -o, o}}},
      {{{-o, o, o}, {-o, o, o}}},     {{{o, t, z}, {t, o, z}}},       {{{o, m, z}, {m, o, z}}},
      {{{z, o, t}, {z, t, o}}},       {{{z, o, m}, {z, m, o}}},       {{{t, z, o}, {o, z, t}}},
      {{{m, z, o}, {o, z, m}}}};
  std::vector<ProjectivePointPair> out;
  out.reserve(raw.size());
  for (const auto& [x, y] : raw) out.push_back(ProjectivePointPair::from(x, y));
  return out;
}

ZeroCertificate verify_zero(const BiquadraticForm& form, const SymLinearMap& map, const ProjectivePointPair& pt) {
  ZeroCertificate z;
  z.point = pt;
  const RatVector x = pt.x_rational();
  const RatVector y = pt.y_rational();
  z.value = form.eval(x, y);
  const Polynomial poly = form.to_polynomial();
  RatVector xy = x;
  xy.insert(xy.end(), y.begin(), y.end());
  for (int v = 0; v < kNumVars; ++v) z.gradient[v] = poly.partial(v).eval(xy);
  const RatMatrix m = map.phi_of_rank_one(x);
  z.matrix_rank = static_cast<int>(rank(m));
  z.kernel_dim = 3 - z.matrix_rank;
  const RatVector my = m * y;
  z.kernel_contains_y = std::all_of(my.begin(), my.end(), [](const Rational& r) { return r.is_zero(); });
  return z;
}

ZeroCertificate verify_zero(const Rational& t, const ProjectivePointPair& pt) {
  const SymLinearMap map = build_phi_t(t);
  return verify_zero(choi_form(map), map, pt);
}

std::string_view to_string(SosVerdict v) {
  switch (v) {
    case SosVerdict::SOS: return "SOS";
    case SosVerdict::NotSOS: return "NotSOS";
    case SosVerdict::Unknown: return "Unknown";
  }
  return "?";
}

SosVerdict quarez_sos_verdict(int zero_count, bool finite) {
  return finite && zero_count > kMaxFiniteZerosSos ? SosVerdict::NotSOS : SosVerdict::Unknown;
}

RatMatrix second_order_system(const std::vector<ProjectivePointPair>& points) {
  if (points.empty()) throw std::invalid_argument("second_order_system: no points");
  constexpr int kRowsPerPoint = 1 + kNumVars;
  RatMatrix sys(points.size() * kRowsPerPoint, BiquadraticForm::kSize);
  for (std::size_t p = 0; p < points.size(); ++p) {
    std::array<Integer, kNumVars> v;
    for (int i = 0; i < 3; ++i) {
      v[i] = points[p].x[i];
      v[3 + i] = points[p].y[i];
    }
    for (int col = 0; col < BiquadraticForm::kSize; ++col) {
      const Monomial m = BiquadraticForm::monomial_of(col);
      // Row 0: the monomial itself; row 1 + d: its partial in variable d.
      for (int row = 0; row < kRowsPerPoint; ++row) {
        Monomial e = m;
        Integer coef = 1;
        if (row > 0) {
          const int d = row - 1;
          if (e[d] == 0) continue;
          coef = e[d];
          --e[d];
        }
        Integer val = coef;
        for (int i = 0; i < kNumVars && val != 0; ++i)
          for (int k = 0; k < e[i]; ++k) val *= v[i];
        sys(p * kRowsPerPoint + row, col) = Rational(val);
      }
    }
  }
  return sys;
}

ExtremalityResult extremality_check(const Rational& t) {
  const auto points = claimed_zero_set(t);
  const RatMatrix sys = second_order_system(points);
  const auto kernel = kernel_basis(sys);
  ExtremalityResult r;
  r.system_rows = static_cast<int>(sys.rows());
  r.kernel_dim = static_cast<int>(kernel.size());
  r.system_rank = static_cast<int>(sys.cols()) - r.kernel_dim;
  if (kernel.size() == 1) {
    const RatVector pt = choi_form(build_phi_t(t)).coefficient_vector();
    r.spans_pt = primitive_integer(pt) == primitive_integer(kernel.front());
  }
  return r;
}

std::vector<PsdVerdict> psd_verdicts(const SymLinearMap& map, const std::vector<RatVector>& points, Execution exec) {
  std::vector<PsdVerdict> out(points.size(), PsdVerdict::NotPSD);
  const auto n = static_cast<std::ptrdiff_t>(points.size());
  if (exec == Execution::Serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = psd_verdict(map.phi_of_rank_one(points[i]));
    return out;
  }
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = psd_verdict(map.phi_of_rank_one(points[i]));
  return out;
}

nlohmann::ordered_json to_json(const ZeroCertificate& z) {
  nlohmann::ordered_json j;
  j["point"] = z.point.str();
  j["value"] = z.value.str();
  auto g = nlohmann::ordered_json::array();
  for (const auto& d : z.gradient) g.push_back(d.str());
  j["gradient"] = std::move(g);
  j["matrix_rank"] = z.matrix_rank;
  j["kernel_dim"] = z.kernel_dim;
  j["kernel_contains_y"] = z.kernel_contains_y;
  j["certified"] = z.certified();
  return j;
}

}  // namespace bqcert
