#include "bqcert/numeric_search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bqcert::numeric {

using LVec = std::array<long double, 3>;

FloatPoint FloatPoint::normalized(const std::array<double, 3>& v) {
  const double n = std::hypot(v[0], v[1], v[2]);
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  return FloatPoint{{v[0] / n, v[1] / n, v[2] / n}};
}

FloatPoint FloatPoint::canonical() const {
  for (double c : coords) {
    if (std::abs(c) <= 1e-6) continue;
    if (c > 0) return *this;
    return FloatPoint{{-coords[0], -coords[1], -coords[2]}};
  }
  return *this;
}

double projective_angle(const FloatPoint& a, const FloatPoint& b) {
  const auto& u = a.coords;
  const auto& v = b.coords;
  const double cx = u[1] * v[2] - u[2] * v[1];
  const double cy = u[2] * v[0] - u[0] * v[2];
  const double cz = u[0] * v[1] - u[1] * v[0];
  const double d = std::abs(u[0] * v[0] + u[1] * v[1] + u[2] * v[2]);
  return std::atan2(std::hypot(cx, cy, cz), d);
}

// --- Poly3 ------------------------------------------------------------------

Poly3::Poly3(std::vector<Term> terms) : terms_(std::move(terms)) { compress(); }

void Poly3::compress() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.exponents > b.exponents; });
  std::vector<Term> merged;
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().exponents == t.exponents) merged.back().coeff += t.coeff;
    else merged.push_back(t);
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0.0L; });
  terms_ = std::move(merged);
}

Poly3 Poly3::from_polynomial(const Polynomial& p) {
  if (!p.is_x_only()) throw std::invalid_argument("Poly3 needs a polynomial in x1, x2, x3 only");
  std::vector<Term> terms;
  for (const auto& [m, c] : p.terms())
    terms.push_back({{m[0], m[1], m[2]}, static_cast<long double>(c.to_double())});
  return Poly3(std::move(terms));
}

Poly3 Poly3::constant(long double c) { return Poly3({{{0, 0, 0}, c}}); }

Poly3 Poly3::variable(int i) {
  std::array<int, 3> e{};
  e.at(static_cast<std::size_t>(i)) = 1;
  return Poly3({{e, 1.0L}});
}

int Poly3::degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exponents[0] + t.exponents[1] + t.exponents[2]);
  return d;
}

long double Poly3::max_abs_coeff() const {
  long double m = 0.0L;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coeff));
  return m;
}

namespace {

long double ipow(long double b, int e) {
  long double r = 1.0L;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

long double Poly3::value(const LVec& x) const {
  long double s = 0.0L;
  for (const auto& t : terms_)
    s += t.coeff * ipow(x[0], t.exponents[0]) * ipow(x[1], t.exponents[1]) * ipow(x[2], t.exponents[2]);
  return s;
}

void Poly3::gradient_hessian(const LVec& x, LVec& grad, std::array<LVec, 3>& hess) const {
  grad = {0, 0, 0};
  for (auto& r : hess) r = {0, 0, 0};
  for (const auto& t : terms_) {
    const auto& e = t.exponents;
    // Powers x_i^(e_i - k) for k = 0, 1, 2, with zero for negative exponents.
    std::array<std::array<long double, 3>, 3> pw{};
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) pw[i][k] = e[i] >= k ? ipow(x[i], e[i] - k) : 0.0L;
    for (int i = 0; i < 3; ++i) {
      long double g = t.coeff * e[i] * pw[i][1];
      for (int j = 0; j < 3; ++j)
        if (j != i) g *= pw[j][0];
      grad[i] += g;
      for (int j = 0; j < 3; ++j) {
        long double h = t.coeff;
        if (i == j) {
          h *= static_cast<long double>(e[i]) * (e[i] - 1) * pw[i][2];
          for (int k = 0; k < 3; ++k)
            if (k != i) h *= pw[k][0];
        } else {
          const int k = 3 - i - j;
          h *= static_cast<long double>(e[i]) * e[j] * pw[i][1] * pw[j][1] * pw[k][0];
        }
        hess[i][j] += h;
      }
    }
  }
}

Poly3 operator+(const Poly3& a, const Poly3& b) {
  auto terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return Poly3(std::move(terms));
}

Poly3 operator-(const Poly3& a, const Poly3& b) { return a + (-1.0L) * b; }

Poly3 operator*(long double s, const Poly3& a) {
  auto terms = a.terms_;
  for (auto& t : terms) t.coeff *= s;
  return Poly3(std::move(terms));
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
  std::vector<Poly3::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_)
      terms.push_back({{ta.exponents[0] + tb.exponents[0], ta.exponents[1] + tb.exponents[1],
                        ta.exponents[2] + tb.exponents[2]},
                       ta.coeff * tb.coeff});
  return Poly3(std::move(terms));
}

Poly3 det_phi_numeric(double t) {
  const long double tl = t;
  const long double t2 = tl * tl;
  const long double t4 = t2 * t2;
  const long double w0 = (t2 - 1) * (t2 - 1);
  const long double off = -(t4 - t2 + 1);
  const std::array<long double, 3> diag_weight{w0, t4, 1.0L};
  std::array<std::array<Poly3, 3>, 3> m;
  for (int r = 0; r < 3; ++r) {
    for (int i = 0; i < 3; ++i) {
      m[r][r] = m[r][r] + diag_weight[(r - i + 3) % 3] * (Poly3::variable(i) * Poly3::variable(i));
    }
    for (int c = r + 1; c < 3; ++c) {
      m[r][c] = off * (Poly3::variable(r) * Poly3::variable(c));
      m[c][r] = m[r][c];
    }
  }
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// --- sphere refinement ------------------------------------------------------

namespace {

LVec to_l(const FloatPoint& p) { return {p.coords[0], p.coords[1], p.coords[2]}; }

LVec unit(const LVec& v) {
  const long double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  return {v[0] / n, v[1] / n, v[2] / n};
}

long double ldot(const LVec& a, const LVec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

LVec cross(const LVec& a, const LVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

LVec matvec(const std::array<LVec, 3>& h, const LVec& v) {
  return {ldot(h[0], v), ldot(h[1], v), ldot(h[2], v)};
}

struct TangentModel {
  LVec u, v;
  long double g[2];
  long double h[2][2];
};

TangentModel tangent_model(const Poly3& f, const LVec& x) {
  TangentModel m;
  int axis = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(x[i]) < std::abs(x[axis])) axis = i;
  LVec e{0, 0, 0};
  e[axis] = 1;
  const long double ex = x[axis];
  m.u = unit({e[0] - ex * x[0], e[1] - ex * x[1], e[2] - ex * x[2]});
  m.v = cross(x, m.u);
  LVec grad;
  std::array<LVec, 3> hess;
  f.gradient_hessian(x, grad, hess);
  const long double radial = ldot(grad, x);
  m.g[0] = ldot(grad, m.u);
  m.g[1] = ldot(grad, m.v);
  const LVec hu = matvec(hess, m.u);
  const LVec hv = matvec(hess, m.v);
  m.h[0][0] = ldot(m.u, hu) - radial;
  m.h[0][1] = ldot(m.u, hv);
  m.h[1][0] = m.h[0][1];
  m.h[1][1] = ldot(m.v, hv) - radial;
  return m;
}

LVec retract(const LVec& x, const TangentModel& m, long double a, long double b) {
  return unit({x[0] + a * m.u[0] + b * m.v[0], x[1] + a * m.u[1] + b * m.v[1], x[2] + a * m.u[2] + b * m.v[2]});
}

}  // namespace

RefineResult refine_on_sphere(const Poly3& f, const FloatPoint& start, const RefineOptions& opts) {
  const long double scale = std::max(f.max_abs_coeff(), 1e-300L);
  const long double floor = 1e-14L * scale;
  LVec x = unit(to_l(start));
  long double fx = f.value(x);
  RefineResult res;
  long double gnorm = 0.0L;
  for (res.iterations = 0; res.iterations < opts.max_iter; ++res.iterations) {
    const TangentModel m = tangent_model(f, x);
    gnorm = std::hypot(m.g[0], m.g[1]);
    if (gnorm == 0.0L) break;

    // Symmetric 2x2 eigen-decomposition, eigenvalues replaced by max(|l|, floor).
    Eigen::Matrix2d h;
    h << static_cast<double>(m.h[0][0]), static_cast<double>(m.h[0][1]), static_cast<double>(m.h[1][0]),
        static_cast<double>(m.h[1][1]);
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(h);
    long double step[2] = {0, 0};
    for (int k = 0; k < 2; ++k) {
      const long double w0 = eig.eigenvectors()(0, k), w1 = eig.eigenvectors()(1, k);
      const long double lam = std::max(std::abs(static_cast<long double>(eig.eigenvalues()(k))), floor);
      const long double proj = (m.g[0] * w0 + m.g[1] * w1) / lam;
      step[0] -= proj * w0;
      step[1] -= proj * w1;
    }

    auto line_search = [&](long double s0, long double s1, LVec& out, long double& fout) {
      const long double slope = m.g[0] * s0 + m.g[1] * s1;
      if (!(slope < 0)) return false;
      long double alpha = 1.0L;
      for (int k = 0; k < 60; ++k, alpha *= 0.5L) {
        const LVec cand = retract(x, m, alpha * s0, alpha * s1);
        const long double fc = f.value(cand);
        if (fc <= fx + 1e-4L * alpha * slope) {
          out = cand;
          fout = fc;
          return true;
        }
      }
      return false;
    };

    LVec next;
    long double fnext = 0;
    if (!line_search(step[0], step[1], next, fnext)) {
      const long double lmax = std::max(std::abs(static_cast<long double>(eig.eigenvalues().cwiseAbs().maxCoeff())), floor);
      if (!line_search(-m.g[0] / lmax, -m.g[1] / lmax, next, fnext)) break;
    }
    const long double moved = std::sqrt((next[0] - x[0]) * (next[0] - x[0]) + (next[1] - x[1]) * (next[1] - x[1]) +
                                        (next[2] - x[2]) * (next[2] - x[2]));
    x = next;
    fx = fnext;
    if (moved < 1e-16L) break;
  }
  const TangentModel m = tangent_model(f, x);
  gnorm = std::hypot(m.g[0], m.g[1]);
  res.point = FloatPoint{{static_cast<double>(x[0]), static_cast<double>(x[1]), static_cast<double>(x[2])}};
  res.value = static_cast<double>(fx);
  res.grad_norm = static_cast<double>(gnorm);
  res.converged = gnorm <= opts.grad_tol * scale;
  return res;
}

std::vector<FloatPoint> fibonacci_hemisphere(int n) {
  std::vector<FloatPoint> pts;
  pts.reserve(static_cast<std::size_t>(std::max(n, 0)));
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = (i + 0.5) / n;
    const double r = std::sqrt(1.0 - z * z);
    pts.push_back(FloatPoint{{r * std::cos(golden * i), r * std::sin(golden * i), z}});
  }
  return pts;
}

std::vector<FloatPoint> fibonacci_sphere(int n) {
  std::vector<FloatPoint> pts;
  pts.reserve(static_cast<std::size_t>(std::max(n, 0)));
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / n;
    const double r = std::sqrt(1.0 - z * z);
    pts.push_back(FloatPoint{{r * std::cos(golden * i), r * std::sin(golden * i), z}});
  }
  return pts;
}

std::vector<RefineResult> refine_starts(const Poly3& f, const std::vector<FloatPoint>& starts,
                                        const RefineOptions& opts, Execution exec) {
  std::vector<RefineResult> out(starts.size());
  const auto n = static_cast<std::ptrdiff_t>(starts.size());
  if (exec == Execution::Serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = refine_on_sphere(f, starts[i], opts);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = refine_on_sphere(f, starts[i], opts);
  return out;
}

// --- enumeration ------------------------------------------------------------

std::string_view to_string(EnumerationStatus s) {
  switch (s) {
    case EnumerationStatus::Ok: return "ok";
    case EnumerationStatus::NearDegenerate: return "near-degenerate";
    case EnumerationStatus::NotZeroDimensional: return "not-zero-dimensional";
  }
  return "?";
}

EnumerationResult enumerate_zeros(const Poly3& f, const EnumerationOptions& opts) {
  if (opts.grid_n < 10) throw std::invalid_argument("grid_n must be at least 10");
  const auto starts = fibonacci_hemisphere(opts.grid_n);
  const auto results = refine_starts(f, starts, opts.refine, opts.exec);

  EnumerationResult out;
  out.diagnostics.starts = static_cast<int>(starts.size());
  struct Acc {
    FloatPoint anchor;
    ZeroCluster cluster;
  };
  std::vector<Acc> acc;
  for (const auto& r : results) {
    if (!r.converged) {
      ++out.diagnostics.nonconverged;
      continue;
    }
    ++out.diagnostics.converged;
    if (r.value > opts.tol_value) {
      ++out.diagnostics.rejected_value;
      continue;
    }
    const FloatPoint p = r.point.canonical();
    auto it = std::find_if(acc.begin(), acc.end(),
                           [&](const Acc& a) { return projective_angle(a.anchor, p) <= opts.tol_cluster; });
    if (it == acc.end()) {
      acc.push_back({p, {p, 1, r.value}});
      continue;
    }
    ++it->cluster.multiplicity;
    if (r.value < it->cluster.residual) {
      it->cluster.residual = r.value;
      it->cluster.representative = p;
    }
  }
  for (auto& a : acc) out.clusters.push_back(a.cluster);
  std::sort(out.clusters.begin(), out.clusters.end(), [](const ZeroCluster& a, const ZeroCluster& b) {
    return a.representative.coords > b.representative.coords;
  });
  return out;
}

EnumerationResult enumerate_x_zeros(double t, const EnumerationOptions& opts) {
  if (opts.grid_n < 10) throw std::invalid_argument("grid_n must be at least 10");
  const Poly3 det = det_phi_numeric(t);
  const double scale = std::pow(1.0 + std::abs(t), 12);
  if (det.max_abs_coeff() <= 1e-14 * scale) {
    // Every point is a zero: refine anyway so the diagnostics show it.
    EnumerationResult out;
    const auto starts = fibonacci_hemisphere(opts.grid_n);
    const auto results = refine_starts(det, starts, opts.refine, opts.exec);
    out.status = EnumerationStatus::NotZeroDimensional;
    out.diagnostics.starts = static_cast<int>(starts.size());
    for (const auto& r : results) {
      if (!r.converged) ++out.diagnostics.nonconverged;
      else if (r.value > opts.tol_value) ++out.diagnostics.converged, ++out.diagnostics.rejected_value;
      else ++out.diagnostics.converged;
    }
    out.message = "determinant vanishes identically: locus is not zero-dimensional";
    return out;
  }
  if (std::abs(std::abs(t) - 1.0) < kNearDegenerateBand) {
    EnumerationResult out;
    out.status = EnumerationStatus::NearDegenerate;
    out.message = "near-degenerate parameter: |t| within 0.05 of 1, zero locus degenerates toward a curve";
    return out;
  }
  return enumerate_zeros(det, opts);
}

std::optional<RatVector> rationalize(const FloatPoint& p, long max_height, double tol) {
  int big = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(p.coords[i]) > std::abs(p.coords[big])) big = i;
  if (p.coords[big] == 0.0) return std::nullopt;
  RatVector out(3);
  for (int i = 0; i < 3; ++i) {
    if (i == big) {
      out[i] = 1;
      continue;
    }
    const long double r = static_cast<long double>(p.coords[i]) / p.coords[big];
    // Continued fraction convergents h/k of r.
    long double rem = r;
    long h_prev = 1, h = static_cast<long>(std::floor(rem));
    long k_prev = 0, k = 1;
    rem -= std::floor(rem);
    bool found = std::abs(r - static_cast<long double>(h) / k) <= tol;
    while (!found) {
      if (rem < 1e-18L) break;
      rem = 1.0L / rem;
      const long a = static_cast<long>(std::floor(rem));
      rem -= a;
      const long h_next = a * h + h_prev;
      const long k_next = a * k + k_prev;
      if (k_next > max_height) return std::nullopt;
      h_prev = h, h = h_next;
      k_prev = k, k = k_next;
      found = std::abs(r - static_cast<long double>(h) / k) <= tol;
    }
    if (!found) return std::nullopt;
    out[i] = Rational(h, k);
  }
  return out;
}

SphereMinimum min_on_sphere(const Poly3& p, int grid_n, double tol, Execution exec) {
  if (grid_n < 1) throw std::invalid_argument("grid_n must be positive");
  const auto starts = p.degree() % 2 == 0 ? fibonacci_hemisphere(grid_n) : fibonacci_sphere(grid_n);
  RefineOptions opts;
  opts.grad_tol = tol;
  const auto results = refine_starts(p, starts, opts, exec);
  SphereMinimum best{results.front().value, results.front().point};
  for (const auto& r : results)
    if (r.value < best.min_value) best = {r.value, r.point};
  return best;
}

SphereMinimum min_on_sphere(const Polynomial& p, int grid_n, double tol, Execution exec) {
  return min_on_sphere(Poly3::from_polynomial(p), grid_n, tol, exec);
}

// --- Gram matrices ----------------------------------------------------------

const GramConstraint& GramConstraints::row(int xslot, int yslot) const {
  return rows_.at(static_cast<std::size_t>(BiquadraticForm::index(xslot, yslot)));
}

double GramConstraints::residual(const GramMatrix& g) const {
  double worst = 0.0;
  for (const auto& r : rows_) {
    double s = 0.0;
    for (const auto& [a, b] : r.entries) s += g(a, b);
    worst = std::max(worst, std::abs(s - r.rhs));
  }
  return worst;
}

GramMatrix GramConstraints::project(const GramMatrix& g) const {
  GramMatrix out = g;
  for (const auto& r : rows_) {
    double s = 0.0;
    for (const auto& [a, b] : r.entries) s += g(a, b);
    const double delta = (r.rhs - s) / static_cast<double>(r.entries.size());
    for (const auto& [a, b] : r.entries) out(a, b) += delta;
  }
  return out;
}

GramConstraints gram_constraints(const BiquadraticForm& f) {
  std::vector<GramConstraint> rows(BiquadraticForm::kSize);
  for (int xs = 0; xs < kNumQuadratic; ++xs)
    for (int ys = 0; ys < kNumQuadratic; ++ys) {
      auto& r = rows[BiquadraticForm::index(xs, ys)];
      r.xslot = xs;
      r.yslot = ys;
      r.rhs = f.coeff(xs, ys).to_double();
    }
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) {
      // z_a z_b = x_i y_j x_k y_l
      const int i = a / 3, j = a % 3, k = b / 3, l = b % 3;
      rows[BiquadraticForm::index(quadratic_slot(i, k), quadratic_slot(j, l))].entries.emplace_back(a, b);
    }
  return GramConstraints(std::move(rows));
}

GramMatrix project_psd(const GramMatrix& g) {
  const Eigen::SelfAdjointEigenSolver<GramMatrix> eig(0.5 * (g + g.transpose()));
  const auto lam = eig.eigenvalues().cwiseMax(0.0);
  return eig.eigenvectors() * lam.asDiagonal() * eig.eigenvectors().transpose();
}

double min_eigenvalue(const GramMatrix& g) {
  const Eigen::SelfAdjointEigenSolver<GramMatrix> eig(0.5 * (g + g.transpose()), Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

std::string_view to_string(SosMethod m) {
  return m == SosMethod::Dykstra ? "dykstra" : "douglas-rachford";
}

SosMethod parse_sos_method(std::string_view name) {
  if (name == "douglas-rachford" || name == "dr") return SosMethod::DouglasRachford;
  if (name == "dykstra") return SosMethod::Dykstra;
  throw std::invalid_argument("unknown SOS method '" + std::string(name) + "' (expected douglas-rachford or dykstra)");
}

namespace {

// A candidate is accepted either as an affine point that is PSD within tol,
// or as a PSD point that satisfies the constraints within tol.
bool accept_affine(const GramConstraints& cons, const GramMatrix& y, double tol, SosSearchResult& res) {
  const double m = min_eigenvalue(y);
  if (m < -tol) return false;
  res.feasible = true;
  res.gram = y;
  res.residual = cons.residual(y);
  res.min_eigenvalue = m;
  return true;
}

bool accept_psd(const GramConstraints& cons, const GramMatrix& z, double tol, SosSearchResult& res) {
  const double r = cons.residual(z);
  if (r > tol) return false;
  res.feasible = true;
  res.gram = z;
  res.residual = r;
  res.min_eigenvalue = min_eigenvalue(z);
  return true;
}

SosSearchResult dykstra(const GramConstraints& cons, int max_iter, double tol) {
  SosSearchResult res;
  GramMatrix x = GramMatrix::Zero();
  GramMatrix q = GramMatrix::Zero();
  for (res.iterations = 1; res.iterations <= max_iter; ++res.iterations) {
    // The affine projection needs no Dykstra correction.
    const GramMatrix y = cons.project(x);
    if (accept_affine(cons, y, tol, res)) return res;
    const GramMatrix z = project_psd(y + q);
    q = y + q - z;
    x = z;
    if (accept_psd(cons, z, tol, res)) return res;
    res.residual = (y - z).norm();
  }
  res.iterations = max_iter;
  res.gram = x;
  res.min_eigenvalue = min_eigenvalue(x);
  return res;
}

SosSearchResult douglas_rachford(const GramConstraints& cons, int max_iter, double tol) {
  SosSearchResult res;
  GramMatrix z = GramMatrix::Zero();
  GramMatrix b = GramMatrix::Zero();
  for (res.iterations = 1; res.iterations <= max_iter; ++res.iterations) {
    b = project_psd(z);
    const GramMatrix a = cons.project(2.0 * b - z);
    z += a - b;
    // The shadow sequence P_psd(z) converges to a witness when one exists;
    // otherwise a - b tends to the gap between the two sets.
    const GramMatrix shadow = project_psd(z);
    if (accept_psd(cons, shadow, tol, res)) return res;
    if (accept_affine(cons, cons.project(shadow), tol, res)) return res;
    res.residual = (a - b).norm();
  }
  res.iterations = max_iter;
  res.gram = project_psd(z);
  res.min_eigenvalue = min_eigenvalue(res.gram);
  return res;
}

}  // namespace

SosSearchResult alternating_projection_sos(const BiquadraticForm& f, int max_iter, double tol, SosMethod method) {
  if (max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
  const GramConstraints cons = gram_constraints(f);
  return method == SosMethod::Dykstra ? dykstra(cons, max_iter, tol) : douglas_rachford(cons, max_iter, tol);
}

}  // namespace bqcert::numeric
