#include "bqcert/report.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bqcert {

nlohmann::ordered_json to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["command"] = c.command;
  j["t"] = c.t;
  j["grid_n"] = c.grid_n;
  j["tol_value"] = c.tol_value;
  j["tol_cluster"] = c.tol_cluster;
  j["max_iter"] = c.max_iter;
  j["sos_tol"] = c.sos_tol;
  j["sos_method"] = c.sos_method;
  j["out"] = c.out;
  j["format"] = c.format;
  return j;
}

void validate(const RunConfig& c) {
  if (c.grid_n < 10) throw std::invalid_argument("--grid must be at least 10");
  if (!(c.tol_value > 0) || !(c.tol_cluster > 0) || !(c.sos_tol > 0))
    throw std::invalid_argument("tolerances must be positive");
  if (c.max_iter < 1) throw std::invalid_argument("--max-iter must be positive");
  numeric::parse_sos_method(c.sos_method);
}

NumericSummary certify_numeric_zeros(const Rational& t, const numeric::EnumerationOptions& opts) {
  const auto enumeration = numeric::enumerate_x_zeros(t.to_double(), opts);
  NumericSummary out{enumeration.status, enumeration.message, enumeration.diagnostics, {}};
  if (enumeration.status != numeric::EnumerationStatus::Ok) return out;

  const SymLinearMap map = build_phi_t(t);
  const BiquadraticForm form = choi_form(map);
  for (const auto& cluster : enumeration.clusters) {
    ClusterCertificate cc{cluster, std::nullopt, 0, {}};
    const auto x = numeric::rationalize(cluster.representative);
    if (!x) {
      cc.failure = "no small-height rational point near the cluster";
      out.clusters.push_back(std::move(cc));
      continue;
    }
    const auto kernel = kernel_basis(map.phi_of_rank_one(*x));
    cc.kernel_dim = static_cast<int>(kernel.size());
    if (kernel.empty()) {
      cc.failure = "Phi_t(x x^T) is invertible at the rationalized point";
    } else {
      cc.certificate = verify_zero(form, map, ProjectivePointPair::from(*x, kernel.front()));
      if (kernel.size() > 1) cc.failure = "kernel of dimension " + std::to_string(kernel.size());
      else if (!cc.certificate->certified()) cc.failure = "exact certification failed";
    }
    out.clusters.push_back(std::move(cc));
  }
  return out;
}

bool CertificateReport::passed() const {
  if (!all_passed(identity_checks)) return false;
  return std::all_of(zeros.begin(), zeros.end(), [](const ZeroCertificate& z) { return z.certified(); });
}

namespace {

numeric::EnumerationOptions enumeration_options(const RunConfig& cfg) {
  numeric::EnumerationOptions o;
  o.grid_n = cfg.grid_n;
  o.tol_value = cfg.tol_value;
  o.tol_cluster = cfg.tol_cluster;
  return o;
}

void add_infinite_case(CertificateReport& r, const BiquadraticForm& form, const DetIdentity& det, const RunConfig& cfg) {
  r.identity_checks.push_back(CheckEntry::of("det_identically_zero", det.determinant.is_zero(),
                                             "det Phi_t(x x^T) = " + det.determinant.str()));
  r.identity_checks.push_back(CheckEntry::of("lagrange_identity", form == lagrange_form(),
                                             "p_t = |x|^2 |y|^2 - (x.y)^2"));
  r.identity_checks.push_back({"extremality", CheckStatus::Skipped, "zero set is not finite"});
  r.zero_count.reset();
  r.notes.push_back("det Phi_t(x x^T) vanishes identically; p_t = |x|^2|y|^2 - (x.y)^2 is not the zero form");
  r.notes.push_back("Z(p_t) = {([x],[y]) : x parallel to y} is infinite");

  r.sos_verdict = quarez_sos_verdict(0, false);
  r.gram_search = numeric::alternating_projection_sos(form, cfg.max_iter, cfg.sos_tol,
                                                         numeric::parse_sos_method(cfg.sos_method));
  if (r.gram_search->feasible) {
    r.sos_verdict = SosVerdict::SOS;
    r.notes.push_back("SOS: PSD Gram witness found by alternating projections");
  }
}

}  // namespace

CertificateReport build_report(const Rational& t, const RunConfig& cfg) {
  validate(cfg);
  const RationalParameter param(t);
  const SymLinearMap map = build_phi_t(t);
  const BiquadraticForm form = choi_form(map);

  CertificateReport r;
  r.t = t;
  r.identity_checks.push_back(trace_identity(t));
  r.identity_checks.push_back(minor_sum_identity(t));
  const DetIdentity det = det_identity(t);
  r.identity_checks.push_back(det.check);
  for (auto& c : verify_ckl(t).checks) r.identity_checks.push_back(std::move(c));

  r.numeric = certify_numeric_zeros(t, enumeration_options(cfg));

  if (param.is_plus_minus_one()) {
    add_infinite_case(r, form, det, cfg);
    return r;
  }

  std::set<ProjectivePointPair> claimed;
  if (!param.t.is_zero()) {
    const auto points = claimed_zero_set(t);
    claimed.insert(points.begin(), points.end());
    r.identity_checks.push_back(CheckEntry::of("zero_set_distinct", claimed.size() == points.size(),
                                               std::to_string(claimed.size()) + " distinct of " +
                                                   std::to_string(points.size())));
    for (const auto& pt : claimed) r.zeros.push_back(verify_zero(form, map, pt));
    const bool all = std::all_of(r.zeros.begin(), r.zeros.end(), [](const ZeroCertificate& z) { return z.certified(); });
    r.identity_checks.push_back(CheckEntry::of("claimed_zeros_certified", all));
  } else {
    r.notes.push_back("t = 0 is degenerate: zeros come from numeric enumeration plus exact certification");
  }

  const NumericSummary& num = *r.numeric;
  if (num.status != numeric::EnumerationStatus::Ok) {
    r.identity_checks.push_back({"numeric_completeness", CheckStatus::Skipped, num.message});
    r.notes.push_back("numeric enumeration skipped: " + num.message);
  } else {
    bool ok = true;
    std::string detail = std::to_string(num.clusters.size()) + " clusters";
    std::set<ProjectivePointPair> found;
    for (const auto& c : num.clusters) {
      if (!c.certified()) {
        ok = false;
        detail += "; uncertified cluster (" + c.failure + ")";
        continue;
      }
      found.insert(c.certificate->point);
      if (!param.t.is_zero() && !claimed.contains(c.certificate->point)) {
        ok = false;
        detail += "; extra zero " + c.certificate->point.str();
      }
    }
    if (found.size() != num.clusters.size()) {
      ok = false;
      detail += "; clusters rationalize to coinciding points";
    }
    if (!param.t.is_zero() && found.size() != claimed.size()) ok = false;
    r.identity_checks.push_back(CheckEntry::of("numeric_completeness", ok, detail));
    if (param.t.is_zero())
      for (const auto& c : num.clusters)
        if (c.certificate) r.zeros.push_back(*c.certificate);
  }

  r.zero_count = static_cast<int>(
      std::count_if(r.zeros.begin(), r.zeros.end(), [](const ZeroCertificate& z) { return z.certified(); }));
  r.sos_verdict = quarez_sos_verdict(*r.zero_count, true);
  const bool witness = *r.zero_count == kMaxFiniteZerosNonnegative;
  r.identity_checks.push_back(CheckEntry::of(
      "bb33_consistency", *r.zero_count <= kMaxFiniteZerosNonnegative,
      std::to_string(*r.zero_count) + " finite zeros" +
          (witness ? ", attains BB_{3,3} = 10 (previous lower bound 7)" : std::string(", below BB_{3,3} = 10"))));

  if (param.t.is_zero()) {
    r.identity_checks.push_back({"extremality", CheckStatus::Skipped, "degenerate parameter t = 0"});
  } else {
    const auto ext = extremality_check(t);
    r.extremal = ext.kernel_dim == 1 && ext.spans_pt;
    r.identity_checks.push_back(CheckEntry::of(
        "extremality", r.extremal,
        std::to_string(ext.system_rows) + "x36 second-order system, rank " + std::to_string(ext.system_rank) +
            ", kernel dimension " + std::to_string(ext.kernel_dim) + (ext.spans_pt ? ", spanned by p_t" : "")));
  }
  if (r.sos_verdict == SosVerdict::NotSOS)
    r.notes.push_back("NotSOS: finitely many zeros, more than " + std::to_string(kMaxFiniteZerosSos));
  return r;
}

nlohmann::ordered_json to_json(const numeric::SosSearchResult& s, bool include_gram) {
  nlohmann::ordered_json j;
  j["result"] = s.feasible ? "Feasible" : "Infeasible-evidence";
  j["iterations"] = s.iterations;
  j["residual"] = s.residual;
  j["min_eigenvalue"] = s.min_eigenvalue;
  if (include_gram && s.feasible) {
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < 9; ++i) {
      auto row = nlohmann::ordered_json::array();
      for (int k = 0; k < 9; ++k) row.push_back(s.gram(i, k));
      rows.push_back(std::move(row));
    }
    j["gram"] = std::move(rows);
  }
  return j;
}

nlohmann::ordered_json to_json(const ClusterCertificate& c) {
  nlohmann::ordered_json j;
  j["representative"] = c.cluster.representative.coords;
  j["multiplicity"] = c.cluster.multiplicity;
  j["residual"] = c.cluster.residual;
  j["point"] = c.certificate ? nlohmann::ordered_json(c.certificate->point.str()) : nlohmann::ordered_json();
  j["kernel_dim"] = c.kernel_dim;
  j["certified"] = c.certified();
  if (!c.failure.empty()) j["failure"] = c.failure;
  return j;
}

nlohmann::ordered_json to_json(const CertificateReport& r, const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["tool"] = "bqcert";
  j["version"] = BQCERT_VERSION;
  j["config"] = to_json(cfg);
  j["t"] = r.t.str();
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.identity_checks) checks.push_back(to_json(c));
  j["identity_checks"] = std::move(checks);
  auto zeros = nlohmann::ordered_json::array();
  for (const auto& z : r.zeros) zeros.push_back(to_json(z));
  j["zeros"] = std::move(zeros);
  j["zero_count"] = r.zero_count ? nlohmann::ordered_json(*r.zero_count) : nlohmann::ordered_json();
  j["zero_set_finite"] = r.finite();
  j["sos_verdict"] = std::string(to_string(r.sos_verdict));
  j["extremal"] = r.extremal;
  j["bb33"] = kMaxFiniteZerosNonnegative;
  j["bb33_witness"] = r.finite() && *r.zero_count == kMaxFiniteZerosNonnegative;
  j["passed"] = r.passed();
  j["notes"] = r.notes;
  if (r.numeric) {
    nlohmann::ordered_json n;
    n["status"] = std::string(numeric::to_string(r.numeric->status));
    if (!r.numeric->message.empty()) n["message"] = r.numeric->message;
    n["starts"] = r.numeric->diagnostics.starts;
    n["converged"] = r.numeric->diagnostics.converged;
    n["nonconverged"] = r.numeric->diagnostics.nonconverged;
    n["rejected_value"] = r.numeric->diagnostics.rejected_value;
    auto cl = nlohmann::ordered_json::array();
    for (const auto& c : r.numeric->clusters) cl.push_back(to_json(c));
    n["clusters"] = std::move(cl);
    j["numeric"] = std::move(n);
  }
  if (r.gram_search) j["gram_search"] = to_json(*r.gram_search, false);
  return j;
}

}  // namespace bqcert
