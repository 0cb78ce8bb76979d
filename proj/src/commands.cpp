#include "bqcert/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace bqcert::cli {

namespace {

bool emit(const RunConfig& cfg, std::ostream& out, std::ostream& err, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    return true;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) {
    err << "error: cannot open output file '" << cfg.out << "'\n";
    return false;
  }
  f << text;
  return static_cast<bool>(f);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

/// Parses cfg.t, reporting to err. Returns nullopt on failure.
std::optional<Rational> parse_t(const std::string& text, std::ostream& err) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    err << "error: invalid --t: " << e.what() << "\n";
    return std::nullopt;
  }
}

bool check_config(const RunConfig& cfg, std::ostream& err) {
  try {
    validate(cfg);
    return true;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return false;
  }
}

std::string zero_count_str(const CertificateReport& r) { return r.zero_count ? std::to_string(*r.zero_count) : "inf"; }

}  // namespace

std::vector<std::string> split_t_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ',')) {
    cur.erase(0, cur.find_first_not_of(" \t"));
    cur.erase(cur.find_last_not_of(" \t") + 1);
    out.push_back(cur);
  }
  if (out.size() == 1 && out.front().empty()) out.clear();
  return out;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto t = parse_t(cfg.t, err);
  if (!t || !check_config(cfg, err)) return kExitInvalidInput;
  const CertificateReport report = build_report(*t, cfg);
  for (const auto& c : report.identity_checks)
    if (c.status == CheckStatus::Fail) err << "FAILED " << c.name << ": " << c.detail << "\n";
  if (!emit(cfg, out, err, to_json(report, cfg).dump(2) + "\n")) return kExitInvalidInput;
  return report.passed() ? kExitOk : kExitFailedCertificate;
}

int cmd_zeros(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto t = parse_t(cfg.t, err);
  if (!t || !check_config(cfg, err)) return kExitInvalidInput;
  numeric::EnumerationOptions opts;
  opts.grid_n = cfg.grid_n;
  opts.tol_value = cfg.tol_value;
  opts.tol_cluster = cfg.tol_cluster;
  const NumericSummary summary = certify_numeric_zeros(*t, opts);
  if (summary.status != numeric::EnumerationStatus::Ok) {
    err << "refused: near-degenerate parameter t = " << t->str() << " (" << summary.message << ")\n";
    return kExitInvalidInput;
  }
  const bool all = std::all_of(summary.clusters.begin(), summary.clusters.end(),
                               [](const ClusterCertificate& c) { return c.certified(); });
  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["tool"] = "bqcert";
    j["version"] = BQCERT_VERSION;
    j["config"] = to_json(cfg);
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : summary.clusters) arr.push_back(to_json(c));
    j["zeros"] = std::move(arr);
    j["certified_count"] = std::count_if(summary.clusters.begin(), summary.clusters.end(),
                                         [](const ClusterCertificate& c) { return c.certified(); });
    os << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "point,status,multiplicity,residual\n";
    for (const auto& c : summary.clusters)
      os << csv_field(c.certificate ? c.certificate->point.str() : "") << ','
         << (c.certified() ? "certified" : "uncertified") << ',' << c.cluster.multiplicity << ','
         << format_double(c.cluster.residual) << "\n";
  } else {
    for (const auto& c : summary.clusters) {
      if (c.certified()) os << c.certificate->point.str() << " certified\n";
      else os << "cluster near (" << format_double(c.cluster.representative.coords[0]) << ", "
              << format_double(c.cluster.representative.coords[1]) << ", "
              << format_double(c.cluster.representative.coords[2]) << ") uncertified: " << c.failure << "\n";
    }
  }
  if (!emit(cfg, out, err, os.str())) return kExitInvalidInput;
  if (!all) err << "numeric zero count " << summary.clusters.size() << " differs from certified count\n";
  return all ? kExitOk : kExitFailedCertificate;
}

int cmd_scan(const RunConfig& cfg, const std::vector<std::string>& t_list, std::ostream& out, std::ostream& err) {
  if (!check_config(cfg, err)) return kExitInvalidInput;
  std::ostringstream os;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  int failed = 0;
  for (const auto& text : t_list) {
    nlohmann::ordered_json row;
    row["t"] = text;
    std::string error;
    std::optional<CertificateReport> report;
    double min_det = std::nan("");
    try {
      const Rational t = Rational::parse(text);
      RunConfig sub = cfg;
      sub.t = t.str();
      report = build_report(t, sub);
      min_det = numeric::min_on_sphere(numeric::det_phi_numeric(t.to_double()), cfg.grid_n).min_value;
      if (!report->passed()) error = "failed certificate";
    } catch (const std::exception& e) {
      error = e.what();
    }
    if (!error.empty()) ++failed;
    if (cfg.format == "json") {
      row["zero_count"] = report ? (report->zero_count ? nlohmann::ordered_json(*report->zero_count)
                                                       : nlohmann::ordered_json("inf"))
                                 : nlohmann::ordered_json();
      row["extremal"] = report ? nlohmann::ordered_json(report->extremal) : nlohmann::ordered_json();
      row["sos_verdict"] = report ? nlohmann::ordered_json(std::string(to_string(report->sos_verdict)))
                                  : nlohmann::ordered_json();
      row["min_det"] = report ? nlohmann::ordered_json(min_det) : nlohmann::ordered_json();
      row["error"] = error;
      rows.push_back(std::move(row));
    } else {
      os << csv_field(text) << ',';
      if (report)
        os << zero_count_str(*report) << ',' << (report->extremal ? "true" : "false") << ','
           << to_string(report->sos_verdict) << ',' << format_double(min_det);
      else
        os << ",,,";
      os << ',' << csv_field(error) << "\n";
    }
  }
  std::string text;
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["tool"] = "bqcert";
    j["version"] = BQCERT_VERSION;
    j["config"] = to_json(cfg);
    j["rows"] = std::move(rows);
    text = j.dump(2) + "\n";
  } else {
    text = std::string(kScanHeader) + "\n" + os.str();
  }
  if (!emit(cfg, out, err, text)) return kExitInvalidInput;
  return !t_list.empty() && failed == static_cast<int>(t_list.size()) ? kExitFailedCertificate : kExitOk;
}

int cmd_sos_check(const RunConfig& cfg, const std::string& form_path, std::optional<int> zero_count,
                  std::ostream& out, std::ostream& err) {
  if (!check_config(cfg, err)) return kExitInvalidInput;
  FormFile file;
  try {
    std::ifstream in(form_path);
    if (!in) throw std::invalid_argument("cannot open '" + form_path + "'");
    file = form_from_json(nlohmann::json::parse(in));
  } catch (const std::exception& e) {
    err << "error: cannot read form file: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  const auto search = numeric::alternating_projection_sos(file.form, cfg.max_iter, cfg.sos_tol,
                                                           numeric::parse_sos_method(cfg.sos_method));
  nlohmann::ordered_json j;
  j["tool"] = "bqcert";
  j["version"] = BQCERT_VERSION;
  j["config"] = to_json(cfg);
  j["form"] = form_path;
  if (file.t) j["t"] = file.t->str();
  j["sos_search"] = to_json(search, true);
  SosVerdict verdict = search.feasible ? SosVerdict::SOS : SosVerdict::Unknown;
  if (zero_count) {
    const SosVerdict q = quarez_sos_verdict(*zero_count, true);
    j["zero_count"] = *zero_count;
    j["quarez_verdict"] = std::string(to_string(q));
    if (q == SosVerdict::NotSOS) {
      if (search.feasible) err << "warning: Gram witness found although the zero count excludes SOS\n";
      else verdict = SosVerdict::NotSOS;
    }
  }
  j["verdict"] = std::string(to_string(verdict));
  if (!emit(cfg, out, err, j.dump(2) + "\n")) return kExitInvalidInput;
  return kExitOk;
}

int cmd_make_form(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto t = parse_t(cfg.t, err);
  if (!t) return kExitInvalidInput;
  const auto j = form_to_json(choi_form(build_phi_t(*t)), *t);
  if (!emit(cfg, out, err, j.dump(2) + "\n")) return kExitInvalidInput;
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certificates for the positive, not completely positive maps Phi_t on Sym3", "bqcert"};
  app.set_version_flag("--version", std::string(BQCERT_VERSION));
  app.require_subcommand(1);

  RunConfig cfg;
  std::string t_list, form_path;
  std::optional<int> zero_count;

  auto add_numeric = [&](CLI::App* sub) {
    sub->add_option("--grid", cfg.grid_n, "number of multistart points");
    sub->add_option("--tol-value", cfg.tol_value, "max determinant value of an accepted zero");
    sub->add_option("--tol-cluster", cfg.tol_cluster, "projective angle for merging zeros");
  };
  auto add_output = [&](CLI::App* sub, const std::vector<std::string>& formats) {
    sub->add_option("--out", cfg.out, "write output to this file instead of stdout");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
  };

  auto* verify = app.add_subcommand("verify", "run every exact certificate for Phi_t");
  verify->add_option("--t", cfg.t, "parameter as an exact rational p/q")->required();
  add_numeric(verify);
  verify->add_option("--max-iter", cfg.max_iter, "Gram search iterations (t = +-1 only)");
  verify->add_option("--method", cfg.sos_method, "Gram search method: douglas-rachford|dykstra");
  add_output(verify, {"json"});

  auto* zeros = app.add_subcommand("zeros", "numeric zero enumeration with exact certification");
  zeros->add_option("--t", cfg.t, "parameter as an exact rational p/q")->required();
  add_numeric(zeros);
  add_output(zeros, {"text", "csv", "json"});

  auto* scan = app.add_subcommand("scan", "one CSV row per t");
  scan->add_option("--t-list", t_list, "comma-separated exact rationals");
  add_numeric(scan);
  add_output(scan, {"csv", "json"});

  auto* sos = app.add_subcommand("sos-check", "Gram-matrix SOS search for a form file");
  sos->add_option("form-file", form_path, "biquadratic form JSON")->required();
  sos->add_option("--zero-count", zero_count, "known finite real zero count");
  sos->add_option("--max-iter", cfg.max_iter, "alternating projection iterations");
  sos->add_option("--tol", cfg.sos_tol, "feasibility tolerance");
  sos->add_option("--method", cfg.sos_method, "douglas-rachford|dykstra");
  add_output(sos, {"json"});

  auto* make_form = app.add_subcommand("make-form", "write p_t as form JSON");
  make_form->add_option("--t", cfg.t, "parameter as an exact rational p/q")->required();
  add_output(make_form, {"json"});

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  const bool format_given = [&] {
    return std::find_if(args.begin(), args.end(), [](const std::string& a) { return a.rfind("--format", 0) == 0; }) !=
           args.end();
  }();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (verify->parsed()) {
      cfg.command = "verify";
      if (!format_given) cfg.format = "json";
      return cmd_verify(cfg, out, err);
    }
    if (zeros->parsed()) {
      cfg.command = "zeros";
      if (!format_given) cfg.format = "text";
      return cmd_zeros(cfg, out, err);
    }
    if (scan->parsed()) {
      cfg.command = "scan";
      if (!format_given) cfg.format = "csv";
      return cmd_scan(cfg, split_t_list(t_list), out, err);
    }
    if (sos->parsed()) {
      cfg.command = "sos-check";
      return cmd_sos_check(cfg, form_path, zero_count, out, err);
    }
    cfg.command = "make-form";
    return cmd_make_form(cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace bqcert::cli
