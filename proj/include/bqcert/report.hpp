#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bqcert/certify.hpp"
#include "bqcert/numeric_search.hpp"

namespace bqcert {

struct RunConfig {
  std::string command;
  std::string t;  // exact "p/q"
  int grid_n = 2000;
  double tol_value = 1e-10;
  double tol_cluster = 1e-6;
  int max_iter = 5000;
  double sos_tol = 1e-9;
  std::string sos_method = "douglas-rachford";
  std::string out;
  std::string format = "json";
};
nlohmann::ordered_json to_json(const RunConfig& c);
/// Throws std::invalid_argument when a tolerance or count is not positive.
void validate(const RunConfig& c);

/// A numeric x-zero pushed through rationalization and exact certification.
struct ClusterCertificate {
  numeric::ZeroCluster cluster;
  std::optional<ZeroCertificate> certificate;  // empty if no rational x or no kernel
  int kernel_dim = 0;
  std::string failure;

  bool certified() const { return certificate && certificate->certified(); }
};

struct NumericSummary {
  numeric::EnumerationStatus status = numeric::EnumerationStatus::Ok;
  std::string message;
  numeric::EnumerationDiagnostics diagnostics;
  std::vector<ClusterCertificate> clusters;
};

/// Rationalizes each cluster of det Phi_t(x x^T) and certifies ([x],[y])
/// with y spanning the kernel of Phi_t(x x^T).
NumericSummary certify_numeric_zeros(const Rational& t, const numeric::EnumerationOptions& opts);

struct CertificateReport {
  Rational t;
  std::vector<CheckEntry> identity_checks;
  std::vector<ZeroCertificate> zeros;
  std::optional<int> zero_count;  // empty: the zero set is infinite
  SosVerdict sos_verdict = SosVerdict::Unknown;
  bool extremal = false;
  std::vector<std::string> notes;
  std::optional<NumericSummary> numeric;
  std::optional<numeric::SosSearchResult> gram_search;

  bool finite() const { return zero_count.has_value(); }
  /// All exact checks passed and every listed zero is certified.
  bool passed() const;
};

CertificateReport build_report(const Rational& t, const RunConfig& cfg);

nlohmann::ordered_json to_json(const CertificateReport& r, const RunConfig& cfg);
nlohmann::ordered_json to_json(const numeric::SosSearchResult& s, bool include_gram);
nlohmann::ordered_json to_json(const ClusterCertificate& c);

}  // namespace bqcert
