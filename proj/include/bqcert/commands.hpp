#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bqcert/report.hpp"

namespace bqcert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedCertificate = 1;
inline constexpr int kExitInvalidInput = 2;

inline constexpr const char* kScanHeader = "t,zero_count,extremal,sos_verdict,min_det,error";

/// Each command writes its result to `out` (or to cfg.out when set) and
/// diagnostics to `err`, and returns the process exit code.
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_zeros(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_scan(const RunConfig& cfg, const std::vector<std::string>& t_list, std::ostream& out, std::ostream& err);
int cmd_sos_check(const RunConfig& cfg, const std::string& form_path, std::optional<int> zero_count,
                  std::ostream& out, std::ostream& err);
int cmd_make_form(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Splits "2,3,1/2" into its entries; the empty string gives an empty list.
std::vector<std::string> split_t_list(const std::string& s);

/// Full command line front end (argv[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bqcert::cli
