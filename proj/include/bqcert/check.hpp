#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace bqcert {

enum class CheckStatus { Pass, Fail, Skipped };

inline std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

/// One named pass/fail line of a certificate.
struct CheckEntry {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;

  bool passed() const { return status == CheckStatus::Pass; }
  static CheckEntry of(std::string name, bool ok, std::string detail = {}) {
    return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
  }
};

inline bool all_passed(const std::vector<CheckEntry>& checks) {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

inline nlohmann::ordered_json to_json(const CheckEntry& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["status"] = std::string(to_string(c.status));
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

}  // namespace bqcert
