#ifndef CONTRAGRAPH_CORE_VERIFY_HPP
#define CONTRAGRAPH_CORE_VERIFY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cg {

struct CheckResult {
  std::string name;
  std::string status;  // pass | fail | limit
  std::map<std::string, std::int64_t> counters;
  std::vector<std::string> failures;
  double wall_ms = 0.0;
  double wall_limit_ms = 0.0;
};

struct RunReport {
  std::string version;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (c.status != "pass") return false;
    return !checks.empty();
  }
};

inline constexpr std::uint64_t kDefaultVerifySeed = 1;

// Names accepted as a verification scope, in suite order.
std::vector<std::string> verify_check_names();

// Runs the full suite ("all") or one named check. Deterministic for a fixed
// seed up to the timing fields.
RunReport run_verification(const std::string& scope, std::uint64_t seed = kDefaultVerifySeed);

std::string run_report_to_json(const RunReport& report);

}  // namespace cg

#endif
