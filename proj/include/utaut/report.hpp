#ifndef UTAUT_REPORT_HPP
#define UTAUT_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "utaut/enumerate.hpp"

namespace utaut {

struct RunConfig {
  std::string command; // info, classes, autc, verify-a, verify-b, thm27, burnside, report
  int p = 2;
  int m = 1;
  int n = 3;
  int k = 3;
  std::string method = "brute"; // brute | structured | generated | all
  std::vector<int> c_literal;   // base-p digits, low power first; empty = 1
  std::string out_path;
  bool csv = false;
  std::uint64_t max_order = kDefaultOrderCap;
  std::uint64_t max_candidates = kDefaultCandidateCap;
  std::size_t closure_cap = kDefaultClosureCap;
  int threads = 0; // 0 = hardware concurrency
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitBadParams = 2;
inline constexpr int kExitCapExceeded = 3;

/// Dispatches the command, prints a human-readable summary to `human`, writes
/// the JSON (and optional CSV histogram) files when configured, and returns
/// the process exit code. When `out` is given the report object is copied
/// there as well (used by tests).
int run(const RunConfig& config, std::ostream& human, nlohmann::ordered_json* out = nullptr);

} // namespace utaut

#endif
