#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ucayley::harness {

enum class Scale { small, medium };
std::string to_string(Scale s);
/// "small" | "medium"; throws std::invalid_argument otherwise.
Scale parse_scale(std::string_view text);

struct CheckResult {
  std::string id;
  int criterion = 0;
  /// The statement the check certifies.
  std::string certifies;
  /// Measured quantities, e.g. "|M| = 16".
  std::string detail;
  double budget_seconds = 0.0;
  double seconds = 0.0;
  bool passed = false;
};

struct Options {
  Scale scale = Scale::small;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

/// Runs every check in criterion order; `progress` sees each result as it lands.
std::vector<CheckResult> run_all(const Options& options,
                                 const std::function<void(const CheckResult&)>& progress = {});

/// One criterion's checks, for running criteria separately.
std::vector<CheckResult> run_criterion(int criterion, const Options& options);

inline constexpr int kCriterionCount = 12;

/// Ring specs swept by the classification and Gorenstein checks.
std::vector<std::string> catalog();

/// {checks:[{id, criterion, certifies, detail, budget_seconds, passed}], passed, scale, seed}.
/// Timings are included only when `with_timings` is set.
nlohmann::json report_json(const std::vector<CheckResult>& results, const Options& options, bool with_timings);

}  // namespace ucayley::harness
