#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tconj/rootsystem.hpp"

namespace tconj {

// One named check with machine-readable evidence. Checks never throw for
// mathematical failures; those become pass = false with details.
struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  nlohmann::ordered_json details;
};

struct VerifyOptions {
  std::uint64_t seed = 20260822;
  std::optional<std::string> cache_dir;
  // Restrict the relations sweep to a single configuration.
  std::optional<Family> family;
  std::optional<int> rank;
  std::optional<std::int64_t> p;
};

// suite is one of "chevalley-relations", "lemmas", "paper-examples", "all".
// Results are fully determined by the options (the seed drives every
// sampled trial), so repeated runs emit identical reports.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options);

nlohmann::ordered_json report_json(const std::string& suite, const VerifyOptions& options,
                                   const std::vector<CheckResult>& results);
std::string report_csv(const std::vector<CheckResult>& results);

}  // namespace tconj
