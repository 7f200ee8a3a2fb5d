#pragma once

#include <cstdint>

#include "bspec/dsl.hpp"
#include "bspec/report.hpp"

namespace bspec {

struct RunConfig {
  std::size_t thread_bound = 10000;
  unsigned cert_depth = 8;
  std::size_t uniq_bound = 1000000;
  std::uint64_t seed = 0;
  std::size_t random_instances = 4;
  bool randomized = false;  // adds the random group to full runs
};

const std::vector<std::string>& law_groups();

// suite: empty for every group (random only when cfg.randomized), a group name, or a suite block name.
// Throws ConfigError for an unknown suite.
Report run_suite(const dsl::Workspace& ws, const std::string& suite, const RunConfig& cfg);
Report run_limit(const dsl::Workspace& ws, const std::string& spectrum, bool direct, const RunConfig& cfg);
Report run_cofinal_iso(const dsl::Workspace& ws, const std::string& cofinal, const std::optional<std::string>& spectrum,
                       const RunConfig& cfg);
Report run_duality(const dsl::Workspace& ws, const std::string& pool, const RunConfig& cfg);

}  // namespace bspec
