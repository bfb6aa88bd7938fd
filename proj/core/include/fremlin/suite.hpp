#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fremlin/report.hpp"
#include "fremlin/rng.hpp"
#include "fremlin/seminorm.hpp"

namespace fremlin {

struct SuiteConfig {
  std::uint64_t seed = 42;
  /// Samples per sampled statement (instances for the hull-identity suite).
  std::size_t samples = 200;
  /// Dimensions (n, m, g) of the universal-property instance.
  std::size_t n = 2, m = 3, g = 8;
  /// Parallelism only; never changes the report.
  std::size_t workers = 1;
};

struct SuiteResult {
  std::vector<Report> reports;

  bool passed() const noexcept;
  /// Deterministic report: depends on the seed, sample count and dimensions only.
  std::string to_json_text(const SuiteConfig& config) const;
  std::string to_text() const;
};

/// Family of `count` weighted l1 seminorms with 0/1 weights. A separating
/// family covers every coordinate; otherwise coordinate `blind` is left unseen.
SeminormFamily random_unit_family(CounterRng& rng, std::size_t dim, std::size_t count, bool separating,
                                  std::size_t blind = 0);

/// Every property suite, each on its own stream derived from config.seed.
SuiteResult run_suite(const SuiteConfig& config);

}  // namespace fremlin
