#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fremlin/parallel.hpp"

namespace fremlin {

enum class Expectation { Holds, Refuted, Informational };

std::string to_string(Expectation e);

/// Outcome of one sampled statement. A `Holds` statement passes with zero
/// violations; a `Refuted` statement passes once a counterexample is on record.
struct CheckLine {
  std::string id;
  std::string statement;
  Expectation expected = Expectation::Holds;
  std::size_t samples = 0;
  std::size_t violations = 0;
  std::string witness;
  std::string note;

  bool passed() const noexcept;
  void record(bool ok, const std::string& description);
  template <class Describe>
  void check(bool ok, Describe&& describe) {
    ++samples;
    if (!ok && violations++ == 0) witness = describe();
  }
};

struct Report {
  std::string suite;
  std::vector<CheckLine> lines;

  bool passed() const noexcept;
  CheckLine* find(const std::string& id);
  const CheckLine* find(const std::string& id) const;
  void append(const Report& other);
  nlohmann::ordered_json to_json() const;
  /// One "PASS|FAIL  id  statement  (samples, violations)" line per check.
  std::string to_text() const;
};

/// Per-sample result for sharded suites; merged in sample-index order.
struct SampleOutcome {
  bool counted = true;
  bool ok = true;
  std::string witness;
};

void merge_into(CheckLine& line, const std::vector<SampleOutcome>& outcomes);

/// Runs fn(i) for every sample index, where fn returns one SampleOutcome per
/// entry of `lines`, and merges the outcomes in index order.
template <class Fn>
void run_sampled(const std::vector<CheckLine*>& lines, std::size_t samples, std::size_t workers, Fn&& fn) {
  auto results = parallel_map(samples, workers, fn);
  for (std::size_t l = 0; l < lines.size(); ++l)
    for (const auto& r : results) {
      const SampleOutcome& o = r.at(l);
      if (o.counted) lines[l]->check(o.ok, [&] { return o.witness; });
    }
}

}  // namespace fremlin
