#include "fremlin/suite.hpp"

#include <sstream>

#include "fremlin/errors.hpp"
#include "fremlin/hull_checks.hpp"
#include "fremlin/neighborhood.hpp"
#include "fremlin/projective_checks.hpp"
#include "fremlin/sampling.hpp"
#include "fremlin/universal.hpp"

namespace fremlin {

bool SuiteResult::passed() const noexcept {
  for (const auto& r : reports)
    if (!r.passed()) return false;
  return true;
}

std::string SuiteResult::to_json_text(const SuiteConfig& config) const {
  nlohmann::ordered_json out;
  out["seed"] = config.seed;
  out["samples"] = config.samples;
  out["dims"] = {config.n, config.m, config.g};
  out["passed"] = passed();
  auto& arr = out["suites"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  return out.dump(2) + "\n";
}

std::string SuiteResult::to_text() const {
  std::ostringstream os;
  for (const auto& r : reports) os << "== " << r.suite << '\n' << r.to_text();
  os << (passed() ? "all expected properties hold\n" : "some expected property failed\n");
  return os.str();
}

SeminormFamily random_unit_family(CounterRng& rng, std::size_t dim, std::size_t count, bool separating,
                                  std::size_t blind) {
  if (dim == 0 || count == 0) throw InvalidArgument("random_unit_family: dim and count must be positive");
  if (!separating && blind >= dim) throw InvalidArgument("random_unit_family: blind coordinate out of range");
  std::vector<std::vector<Rational>> weights(count, std::vector<Rational>(dim));
  for (auto& w : weights)
    for (auto& c : w) c = rng.coin() ? 1 : 0;
  // Each coordinate must be seen by some member (or by none, for `blind`).
  for (std::size_t i = 0; i < dim; ++i) {
    if (!separating && i == blind) {
      for (auto& w : weights) w[i] = 0;
      continue;
    }
    bool seen = false;
    for (const auto& w : weights) seen = seen || w[i] != 0;
    if (!seen) weights[rng.uniform_int(0, static_cast<std::int64_t>(count) - 1)][i] = 1;
  }
  std::vector<RieszSeminorm> members;
  for (auto& w : weights) members.push_back(RieszSeminorm::weighted_l1(std::move(w)));
  return SeminormFamily(std::move(members));
}

SuiteResult run_suite(const SuiteConfig& config) {
  if (config.samples == 0 || config.n == 0 || config.m == 0 || config.g == 0)
    throw InvalidArgument("run_suite: samples and dimensions must be positive");
  const std::uint64_t seed = config.seed;
  const std::size_t s = config.samples, w = config.workers;
  const CounterRng root(seed, 0x7375697465);
  SuiteResult result;

  result.reports.push_back(lattice_check(seed, s, 6, w));
  result.reports.push_back(lemma1_suite(seed, s, 5, w));
  result.reports.push_back(solid_closure_check(seed, s, 4, w));
  result.reports.push_back(gauge_consistency_check(seed, s, 4, w));
  result.reports.push_back(density_check(3, seed, s, w));

  {
    CounterRng rng = root.split(0);
    const TensorNbhd W1 = TensorNbhd::from_seminorms(random_seminorm(rng, config.n, SeminormKind::WeightedL1),
                                                     random_seminorm(rng, config.m, SeminormKind::PolyhedralGauge));
    const TensorNbhd W2 = TensorNbhd::from_seminorms(random_seminorm(rng, config.n, SeminormKind::PolyhedralGauge),
                                                     random_seminorm(rng, config.m, SeminormKind::WeightedOrderUnit));
    result.reports.push_back(base_axiom_check(W1, W2, seed, s, w));
  }

  result.reports.push_back(gauge_equivalence_suite(seed, s, 3, w));
  result.reports.push_back(cross_property_suite(seed, s, 4, w));
  result.reports.push_back(certificate_axioms_check(seed, s, 3, w));

  {
    CounterRng rng = root.split(1);
    const SeminormFamily P = random_unit_family(rng, config.n, 3, true);
    const SeminormFamily Q = random_unit_family(rng, config.m, 3, true);
    Report sep = hausdorff_check(P, Q, s, seed, w);
    const SeminormFamily Pb = random_unit_family(rng, config.n, 3, false, config.n - 1);
    Report blind = hausdorff_check(Pb, Q, 1, seed, w);
    for (auto& l : blind.lines) l.id += "/non-separating-fixture";
    sep.append(blind);
    result.reports.push_back(std::move(sep));
  }

  {
    CounterRng rng = root.split(2);
    const LatticeBimorphism phi = random_bimorphism(rng, config.n, config.m, config.g);
    Report universal = universal_property_check(phi, s, seed, w);
    const RieszSeminorm p = random_seminorm(rng, config.n, SeminormKind::WeightedL1);
    const RieszSeminorm q = random_seminorm(rng, config.m, SeminormKind::WeightedOrderUnit);
    const RieszSeminorm r = random_seminorm(rng, config.g, SeminormKind::WeightedL1);
    universal.append(continuity_certificate(induce_hom(phi), p, q, r, s, seed, w).report);
    result.reports.push_back(std::move(universal));
  }
  return result;
}

}  // namespace fremlin
