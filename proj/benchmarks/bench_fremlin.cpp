#include <benchmark/benchmark.h>

#include "fremlin/hulls.hpp"
#include "fremlin/lp.hpp"
#include "fremlin/neighborhood.hpp"
#include "fremlin/projective.hpp"
#include "fremlin/projective_checks.hpp"
#include "fremlin/sampling.hpp"

using namespace fremlin;

namespace {

struct Instance {
  RieszSeminorm p, q;
  TensorElement u;
};

Instance make_instance(std::size_t dim, SeminormKind kp, SeminormKind kq, std::uint64_t seed) {
  CounterRng rng(seed, 0x62656e);
  RieszSeminorm p = random_seminorm(rng, dim, kp);
  RieszSeminorm q = random_seminorm(rng, dim, kq);
  return {std::move(p), std::move(q), random_tensor(rng, dim, dim, 4, 2)};
}

void BM_CertifyExact(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const Instance in = make_instance(dim, SeminormKind::PolyhedralGauge, SeminormKind::WeightedOrderUnit, 1);
  for (auto _ : state) benchmark::DoNotOptimize(seminorm_certify(in.p, in.q, in.u));
}
BENCHMARK(BM_CertifyExact)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_CertifyClosedFormPair(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const Instance in = make_instance(dim, SeminormKind::WeightedL1, SeminormKind::WeightedL1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(seminorm_certify(in.p, in.q, in.u));
}
BENCHMARK(BM_CertifyClosedFormPair)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_CertifyWeakBudget(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const Instance in = make_instance(dim, SeminormKind::PolyhedralGauge, SeminormKind::PolyhedralGauge, 3);
  for (auto _ : state) benchmark::DoNotOptimize(seminorm_certify(in.p, in.q, in.u, weak_budget(0)));
}
BENCHMARK(BM_CertifyWeakBudget)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_SimplexCovering(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  CounterRng rng(4);
  LinearProgram lp(2 * n);
  lp.set_objective(std::vector<Rational>(2 * n, Rational(1)));
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Rational> row(2 * n);
    for (auto& c : row) c = rng.uniform_int(0, 3);
    lp.add_constraint(std::move(row), Sense::GreaterEqual, rng.uniform_int(1, 5));
  }
  for (auto _ : state) benchmark::DoNotOptimize(solve(lp));
}
BENCHMARK(BM_SimplexCovering)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);

void BM_HullMembership(benchmark::State& state) {
  CounterRng rng(5);
  const GeneratedSet S(random_generators(rng, 4, static_cast<std::size_t>(state.range(0))), {Hull::Sol, Hull::ConvB});
  const LatticeElement x = random_element(rng, 4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(member(S, x));
}
BENCHMARK(BM_HullMembership)->DenseRange(2, 8, 3)->Unit(benchmark::kMicrosecond);

void BM_NbhdMember(benchmark::State& state) {
  CounterRng rng(6);
  const TensorNbhd W(random_ball(rng, 3, 3), random_ball(rng, 3, 3));
  const TensorElement u = random_tensor(rng, 3, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(nbhd_member(W, u));
}
BENCHMARK(BM_NbhdMember)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
