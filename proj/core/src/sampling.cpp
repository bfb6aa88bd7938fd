#include "fremlin/sampling.hpp"

namespace fremlin {

LatticeElement random_element(CounterRng& rng, std::size_t dim, std::int64_t bound, std::int64_t denominator) {
  std::vector<Rational> c(dim);
  for (auto& v : c) v = ratio(rng.uniform_int(-bound * denominator, bound * denominator), denominator);
  return LatticeElement(std::move(c));
}

LatticeElement random_positive(CounterRng& rng, std::size_t dim, std::int64_t bound, std::int64_t denominator) {
  std::vector<Rational> c(dim);
  for (auto& v : c) v = ratio(rng.uniform_int(0, bound * denominator), denominator);
  return LatticeElement(std::move(c));
}

TensorElement random_tensor(CounterRng& rng, std::size_t rows, std::size_t cols, std::int64_t bound,
                            std::int64_t denominator) {
  return TensorElement::from_vector(rows, cols, random_element(rng, rows * cols, bound, denominator));
}

std::vector<LatticeElement> random_generators(CounterRng& rng, std::size_t dim, std::size_t count,
                                              std::int64_t bound) {
  std::vector<LatticeElement> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_element(rng, dim, bound));
  return out;
}

RieszSeminorm random_seminorm(CounterRng& rng, std::size_t dim, SeminormKind kind) {
  auto weights = [&] {
    std::vector<Rational> w(dim);
    for (auto& v : w) v = ratio(rng.uniform_int(1, 4), 2);
    return w;
  };
  switch (kind) {
    case SeminormKind::WeightedL1:
      return RieszSeminorm::weighted_l1(weights());
    case SeminormKind::WeightedOrderUnit:
      return RieszSeminorm::order_unit(weights());
    case SeminormKind::PolyhedralGauge:
      break;
  }
  return RieszSeminorm::gauge_of(random_ball(rng, dim, static_cast<std::size_t>(rng.uniform_int(1, 3))));
}

GeneratedSet random_ball(CounterRng& rng, std::size_t dim, std::size_t count) {
  std::vector<LatticeElement> gens = random_generators(rng, dim, count, 3);
  // Patch coordinates nobody reaches so the gauge stays finite.
  for (std::size_t i = 0; i < dim; ++i) {
    bool reached = false;
    for (const auto& g : gens) reached = reached || g[i] != 0;
    if (!reached) {
      std::vector<Rational> c(gens[i % count].coords().begin(), gens[i % count].coords().end());
      c[i] = rng.uniform_int(1, 3);
      gens[i % count] = LatticeElement(std::move(c));
    }
  }
  return GeneratedSet(std::move(gens), {Hull::Sol, Hull::ConvB});
}

LatticeElement random_below(CounterRng& rng, const LatticeElement& bound, std::int64_t denominator) {
  std::vector<Rational> c(bound.dim());
  for (std::size_t i = 0; i < bound.dim(); ++i) {
    const Rational b = abs_value(bound[i]);
    c[i] = rng.uniform_rational(-b, b, denominator);
  }
  return LatticeElement(std::move(c));
}

Matrix random_lattice_hom(CounterRng& rng, std::size_t dim, std::size_t target) {
  Matrix a(target, std::vector<Rational>(dim));
  for (auto& row : a) row[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(dim) - 1))] = rng.uniform_int(0, 3);
  return a;
}

}  // namespace fremlin
