#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fremlin/hulls.hpp"
#include "fremlin/lattice.hpp"
#include "fremlin/rng.hpp"
#include "fremlin/seminorm.hpp"
#include "fremlin/tensor.hpp"

namespace fremlin {

/// Random instance generators shared by the suites, tests and benchmarks.
/// Coordinates are k / denominator with k uniform, so every value is exact.
LatticeElement random_element(CounterRng& rng, std::size_t dim, std::int64_t bound = 5, std::int64_t denominator = 1);
LatticeElement random_positive(CounterRng& rng, std::size_t dim, std::int64_t bound = 5, std::int64_t denominator = 1);
TensorElement random_tensor(CounterRng& rng, std::size_t rows, std::size_t cols, std::int64_t bound = 5,
                            std::int64_t denominator = 1);
std::vector<LatticeElement> random_generators(CounterRng& rng, std::size_t dim, std::size_t count,
                                              std::int64_t bound = 5);

/// Uniform grid point z with |z| <= |bound| (steps of |bound_i| / denominator).
LatticeElement random_below(CounterRng& rng, const LatticeElement& bound, std::int64_t denominator = 8);

/// Random lattice homomorphism Q^dim -> Q^target: one nonnegative entry (possibly
/// zero) per row.
Matrix random_lattice_hom(CounterRng& rng, std::size_t dim, std::size_t target);

/// Weights in {1, ..., 4} / 2; the order-unit kind never gets zero weights.
RieszSeminorm random_seminorm(CounterRng& rng, std::size_t dim, SeminormKind kind);

/// Generators of a convex-solid neighborhood that reach every coordinate.
GeneratedSet random_ball(CounterRng& rng, std::size_t dim, std::size_t count);

}  // namespace fremlin
