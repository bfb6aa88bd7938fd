#pragma once

#include <cstddef>
#include <cstdint>

#include "fremlin/neighborhood.hpp"
#include "fremlin/projective.hpp"
#include "fremlin/report.hpp"
#include "fremlin/seminorm.hpp"

namespace fremlin {

/// Budget of the deliberately weak certificate used to produce intervals with
/// a gap: entrywise and dominating bounds plus one short alternating run.
SearchBudget weak_budget(std::uint64_t seed = 0);

/// Compares the gauge of W (read off its generators and via nbhd_member) with
/// certificates for (p (x) q)(u) at radii below the lower bound, between the
/// bounds and above the upper bound. W must be built from the unit balls of
/// p and q; throws InvalidArgument otherwise.
Report gauge_equivalence_check(const TensorNbhd& W, const RieszSeminorm& p, const RieszSeminorm& q,
                               const TensorElement& u, std::uint64_t seed);
/// The same over random (p, q, u) of every bounded kind pair.
Report gauge_equivalence_suite(std::uint64_t seed, std::size_t samples, std::size_t max_dim = 3,
                               std::size_t workers = 1);

/// (p (x) q)(x0 (x) y0) = p(x0) q(y0): the certified interval contains the
/// product and closes on it, closed forms agree, and the product of the
/// supporting functionals is a dominated dual form attaining it.
Report cross_property_check(const RieszSeminorm& p, const RieszSeminorm& q, std::size_t samples,
                            std::uint64_t seed, std::size_t workers = 1);
/// cross_property_check over every kind pair with random seminorms.
Report cross_property_suite(std::uint64_t seed, std::size_t samples, std::size_t max_dim = 4,
                            std::size_t workers = 1);

/// For separating families every nonzero u has a pair (p, q) certifying
/// lower(u) >= p(x0) q(y0) > 0 with x0 = |u_ij| e_i, y0 = e_j. For a
/// non-separating family the line expects a counterexample and records it.
Report hausdorff_check(const SeminormFamily& P, const SeminormFamily& Q, std::size_t samples, std::uint64_t seed,
                       std::size_t workers = 1);

/// Seminorm axioms at certificate level: subadditivity through concatenated
/// witnesses, homogeneity through scaled witnesses, monotonicity between
/// certified bounds, and exact re-verification of every certificate.
Report certificate_axioms_check(std::uint64_t seed, std::size_t samples, std::size_t max_dim = 3,
                                std::size_t workers = 1);

}  // namespace fremlin
