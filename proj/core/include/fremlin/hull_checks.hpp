#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "fremlin/hulls.hpp"
#include "fremlin/lattice.hpp"
#include "fremlin/report.hpp"

namespace fremlin {

/// Knobs for the scaling identities (alpha) and the image identity (hom).
/// Unset values are drawn per sample.
struct HullIdentityOptions {
  std::optional<Rational> alpha;
  std::optional<Matrix> hom;
};

/// Hull identities for finite sets A, B, numbered 1..11:
///   1  Conv(A + B) = Conv(A) + Conv(B)
///   2  Conv_b(A + B) = Conv_b(A) + Conv_b(B)
///   3  Conv_b(A u B) in Conv_b(A) u Conv_b(B), and the same for Conv
///   4  Conv_b(A ^ B) in Conv_b(A) ^ Conv_b(B), and the same for Conv
///   5  Sol(A + B) in Sol(A) + Sol(B)
///   6  H(alpha A) = alpha H(A) for H in {Sol, Conv_b, Conv}
///   7  Sol(A u B) in Sol(A) u Sol(B)
///   8  Sol(A ^ B) in Sol(A) ^ Sol(B)
///   9  Sol(A v B) in Sol(A) v Sol(B)
///   10 Sol(A meet B) in Sol(A) meet Sol(B)
///   11 T(Sol(A)) in Sol(T(A)) for a lattice homomorphism T
/// Every inclusion is tested from sampled points of its left side, and the
/// converse inclusion is tested for 3, 4, 7, 8 as well as for the equalities.
/// Each line carries the known status of its statement; lines expected to be
/// false pass once a counterexample is found. A and B must be undecorated;
/// throws InvalidArgument otherwise or for a part outside 1..11.
Report lemma1_check(int part, const GeneratedSet& A, const GeneratedSet& B, std::size_t samples, std::uint64_t seed,
                    const HullIdentityOptions& options = {}, std::size_t workers = 1);

/// All parts over random (A, B) pairs (dims 1..max_dim, 1..4 generators,
/// integer entries in [-5, 5], half of the pairs sharing a generator), one
/// sample point per line and instance, followed by fixed small
/// counterexample instances for the statements known to fail.
Report lemma1_suite(std::uint64_t seed, std::size_t instances, std::size_t max_dim = 5, std::size_t workers = 1);

/// Closure of solid sets under +, u, ^, v, meet, tested on Sol(A), Sol(B)
/// (x in the combination, |y| <= |x| => y in the combination).
Report solid_closure_check(std::uint64_t seed, std::size_t samples, std::size_t max_dim = 4, std::size_t workers = 1);

/// member(S, x) <=> gauge(S, x) <= 1, and gauge subadditivity, symmetry and
/// homogeneity, on random Conv_b(Sol(G)) and Conv_b(G).
Report gauge_consistency_check(std::uint64_t seed, std::size_t samples, std::size_t max_dim = 4,
                               std::size_t workers = 1);

/// Coordinatewise lattice identities, Riesz decomposition, disjointification
/// and the Riesz seminorm axioms of every seminorm kind.
Report lattice_check(std::uint64_t seed, std::size_t samples, std::size_t max_dim = 6, std::size_t workers = 1);

}  // namespace fremlin
