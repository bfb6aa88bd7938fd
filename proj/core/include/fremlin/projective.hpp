#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fremlin/rng.hpp"
#include "fremlin/seminorm.hpp"
#include "fremlin/tensor.hpp"

namespace fremlin {

struct RankOneTerm {
  LatticeElement x;
  LatticeElement y;
};

/// Upper-bound witness: nonnegative terms with sum x_i (x) y_i >= |u|.
struct Decomposition {
  std::vector<RankOneTerm> terms;

  TensorElement sum(std::size_t rows, std::size_t cols) const;
  /// Every term nonnegative and the sum dominates |u| entrywise.
  bool covers(const TensorElement& u) const;
  /// sum_i p(x_i) q(y_i)
  Rational value(const RieszSeminorm& p, const RieszSeminorm& q) const;
  Decomposition scaled(const Rational& lambda) const;
  Decomposition concat(const Decomposition& other) const;
};

/// Lower-bound witness: the positive bilinear form B(x, y) = sum M_ij x_i y_j.
struct DualCertificate {
  TensorElement form;

  /// B(x, y) <= p(x) q(y) on positives, decided by the finite criterion
  /// B(a, b) <= 1 on atom pairs and B = 0 whenever a ray is involved. For
  /// WeightedL1 pairs this reads M_ij <= w_i v_j, for WeightedOrderUnit pairs
  /// sum_ij M_ij w_i v_j <= 1.
  bool dominated_by(const RieszSeminorm& p, const RieszSeminorm& q) const;
  /// B(|u|)
  Rational value(const TensorElement& u) const;
};

/// Certified interval [lower, upper] for (p (x) q)(u).
struct SeminormCertificate {
  Rational lower;
  Rational upper;
  DualCertificate dual;
  Decomposition decomposition;
  std::string upper_route;

  Rational gap() const { return upper - lower; }
};

/// Re-verifies both witnesses exactly and that they reproduce lower/upper.
bool verify(const SeminormCertificate& cert, const RieszSeminorm& p, const RieszSeminorm& q, const TensorElement& u);

struct SearchBudget {
  std::optional<std::size_t> k_max;  // unset selects rows * cols; must be >= 1
  std::size_t restarts = 2;
  std::uint64_t seed = 0;
  /// Solve the lifted covering program over atom products; closes the gap.
  bool exact_program = true;
  std::size_t max_sweeps = 30;
  std::size_t workers = 1;
};

/// Exact values where a formula is known: WeightedL1 pairs give
/// sum_ij w_i v_j |u_ij|, WeightedOrderUnit pairs give max_ij |u_ij| / (w_i v_j).
/// Other pairs: nullopt.
std::optional<Rational> seminorm_closed_form(const RieszSeminorm& p, const RieszSeminorm& q, const TensorElement& u);

/// Certified interval. Upper bound: best of the entrywise decomposition, the
/// dominating rank-one element, the lifted covering program (when enabled) and
/// alternating minimization over k-term decompositions (run only while a gap
/// remains). Lower bound: the dual program over positive bilinear forms.
SeminormCertificate seminorm_certify(const RieszSeminorm& p, const RieszSeminorm& q, const TensorElement& u,
                                     const SearchBudget& budget = {});

/// Dual program: maximize B(|u|) over dominated positive forms.
DualCertificate best_dual(const RieszSeminorm& p, const RieszSeminorm& q, const TensorElement& u);

/// Optimal decomposition from the lifted covering program.
Decomposition lifted_decomposition(const RieszSeminorm& p, const RieszSeminorm& q, const TensorElement& u);

/// One alternating-minimization run with k terms from a random start.
/// Returns nullopt only if the start cannot be made feasible.
std::optional<Decomposition> alternating_search(const RieszSeminorm& p, const RieszSeminorm& q,
                                                const TensorElement& u, std::size_t k, CounterRng& rng,
                                                std::size_t max_sweeps);

Decomposition entrywise_decomposition(const TensorElement& u);
Decomposition dominating_decomposition(const TensorElement& u);

/// Product f (x) g of two positive functionals, as a dual form.
DualCertificate product_form(const LatticeElement& f, const LatticeElement& g);

enum class Membership { Member, NonMember, Undecided };
std::string to_string(Membership m);

/// Tri-state answer for u in r * W given a certificate for u:
/// member if upper <= r, non-member if lower > r, otherwise undecided.
Membership classify(const SeminormCertificate& cert, const Rational& radius);

}  // namespace fremlin
