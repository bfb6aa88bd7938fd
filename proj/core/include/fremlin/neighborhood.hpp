#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fremlin/hulls.hpp"
#include "fremlin/projective.hpp"
#include "fremlin/report.hpp"
#include "fremlin/sampling.hpp"
#include "fremlin/seminorm.hpp"
#include "fremlin/tensor.hpp"

namespace fremlin {

/// W(U, V) = Conv_b(Sol(U (x) V)) for convex-solid zero neighborhoods U, V.
/// With U = Conv_b(Sol(G)) and V = Conv_b(Sol(H)) this equals
/// Conv_b(Sol({|g| (x) |h|})), so W is itself finitely generated and its
/// gauge is the projective seminorm of the gauges of U and V.
class TensorNbhd {
 public:
  /// Throws InvalidArgument unless both sets are convex-solid and absorbing.
  TensorNbhd(GeneratedSet U, GeneratedSet V);
  /// W built from the closed unit balls; throws InvalidArgument if a ball is
  /// unbounded.
  static TensorNbhd from_seminorms(const RieszSeminorm& p, const RieszSeminorm& q);

  const GeneratedSet& U() const noexcept { return U_; }
  const GeneratedSet& V() const noexcept { return V_; }
  const RieszSeminorm& p() const noexcept { return p_; }
  const RieszSeminorm& q() const noexcept { return q_; }
  std::size_t rows() const noexcept { return U_.dim(); }
  std::size_t cols() const noexcept { return V_.dim(); }

  /// {|g| (x) |h|} over generator pairs.
  std::vector<TensorElement> product_generators() const;
  /// W as a generated set over the flattened space Q^(rows*cols).
  GeneratedSet hull() const;
  /// alpha U and beta V.
  TensorNbhd scaled(const Rational& alpha, const Rational& beta) const;

 private:
  GeneratedSet U_;
  GeneratedSet V_;
  RieszSeminorm p_;
  RieszSeminorm q_;
};

/// Tri-state membership of u in radius * W, decided by a certificate for the
/// projective seminorm of the gauges of U and V.
Membership nbhd_member(const TensorNbhd& W, const TensorElement& u, const Rational& radius = Rational(1),
                       const SearchBudget& budget = {});

/// Minkowski functional of W read directly off its generators.
GaugeResult hull_gauge(const TensorNbhd& W, const TensorElement& u);

/// A point z = sum_i lambda_i z_i of W with sum |lambda_i| <= 1 and
/// |z_i| <= |x_i| (x) |y_i|, x_i in shrink * U, y_i in shrink * V.
struct NbhdSample {
  TensorElement z;
  std::vector<Rational> lambda;
  std::vector<TensorElement> parts;
  std::vector<LatticeElement> xs;
  std::vector<LatticeElement> ys;
};

NbhdSample sample_nbhd(const TensorNbhd& W, CounterRng& rng, const Rational& shrink = Rational(1));

/// Neighborhood-base steps: intersection, additivity with the factor pair
/// (1/2, 1), balancedness and absorption around an interior point, each
/// following the explicit construction of the shrunken neighborhood, plus
/// solidity of W.
Report base_axiom_check(const TensorNbhd& W1, const TensorNbhd& W2, std::uint64_t seed, std::size_t samples,
                        std::size_t workers = 1);

/// Density facts of the entrywise model: the epsilon approximation (exact,
/// degenerate), matrix units as rank-one elements, supremum recovery,
/// dominating rank-one elements and |x (x) y| = |x| (x) |y|.
Report density_check(std::size_t max_dim, std::uint64_t seed, std::size_t samples, std::size_t workers = 1);

}  // namespace fremlin
