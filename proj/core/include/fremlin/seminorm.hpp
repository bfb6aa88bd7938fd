#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fremlin/hulls.hpp"
#include "fremlin/lattice.hpp"

namespace fremlin {

enum class SeminormKind { WeightedL1, WeightedOrderUnit, PolyhedralGauge };

std::string to_string(SeminormKind kind);

/// Description of a Riesz seminorm on the positive cone as a covering
/// program: for x >= 0,
///   p(x) = min { sum_k lambda_k : sum_k lambda_k atoms_k + sum_r rho_r rays_r >= x }.
/// Atoms and rays are nonnegative. Rays are directions of zero cost.
struct ConeModel {
  std::vector<LatticeElement> atoms;
  std::vector<LatticeElement> rays;
};

/// A lattice seminorm on Q^n.
///   WeightedL1:        p(x) = sum_i w_i |x_i|      (w_i >= 0)
///   WeightedOrderUnit: p(x) = max_i |x_i| / w_i    (w_i > 0)
///   PolyhedralGauge:   gauge of Conv_b(Sol(generators)); the generators must
///                      cover every coordinate so the gauge is finite.
class RieszSeminorm {
 public:
  static RieszSeminorm weighted_l1(std::vector<Rational> weights);
  static RieszSeminorm order_unit(std::vector<Rational> weights);
  static RieszSeminorm polyhedral(std::vector<LatticeElement> generators);
  static RieszSeminorm unit_l1(std::size_t dim) { return weighted_l1(std::vector<Rational>(dim, Rational(1))); }
  static RieszSeminorm unit_order_unit(std::size_t dim) { return order_unit(std::vector<Rational>(dim, Rational(1))); }
  /// Gauge of a convex-solid generated set.
  static RieszSeminorm gauge_of(const GeneratedSet& ball);

  SeminormKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  const std::vector<LatticeElement>& generators() const noexcept { return generators_; }

  /// Throws DimensionMismatch.
  Rational operator()(const LatticeElement& x) const;

  ConeModel cone() const;

  /// Positive functional f with f(|x|) = p(x), f(atom) <= 1 for every atom of
  /// cone() and f(ray) = 0. Linear-programming duality makes it exist for
  /// every polyhedral seminorm.
  LatticeElement supporting_functional(const LatticeElement& x) const;

  /// Closed unit ball as a generated set; nullopt when it is unbounded.
  std::optional<GeneratedSet> unit_ball() const;

  friend bool operator==(const RieszSeminorm&, const RieszSeminorm&) = default;

 private:
  RieszSeminorm(SeminormKind kind, std::size_t dim) : kind_(kind), dim_(dim) {}

  SeminormKind kind_;
  std::size_t dim_;
  std::vector<Rational> weights_;
  std::vector<LatticeElement> generators_;
};

Rational seminorm_eval(const RieszSeminorm& p, const LatticeElement& x);

/// Finite family of seminorms on the same space. `separating()` is computed:
/// every basis vector has some member with p(e_i) > 0.
class SeminormFamily {
 public:
  explicit SeminormFamily(std::vector<RieszSeminorm> members);

  const std::vector<RieszSeminorm>& members() const noexcept { return members_; }
  std::size_t dim() const noexcept { return members_.front().dim(); }
  bool separating() const noexcept { return separating_; }
  /// Basis index no member sees, if any.
  std::optional<std::size_t> blind_direction() const noexcept { return blind_; }

 private:
  std::vector<RieszSeminorm> members_;
  std::optional<std::size_t> blind_;
  bool separating_;
};

}  // namespace fremlin
