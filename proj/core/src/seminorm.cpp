#include "fremlin/seminorm.hpp"

#include "fremlin/errors.hpp"
#include "fremlin/lp.hpp"

namespace fremlin {

std::string to_string(SeminormKind kind) {
  switch (kind) {
    case SeminormKind::WeightedL1:
      return "WeightedL1";
    case SeminormKind::WeightedOrderUnit:
      return "WeightedOrderUnit";
    case SeminormKind::PolyhedralGauge:
      return "PolyhedralGauge";
  }
  return "?";
}

RieszSeminorm RieszSeminorm::weighted_l1(std::vector<Rational> weights) {
  if (weights.empty()) throw InvalidArgument("seminorm needs dimension >= 1");
  for (auto& w : weights) w.canonicalize();
  for (const auto& w : weights)
    if (w < 0) throw InvalidArgument("WeightedL1 weights must be nonnegative");
  RieszSeminorm p(SeminormKind::WeightedL1, weights.size());
  p.weights_ = std::move(weights);
  return p;
}

RieszSeminorm RieszSeminorm::order_unit(std::vector<Rational> weights) {
  if (weights.empty()) throw InvalidArgument("seminorm needs dimension >= 1");
  for (auto& w : weights) w.canonicalize();
  for (const auto& w : weights)
    if (w <= 0) throw InvalidArgument("WeightedOrderUnit weights must be strictly positive");
  RieszSeminorm p(SeminormKind::WeightedOrderUnit, weights.size());
  p.weights_ = std::move(weights);
  return p;
}

RieszSeminorm RieszSeminorm::polyhedral(std::vector<LatticeElement> generators) {
  if (generators.empty()) throw InvalidArgument("PolyhedralGauge needs at least one generator");
  const std::size_t n = generators.front().dim();
  for (const auto& g : generators) require_same_dim(generators.front(), g);
  for (std::size_t i = 0; i < n; ++i) {
    bool covered = false;
    for (const auto& g : generators) covered = covered || g[i] != 0;
    if (!covered)
      throw InvalidArgument("PolyhedralGauge generators leave coordinate " + std::to_string(i) +
                            " uncovered; the gauge would be infinite");
  }
  RieszSeminorm p(SeminormKind::PolyhedralGauge, n);
  p.generators_ = std::move(generators);
  return p;
}

RieszSeminorm RieszSeminorm::gauge_of(const GeneratedSet& ball) {
  if (!ball.is_convex_solid()) throw InvalidArgument("gauge_of needs a convex-solid set, got " + to_string(ball.form()));
  return polyhedral(ball.generators());
}

Rational RieszSeminorm::operator()(const LatticeElement& x) const {
  if (x.dim() != dim_) throw DimensionMismatch(dim_, x.dim());
  switch (kind_) {
    case SeminormKind::WeightedL1: {
      Rational s;
      for (std::size_t i = 0; i < dim_; ++i) s += weights_[i] * abs_value(x[i]);
      return s;
    }
    case SeminormKind::WeightedOrderUnit: {
      Rational m;
      for (std::size_t i = 0; i < dim_; ++i) {
        Rational v = abs_value(x[i]) / weights_[i];
        if (v > m) m = std::move(v);
      }
      return m;
    }
    case SeminormKind::PolyhedralGauge:
      return *gauge(GeneratedSet(generators_, {Hull::Sol, Hull::ConvB}), x).value;
  }
  return 0;
}

ConeModel RieszSeminorm::cone() const {
  ConeModel m;
  switch (kind_) {
    case SeminormKind::WeightedL1:
      for (std::size_t i = 0; i < dim_; ++i) {
        if (weights_[i] == 0)
          m.rays.push_back(LatticeElement::unit(dim_, i));
        else
          m.atoms.push_back(LatticeElement::unit(dim_, i, 1 / weights_[i]));
      }
      break;
    case SeminormKind::WeightedOrderUnit:
      m.atoms.emplace_back(weights_);
      break;
    case SeminormKind::PolyhedralGauge:
      for (const auto& g : generators_) m.atoms.push_back(abs(g));
      break;
  }
  return m;
}

LatticeElement RieszSeminorm::supporting_functional(const LatticeElement& x) const {
  if (x.dim() != dim_) throw DimensionMismatch(dim_, x.dim());
  switch (kind_) {
    case SeminormKind::WeightedL1:
      return LatticeElement(weights_);
    case SeminormKind::WeightedOrderUnit: {
      std::size_t best = 0;
      Rational top = -1;
      for (std::size_t i = 0; i < dim_; ++i) {
        Rational v = abs_value(x[i]) / weights_[i];
        if (v > top) {
          top = std::move(v);
          best = i;
        }
      }
      return LatticeElement::unit(dim_, best, 1 / weights_[best]);
    }
    case SeminormKind::PolyhedralGauge: {
      // max f.|x|  s.t.  f.|g_k| <= 1, f >= 0
      LinearProgram lp(dim_);
      const LatticeElement ax = abs(x);
      std::vector<Rational> cost(dim_);
      for (std::size_t i = 0; i < dim_; ++i) cost[i] = -ax[i];
      lp.set_objective(std::move(cost));
      for (const auto& g : generators_) {
        const LatticeElement ag = abs(g);
        lp.add_constraint({ag.coords().begin(), ag.coords().end()}, Sense::LessEqual, Rational(1));
      }
      const LpSolution s = solve(lp);
      return LatticeElement(s.x);
    }
  }
  return LatticeElement::zero(dim_);
}

std::optional<GeneratedSet> RieszSeminorm::unit_ball() const {
  const ConeModel m = cone();
  if (!m.rays.empty()) return std::nullopt;
  return GeneratedSet(m.atoms, {Hull::Sol, Hull::ConvB});
}

Rational seminorm_eval(const RieszSeminorm& p, const LatticeElement& x) { return p(x); }

SeminormFamily::SeminormFamily(std::vector<RieszSeminorm> members) : members_(std::move(members)) {
  if (members_.empty()) throw InvalidArgument("seminorm family must be nonempty");
  for (const auto& p : members_)
    if (p.dim() != members_.front().dim()) throw DimensionMismatch(members_.front().dim(), p.dim());
  const std::size_t n = members_.front().dim();
  for (std::size_t i = 0; i < n && !blind_; ++i) {
    bool seen = false;
    for (const auto& p : members_) seen = seen || p(LatticeElement::unit(n, i)) > 0;
    if (!seen) blind_ = i;
  }
  separating_ = !blind_.has_value();
}

}  // namespace fremlin
