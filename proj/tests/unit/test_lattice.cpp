#include <gtest/gtest.h>

#include "fremlin/errors.hpp"
#include "fremlin/lattice.hpp"
#include "fremlin/sampling.hpp"
#include "fremlin/seminorm.hpp"
#include "oracles.hpp"

using namespace fremlin;
using oracle::q;

namespace {

LatticeElement el(std::initializer_list<long> v) {
  std::vector<Rational> c;
  for (long x : v) c.emplace_back(x);
  return LatticeElement(std::move(c));
}

oracle::Vec vec(const LatticeElement& x) { return {x.coords().begin(), x.coords().end()}; }

}  // namespace

TEST(LatticeOps, CoordinatewiseExamples) {
  EXPECT_EQ(join(el({1, -2}), el({0, 3})), el({1, 3}));
  EXPECT_EQ(abs(el({-1, 2})), el({1, 2}));
  EXPECT_EQ(lattice_eval(el({1, -2}), el({0, 3}), op::Join{}), el({1, 3}));
  EXPECT_EQ(lattice_eval(el({1, -2}), el({0, 3}), op::Meet{}), el({0, -2}));
  EXPECT_EQ(lattice_eval(el({1, -2}), el({0, 3}), op::Plus{}), el({1, 1}));
  EXPECT_EQ(lattice_eval(el({1, -2}), el({0, 3}), op::Scale{q(-1, 2)}), (LatticeElement{q(-1, 2), Rational(1)}));
}

TEST(LatticeOps, DimensionMismatchThrows) {
  EXPECT_THROW(join(el({1}), el({1, 2})), DimensionMismatch);
  EXPECT_THROW(el({1}) + el({1, 2}), DimensionMismatch);
  EXPECT_THROW(LatticeElement(std::vector<Rational>{}), InvalidArgument);
}

TEST(LatticeOps, RandomLaws) {
  CounterRng base(7, 1);
  for (std::size_t s = 0; s < 500; ++s) {
    CounterRng rng = base.split(s);
    const std::size_t dim = static_cast<std::size_t>(rng.uniform_int(1, 6));
    const LatticeElement x = random_element(rng, dim, 5, 3), y = random_element(rng, dim, 5, 3);
    EXPECT_EQ(meet(x, x), x);
    EXPECT_EQ(join(x, y) + meet(x, y), x + y);
    EXPECT_TRUE(leq(abs(join(x, y)), join(abs(x), abs(y))));
    for (std::size_t i = 0; i < dim; ++i) {
      EXPECT_EQ(join(x, y)[i], std::max(x[i], y[i]));
      EXPECT_EQ(abs(x)[i], ::abs(x[i]));
    }
  }
}

TEST(Seminorm, Examples) {
  EXPECT_EQ(RieszSeminorm::weighted_l1({1, 1})(el({1, -2})), 3);
  EXPECT_EQ(RieszSeminorm::order_unit({2, 1})(el({4, 1})), 2);
  EXPECT_EQ(RieszSeminorm::polyhedral({el({1, 0}), el({0, 1})})(el({1, 1})), 2);
  EXPECT_EQ(*oracle::polyhedral_gauge({{1, 0}, {0, 1}}, {1, 1}), 2);
}

TEST(Seminorm, RejectsInvalidParameters) {
  EXPECT_THROW(RieszSeminorm::weighted_l1({1, -1}), InvalidArgument);
  EXPECT_THROW(RieszSeminorm::order_unit({1, 0}), InvalidArgument);
  EXPECT_THROW(RieszSeminorm::polyhedral({el({1, 0})}), InvalidArgument);
  EXPECT_THROW(RieszSeminorm::weighted_l1({1, 1})(el({1})), DimensionMismatch);
}

TEST(Seminorm, AgreesWithOraclesAndAxioms) {
  CounterRng base(11, 2);
  for (std::size_t s = 0; s < 300; ++s) {
    CounterRng rng = base.split(s);
    const std::size_t dim = static_cast<std::size_t>(rng.uniform_int(1, 3));
    const SeminormKind kind = static_cast<SeminormKind>(s % 3);
    const RieszSeminorm p = random_seminorm(rng, dim, kind);
    const LatticeElement x = random_element(rng, dim, 4, 2), y = random_element(rng, dim, 4, 2);
    const Rational lambda = rng.uniform_rational(-3, 3, 6);

    Rational expected;
    if (kind == SeminormKind::WeightedL1)
      expected = oracle::l1(p.weights(), vec(x));
    else if (kind == SeminormKind::WeightedOrderUnit)
      expected = oracle::linf(p.weights(), vec(x));
    else {
      std::vector<oracle::Vec> gens;
      for (const auto& g : p.generators()) gens.push_back(vec(g));
      expected = *oracle::polyhedral_gauge(gens, vec(x));
    }
    EXPECT_EQ(p(x), expected) << to_string(kind) << " x = " << to_string(x);
    EXPECT_EQ(p(x), p(abs(x)));
    EXPECT_LE(p(x + y), p(x) + p(y));
    EXPECT_EQ(p(lambda * x), ::abs(lambda) * p(x));
    const LatticeElement z = random_below(rng, x);
    EXPECT_LE(p(z), p(x));
  }
}

TEST(SeminormFamily, SeparatingIsComputed) {
  const SeminormFamily sep({RieszSeminorm::weighted_l1({1, 0}), RieszSeminorm::weighted_l1({0, 1})});
  EXPECT_TRUE(sep.separating());
  const SeminormFamily blind({RieszSeminorm::weighted_l1({1, 0, 0}), RieszSeminorm::weighted_l1({0, 1, 0})});
  EXPECT_FALSE(blind.separating());
  EXPECT_EQ(blind.blind_direction(), 2u);
}

TEST(RieszDecompose, Examples) {
  auto [a1, a2] = riesz_decompose(el({3}), el({2}), el({2}));
  EXPECT_EQ(a1, el({2}));
  EXPECT_EQ(a2, el({1}));
  auto [b1, b2] = riesz_decompose(el({0, 0}), el({4, -1}), el({2, 2}));
  EXPECT_EQ(b1, el({0, 0}));
  EXPECT_EQ(b2, el({0, 0}));
  auto [c1, c2] = riesz_decompose(el({-3, 1}), el({-2, 1}), el({1, 0}));
  EXPECT_EQ(c1, el({-2, 1}));
  EXPECT_EQ(c2, el({-1, 0}));
}

TEST(RieszDecompose, PreconditionNamesCoordinate) {
  try {
    riesz_decompose(el({1, 5}), el({1, 1}), el({1, 1}));
    FAIL() << "expected a precondition violation";
  } catch (const PreconditionViolation& e) {
    EXPECT_EQ(e.coordinate(), 1u);
  }
}

TEST(RieszDecompose, RandomPostconditions) {
  CounterRng base(3, 3);
  for (std::size_t s = 0; s < 1000; ++s) {
    CounterRng rng = base.split(s);
    const std::size_t dim = static_cast<std::size_t>(rng.uniform_int(1, 6));
    const LatticeElement x = random_element(rng, dim, 5, 2), y = random_element(rng, dim, 5, 2);
    const LatticeElement z = random_below(rng, abs(x) + abs(y));
    const auto [z1, z2] = riesz_decompose(z, x, y);
    EXPECT_EQ(z1 + z2, z);
    EXPECT_TRUE(leq(abs(z1), abs(x)));
    EXPECT_TRUE(leq(abs(z2), abs(y)));
  }
}

TEST(Disjointify, Examples) {
  const auto [x1, y1] = disjointify(el({2, 1}), el({1, 3}));
  EXPECT_EQ(x1, el({1, 0}));
  EXPECT_EQ(y1, el({0, 2}));
  const auto [x2, y2] = disjointify(el({-2, 5}), el({-2, 5}));
  EXPECT_TRUE(x2.is_zero() && y2.is_zero());
  const auto [x3, y3] = disjointify(el({3, 0, 1}), el({0, 2, 0}));
  EXPECT_EQ(x3, el({3, 0, 1}));
  EXPECT_EQ(y3, el({0, 2, 0}));
}

// x' v y' = |x| v |y| fails as soon as the supports overlap; the identity that
// does hold subtracts |x| ^ |y|.
TEST(Disjointify, JoinIdentity) {
  const LatticeElement x = el({2, 1}), y = el({1, 3});
  const auto [xp, yp] = disjointify(x, y);
  EXPECT_NE(join(xp, yp), join(abs(x), abs(y)));
  EXPECT_EQ(join(xp, yp), join(abs(x), abs(y)) - meet(abs(x), abs(y)));
}

TEST(Disjointify, RandomPostconditions) {
  CounterRng base(5, 4);
  for (std::size_t s = 0; s < 1000; ++s) {
    CounterRng rng = base.split(s);
    const std::size_t dim = static_cast<std::size_t>(rng.uniform_int(1, 6));
    const LatticeElement x = random_element(rng, dim, 5, 2), y = random_element(rng, dim, 5, 2);
    const auto [xp, yp] = disjointify(x, y);
    const LatticeElement zero = LatticeElement::zero(dim);
    EXPECT_EQ(xp, abs(x) - meet(abs(x), abs(y)));
    EXPECT_EQ(yp, abs(y) - meet(abs(x), abs(y)));
    EXPECT_EQ(meet(xp, yp), zero);
    EXPECT_TRUE(leq(zero, xp) && leq(xp, abs(x)));
    EXPECT_TRUE(leq(zero, yp) && leq(yp, abs(y)));
    EXPECT_EQ(xp - yp, abs(x) - abs(y));
  }
}

TEST(LatticeHom, MatrixCriterion) {
  EXPECT_TRUE(is_lattice_homomorphism({{1, 0}, {0, 2}, {0, 0}}));
  EXPECT_FALSE(is_lattice_homomorphism({{1, 1}}));
  EXPECT_FALSE(is_lattice_homomorphism({{-1, 0}}));
  EXPECT_EQ(apply({{0, 2}, {1, 0}}, el({3, -1})), el({-2, 3}));
  EXPECT_THROW(apply({{1, 0}}, el({1})), DimensionMismatch);
}
