#include <gtest/gtest.h>

#include "fremlin/errors.hpp"
#include "fremlin/hull_checks.hpp"
#include "fremlin/hulls.hpp"
#include "fremlin/sampling.hpp"
#include "oracles.hpp"

using namespace fremlin;
using oracle::q;

namespace {

LatticeElement el(std::initializer_list<Rational> v) { return LatticeElement(v); }

oracle::Vec vec(const LatticeElement& x) { return {x.coords().begin(), x.coords().end()}; }

// min sum |lambda_k| over x = sum lambda_k g_k (lambda split into two signs);
// with `affine` the weights must be nonnegative and sum to one.
std::optional<oracle::Q> combination_cost(const std::vector<LatticeElement>& gens, const LatticeElement& x,
                                          bool affine) {
  const std::size_t k = gens.size(), n = x.dim(), vars = affine ? k : 2 * k;
  oracle::Mat a;
  oracle::Vec b;
  auto equal = [&](const oracle::Vec& row, const oracle::Q& rhs) {
    a.push_back(row);
    b.push_back(rhs);
    oracle::Vec neg = row;
    for (auto& v : neg) v = -v;
    a.push_back(neg);
    b.push_back(-rhs);
  };
  for (std::size_t i = 0; i < n; ++i) {
    oracle::Vec row(vars);
    for (std::size_t g = 0; g < k; ++g) {
      row[g] = gens[g][i];
      if (!affine) row[k + g] = -gens[g][i];
    }
    equal(row, x[i]);
  }
  if (affine) equal(oracle::Vec(k, 1), 1);
  return oracle::lp_min(oracle::Vec(vars, 1), a, b);
}

bool oracle_member(const GeneratedSet& s, const LatticeElement& x) {
  const auto& g = s.generators();
  switch (s.form()) {
    case HullForm::Points:
      return std::find(g.begin(), g.end(), x) != g.end();
    case HullForm::Sol:
      return std::any_of(g.begin(), g.end(), [&](const LatticeElement& h) { return leq(abs(x), abs(h)); });
    case HullForm::Conv:
      return combination_cost(g, x, true).has_value();
    case HullForm::ConvB: {
      const auto c = combination_cost(g, x, false);
      return c && *c <= 1;
    }
    case HullForm::ConvBOfSol: {
      std::vector<oracle::Vec> gens;
      for (const auto& h : g) gens.push_back(vec(h));
      const auto c = oracle::polyhedral_gauge(gens, vec(x));
      return c && *c <= 1;
    }
    default:
      ADD_FAILURE() << "no oracle for form " << to_string(s.form());
      return false;
  }
}

}  // namespace

TEST(Normalize, DecorationsCollapse) {
  EXPECT_EQ(normalize({}), HullForm::Points);
  EXPECT_EQ(normalize({Hull::Sol, Hull::Sol}), HullForm::Sol);
  EXPECT_EQ(normalize({Hull::Conv, Hull::ConvB}), HullForm::ConvB);
  EXPECT_EQ(normalize({Hull::Sol, Hull::Conv}), HullForm::ConvBOfSol);
  EXPECT_EQ(normalize({Hull::Sol, Hull::ConvB, Hull::Sol}), HullForm::ConvBOfSol);
  EXPECT_EQ(normalize({Hull::Conv, Hull::Sol}), HullForm::SolOfConv);
  EXPECT_EQ(normalize({Hull::ConvB, Hull::Sol}), HullForm::SolOfConvB);
}

TEST(Member, Examples) {
  const GeneratedSet sol({el({1, -2})}, {Hull::Sol});
  EXPECT_TRUE(member(sol, el({0, 2})));
  EXPECT_FALSE(member(sol, el({0, 3})));
  const GeneratedSet ball({el({1, 0}), el({0, 1})}, {Hull::Sol, Hull::ConvB});
  EXPECT_TRUE(member(ball, el({q(1, 2), q(1, 2)})));
  EXPECT_FALSE(member(ball, el({1, 1})));
  EXPECT_THROW(member(ball, el({1})), DimensionMismatch);
  EXPECT_THROW(GeneratedSet({}), InvalidArgument);
  EXPECT_THROW(GeneratedSet({el({1}), el({1, 2})}), DimensionMismatch);
}

TEST(Member, AgreesWithOracleOnRandomPoints) {
  const std::vector<std::vector<Hull>> decorations = {
      {}, {Hull::Sol}, {Hull::Conv}, {Hull::ConvB}, {Hull::Sol, Hull::ConvB}};
  CounterRng base(21, 6);
  for (std::size_t s = 0; s < 250; ++s) {
    CounterRng rng = base.split(s);
    const std::size_t dim = static_cast<std::size_t>(rng.uniform_int(1, 2));
    const GeneratedSet S(random_generators(rng, dim, static_cast<std::size_t>(rng.uniform_int(1, 3)), 3),
                         decorations[s % decorations.size()]);
    const LatticeElement inside = S.sample(rng);
    EXPECT_TRUE(member(S, inside)) << to_string(inside);
    EXPECT_TRUE(oracle_member(S, inside)) << to_string(inside);
    const LatticeElement x = random_element(rng, dim, 3, 2);
    EXPECT_EQ(member(S, x), oracle_member(S, x)) << to_string(S.form()) << " x = " << to_string(x);
  }
}

TEST(Gauge, ExamplesAndOracle) {
  const GeneratedSet ball({el({1, 0}), el({0, 1})}, {Hull::Sol, Hull::ConvB});
  EXPECT_EQ(*gauge(ball, el({1, 1})).value, 2);
  EXPECT_EQ(*gauge(ball, el({0, 0})).value, 0);
  EXPECT_THROW(gauge(GeneratedSet({el({1, 0})}, {Hull::Sol}), el({1, 0})), InvalidArgument);
  const GeneratedSet line({el({1, 0})}, {Hull::ConvB});
  EXPECT_FALSE(gauge(line, el({0, 1})).finite());
  EXPECT_EQ(*gauge(line, el({-3, 0})).value, 3);

  CounterRng base(23, 7);
  for (std::size_t s = 0; s < 150; ++s) {
    CounterRng rng = base.split(s);
    const std::size_t dim = static_cast<std::size_t>(rng.uniform_int(1, 3));
    const auto gens = random_generators(rng, dim, static_cast<std::size_t>(rng.uniform_int(1, 3)), 3);
    const LatticeElement x = random_element(rng, dim, 3, 2);
    const GaugeResult solid = gauge(GeneratedSet(gens, {Hull::Sol, Hull::ConvB}), x);
    std::vector<oracle::Vec> g;
    for (const auto& h : gens) g.push_back(vec(h));
    const auto expected = oracle::polyhedral_gauge(g, vec(x));
    ASSERT_EQ(solid.finite(), expected.has_value());
    if (expected) {
      EXPECT_EQ(*solid.value, *expected);
    }
    const GaugeResult balanced = gauge(GeneratedSet(gens, {Hull::ConvB}), x);
    const auto cost = combination_cost(gens, x, false);
    ASSERT_EQ(balanced.finite(), cost.has_value()) << to_string(x);
    if (cost) {
      EXPECT_EQ(*balanced.value, *cost);
    }
  }
}

TEST(SetAlgebra, GeneratorLevelOperations) {
  const GeneratedSet A({el({1, 0}), el({0, 2})}), B({el({-1, 1})});
  EXPECT_EQ(sum_of(A, B).generators().size(), 2u);
  EXPECT_TRUE(member(sum_of(A, B), el({0, 1})));
  EXPECT_TRUE(member(union_of(A, B), el({-1, 1})));
  EXPECT_TRUE(member(join_of(A, B), el({1, 1})));
  EXPECT_TRUE(member(meet_of(A, B), el({-1, 1})));
  EXPECT_TRUE(member(scaled(-2, A.with({Hull::Sol})), el({2, 0})));
  EXPECT_FALSE(intersection_of(A, B).has_value());
  EXPECT_EQ(intersection_of(A, union_of(A, B))->generators().size(), 2u);
  const Region probe = intersect_probe(A.with({Hull::Sol}), B.with({Hull::Sol}));
  EXPECT_TRUE(probe.contains(el({q(1, 2), 0})) && probe.contains(el({0, -1})));
  EXPECT_FALSE(probe.contains(el({0, 2})));
  EXPECT_THROW(sum_of(A.with({Hull::Sol}), B), InvalidArgument);
}

TEST(HullIdentities, Part6ScalingWithNegativeAlpha) {
  HullIdentityOptions opts;
  opts.alpha = Rational(-3);
  const Report r = lemma1_check(6, GeneratedSet({el({1, 2})}), GeneratedSet({el({1, 2})}), 100, 1, opts);
  for (const auto& line : r.lines) {
    EXPECT_EQ(line.violations, 0u) << line.id;
    EXPECT_GT(line.samples, 0u) << line.id;
  }
}

TEST(HullIdentities, Part5SplitsThroughRiesz) {
  const Report r = lemma1_check(5, GeneratedSet({el({2, 0})}), GeneratedSet({el({0, 2})}), 100, 2);
  EXPECT_TRUE(r.passed()) << r.to_text();
  const auto [z1, z2] = riesz_decompose(el({1, 1}), el({2, 0}), el({0, 2}));
  EXPECT_EQ(z1, el({1, 0}));
  EXPECT_EQ(z2, el({0, 1}));
}

TEST(HullIdentities, Part9HoldsOnPositivesOnly) {
  const Report r = lemma1_check(9, GeneratedSet({el({2, 1})}), GeneratedSet({el({1, 3})}), 200, 3);
  ASSERT_TRUE(r.find("hull-identity/9/positive"));
  EXPECT_EQ(r.find("hull-identity/9/positive")->violations, 0u);
  // (-2, 0) lies in Sol(A v B) = [-2, 2] x [-3, 3] but every a v b has first coordinate >= -1.
  EXPECT_GT(r.find("hull-identity/9/subset")->violations, 0u);
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(HullIdentities, RejectsBadArguments) {
  const GeneratedSet A({el({1})});
  EXPECT_THROW(lemma1_check(0, A, A, 1, 0), InvalidArgument);
  EXPECT_THROW(lemma1_check(12, A, A, 1, 0), InvalidArgument);
  EXPECT_THROW(lemma1_check(1, A.with({Hull::Sol}), A, 1, 0), InvalidArgument);
  HullIdentityOptions bad;
  bad.hom = Matrix{{1, 1}};
  EXPECT_THROW(lemma1_check(11, A, A, 1, 0, bad), InvalidArgument);
}

TEST(HullIdentities, RandomSuitePasses) {
  const Report r = lemma1_suite(99, 150, 4);
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_EQ(r.find("hull-identity/1/subset")->violations, 0u);
}

TEST(HullIdentities, SolidClosureAndGaugeSuites) {
  const Report solid = solid_closure_check(4, 100);
  EXPECT_TRUE(solid.passed()) << solid.to_text();
  const Report g = gauge_consistency_check(4, 100);
  EXPECT_TRUE(g.passed()) << g.to_text();
  const Report l = lattice_check(4, 200);
  EXPECT_TRUE(l.passed()) << l.to_text();
}
