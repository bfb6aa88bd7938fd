#include <gtest/gtest.h>

#include "fremlin/errors.hpp"
#include "fremlin/neighborhood.hpp"
#include "fremlin/projective.hpp"
#include "fremlin/projective_checks.hpp"
#include "fremlin/sampling.hpp"
#include "oracles.hpp"

using namespace fremlin;
using oracle::q;

namespace {

LatticeElement el(std::initializer_list<Rational> v) { return LatticeElement(v); }
TensorElement te(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Rational>> e;
  for (auto r : rows) e.emplace_back(r.begin(), r.end());
  return TensorElement(e);
}

// Extreme points of the positive part of the unit ball, derived from the
// seminorm's parameters alone.
std::vector<oracle::Vec> ball_atoms(const RieszSeminorm& p) {
  std::vector<oracle::Vec> out;
  switch (p.kind()) {
    case SeminormKind::WeightedL1:
      for (std::size_t i = 0; i < p.dim(); ++i) {
        oracle::Vec a(p.dim(), 0);
        a[i] = 1 / p.weights()[i];
        out.push_back(a);
      }
      break;
    case SeminormKind::WeightedOrderUnit:
      out.emplace_back(p.weights().begin(), p.weights().end());
      break;
    case SeminormKind::PolyhedralGauge:
      for (const auto& g : p.generators()) {
        oracle::Vec a;
        for (const auto& c : g.coords()) a.push_back(::abs(c));
        out.push_back(a);
      }
      break;
  }
  return out;
}

oracle::Mat mat(const TensorElement& u) {
  oracle::Mat m(u.rows(), oracle::Vec(u.cols()));
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) m[i][j] = u(i, j);
  return m;
}

}  // namespace

TEST(ClosedForm, Examples) {
  const TensorElement u = te({{1, -2}, {3, 4}});
  const auto l1 = RieszSeminorm::unit_l1(2), linf = RieszSeminorm::unit_order_unit(2);
  EXPECT_EQ(*seminorm_closed_form(l1, l1, u), 10);
  EXPECT_EQ(*seminorm_closed_form(linf, linf, u), 4);
  EXPECT_FALSE(seminorm_closed_form(l1, linf, u).has_value());
  EXPECT_EQ(*seminorm_closed_form(RieszSeminorm::weighted_l1({2, 1}), RieszSeminorm::weighted_l1({1, 3}), u),
            2 * 1 + 2 * 3 * 2 + 3 + 3 * 4);
  EXPECT_EQ(*seminorm_closed_form(RieszSeminorm::order_unit({2, 1}), RieszSeminorm::order_unit({1, 2}), u), 3);
}

TEST(Certify, ExamplesMatchClosedForms) {
  const auto l1 = RieszSeminorm::unit_l1(2), linf = RieszSeminorm::unit_order_unit(2);
  const TensorElement u = te({{1, -2}, {3, 4}});
  for (const auto& [p, expected] : {std::pair{l1, Rational(10)}, std::pair{linf, Rational(4)}}) {
    const SeminormCertificate c = seminorm_certify(p, p, u);
    EXPECT_EQ(c.lower, expected);
    EXPECT_EQ(c.upper, expected);
    EXPECT_TRUE(verify(c, p, p, u));
    EXPECT_TRUE(c.dual.dominated_by(p, p));
  }
  const SeminormCertificate zero = seminorm_certify(l1, linf, TensorElement(2, 2));
  EXPECT_EQ(zero.lower, 0);
  EXPECT_EQ(zero.upper, 0);
}

// With l1 on the rows and the order unit on the columns the identity matrix
// costs 2: M = I is a dominated dual form with B(|I|) = 2, and e_1 (x) e_1 +
// e_2 (x) e_2 attains it.
TEST(Certify, MixedIdentityValue) {
  const auto l1 = RieszSeminorm::unit_l1(2), linf = RieszSeminorm::unit_order_unit(2);
  const TensorElement u = te({{1, 0}, {0, 1}});
  const SeminormCertificate c = seminorm_certify(l1, linf, u);
  EXPECT_EQ(c.lower, 2);
  EXPECT_EQ(c.upper, 2);
  EXPECT_EQ(*oracle::projective_value(ball_atoms(l1), ball_atoms(linf), mat(u)), 2);
  EXPECT_TRUE(product_form(el({1, 1}), el({1, 0})).dominated_by(l1, linf));
  EXPECT_TRUE(DualCertificate{u}.dominated_by(l1, linf));
  EXPECT_FALSE(DualCertificate{2 * u}.dominated_by(l1, linf));
}

TEST(Certify, AgreesWithVertexOracle) {
  CounterRng base(47, 12);
  for (std::size_t s = 0; s < 90; ++s) {
    CounterRng rng = base.split(s);
    const std::size_t n = 2, m = s % 2 == 0 ? 2 : 3;
    const auto p = random_seminorm(rng, n, static_cast<SeminormKind>(s % 3));
    const auto qn = random_seminorm(rng, m, static_cast<SeminormKind>((s / 3) % 3));
    const TensorElement u = random_tensor(rng, n, m, 3, 2);
    const SeminormCertificate c = seminorm_certify(p, qn, u);
    const auto expected = oracle::projective_value(ball_atoms(p), ball_atoms(qn), mat(u));
    ASSERT_TRUE(expected);
    EXPECT_EQ(c.lower, *expected) << to_string(u);
    EXPECT_EQ(c.upper, *expected) << to_string(u);
    EXPECT_TRUE(verify(c, p, qn, u));
  }
}

TEST(Certify, WeakBudgetBracketsExactValue) {
  CounterRng base(53, 13);
  std::size_t gaps = 0;
  for (std::size_t s = 0; s < 120; ++s) {
    CounterRng rng = base.split(s);
    const auto p = random_seminorm(rng, 3, SeminormKind::PolyhedralGauge);
    const auto qn = random_seminorm(rng, 3, static_cast<SeminormKind>(s % 3));
    const TensorElement u = random_tensor(rng, 3, 3, 3);
    const SeminormCertificate weak = seminorm_certify(p, qn, u, weak_budget(s));
    const SeminormCertificate exact = seminorm_certify(p, qn, u);
    EXPECT_EQ(exact.gap(), 0);
    EXPECT_LE(weak.lower, exact.lower);
    EXPECT_GE(weak.upper, exact.upper);
    EXPECT_TRUE(verify(weak, p, qn, u));
    if (weak.gap() > 0) {
      ++gaps;
      EXPECT_EQ(classify(weak, (weak.lower + weak.upper) / 2), Membership::Undecided);
    }
  }
  EXPECT_GT(gaps, 0u);
}

TEST(Certify, BudgetValidationAndTamperDetection) {
  const auto l1 = RieszSeminorm::unit_l1(2);
  const TensorElement u = te({{1, 2}, {0, 1}});
  SearchBudget bad;
  bad.restarts = 0;
  EXPECT_THROW(seminorm_certify(l1, l1, u, bad), InvalidArgument);
  bad = {};
  bad.k_max = 0;
  EXPECT_THROW(seminorm_certify(l1, l1, u, bad), InvalidArgument);
  EXPECT_THROW(seminorm_certify(l1, RieszSeminorm::unit_l1(3), u), DimensionMismatch);

  SeminormCertificate c = seminorm_certify(l1, l1, u);
  EXPECT_TRUE(verify(c, l1, l1, u));
  c.lower += 1;
  EXPECT_FALSE(verify(c, l1, l1, u));
  c = seminorm_certify(l1, l1, u);
  c.decomposition.terms.pop_back();
  EXPECT_FALSE(verify(c, l1, l1, u));
}

TEST(Classify, TriState) {
  const auto l1 = RieszSeminorm::unit_l1(2);
  const SeminormCertificate c = seminorm_certify(l1, l1, te({{1, -2}, {3, 4}}));
  EXPECT_EQ(classify(c, 10), Membership::Member);
  EXPECT_EQ(classify(c, q(19, 2)), Membership::NonMember);
  SeminormCertificate wide = c;
  wide.upper = 12;
  EXPECT_EQ(classify(wide, 11), Membership::Undecided);
  EXPECT_EQ(to_string(Membership::Undecided), "undecided");
}

TEST(GaugeEquivalence, BoundaryQuery) {
  const auto l1 = RieszSeminorm::unit_l1(2);
  const TensorNbhd W = TensorNbhd::from_seminorms(l1, l1);
  const TensorElement u = te({{1, -2}, {3, 4}});
  EXPECT_EQ(nbhd_member(W, u, 10), Membership::Member);
  EXPECT_EQ(nbhd_member(W, u, q(99, 10)), Membership::NonMember);
  const Report r = gauge_equivalence_check(W, l1, l1, u, 1);
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_THROW(gauge_equivalence_check(W, RieszSeminorm::unit_order_unit(2), l1, u, 1), InvalidArgument);
}

TEST(GaugeEquivalence, SuiteHasNoContradictions) {
  const Report r = gauge_equivalence_suite(8, 90);
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(CrossProperty, Examples) {
  const auto l1 = RieszSeminorm::unit_l1(2);
  const TensorElement u = rank_one(el({2, 0}), el({1, 2}));
  EXPECT_EQ(seminorm_certify(l1, l1, u).upper, 6);
  EXPECT_EQ(seminorm_certify(l1, l1, u).lower, 6);
  EXPECT_EQ(seminorm_certify(l1, l1, rank_one(el({0, 0}), el({1, 2}))).upper, 0);
  const Report r = cross_property_suite(9, 90);
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(Hausdorff, SeparatingAndBlindFamilies) {
  const auto l1 = RieszSeminorm::unit_l1(2);
  EXPECT_GE(seminorm_certify(l1, l1, rank_one(el({1, 0}), el({1, 0}))).lower, 1);
  const SeminormFamily P({l1}), Q({RieszSeminorm::unit_l1(3)});
  const Report sep = hausdorff_check(P, Q, 100, 3);
  EXPECT_TRUE(sep.passed());
  EXPECT_EQ(sep.lines[0].expected, Expectation::Holds);
  const SeminormFamily blind({RieszSeminorm::weighted_l1({1, 0})});
  const Report r = hausdorff_check(blind, Q, 10, 3);
  EXPECT_EQ(r.lines[0].expected, Expectation::Refuted);
  EXPECT_GT(r.lines[0].violations, 0u);
  EXPECT_FALSE(r.lines[0].witness.empty());
  EXPECT_TRUE(r.passed());
}

TEST(CertificateAxioms, SuitePasses) {
  const Report r = certificate_axioms_check(10, 60);
  EXPECT_TRUE(r.passed()) << r.to_text();
}
