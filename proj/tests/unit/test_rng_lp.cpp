#include <gtest/gtest.h>

#include <set>

#include "fremlin/errors.hpp"
#include "fremlin/lp.hpp"
#include "fremlin/parallel.hpp"
#include "fremlin/rational.hpp"
#include "fremlin/rng.hpp"
#include "oracles.hpp"

using namespace fremlin;
using oracle::q;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-4/6"), q(-2, 3));
  EXPECT_EQ(parse_rational("7"), 7);
  EXPECT_EQ(to_string(q(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(-5)), "-5");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_EQ(ratio(4, 2), 2);
  EXPECT_EQ(to_string(ratio(4, 2)), "2");
}

TEST(CounterRng, DeterministicAndSplittable) {
  CounterRng a(42, 9), b(42, 9), c(43, 9);
  for (int i = 0; i < 10; ++i) {
    const auto va = a(), vb = b();
    EXPECT_EQ(va, vb);
    EXPECT_NE(va, c());
  }
  const CounterRng root(1, 2);
  std::set<std::uint64_t> firsts;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    CounterRng child = root.split(s);
    firsts.insert(child());
  }
  EXPECT_EQ(firsts.size(), 1000u);
  CounterRng again = root.split(5), once = root.split(5);
  EXPECT_EQ(again(), once());
}

TEST(CounterRng, UniformRanges) {
  CounterRng rng(3);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto v = rng.uniform_int(-2, 2);
    ASSERT_GE(v, -2);
    ASSERT_LE(v, 2);
    seen.insert(v);
    const Rational r = rng.uniform_rational(q(-1, 2), 1, 6);
    ASSERT_GE(r, q(-1, 2));
    ASSERT_LE(r, 1);
    ASSERT_EQ(r, parse_rational(to_string(r)));
  }
  EXPECT_EQ(seen.size(), 5u);
}

TEST(ParallelMap, OrderIndependentOfWorkers) {
  auto f = [](std::size_t i) { return CounterRng(5).split(i)(); };
  EXPECT_EQ(parallel_map(97, 1, f), parallel_map(97, 4, f));
  EXPECT_THROW(parallel_map(10, 3, [](std::size_t i) -> int { if (i == 7) throw std::runtime_error("x"); return 0; }),
               std::runtime_error);
}

TEST(Simplex, MatchesVertexEnumeration) {
  CounterRng base(17, 5);
  for (std::size_t s = 0; s < 200; ++s) {
    CounterRng rng = base.split(s);
    const std::size_t vars = static_cast<std::size_t>(rng.uniform_int(1, 4));
    const std::size_t rows = static_cast<std::size_t>(rng.uniform_int(1, 4));
    oracle::Vec c(vars);
    oracle::Mat a(rows, oracle::Vec(vars));
    oracle::Vec b(rows);
    LinearProgram lp(vars);
    for (auto& v : c) v = rng.uniform_int(0, 4);
    lp.set_objective(c);
    for (std::size_t r = 0; r < rows; ++r) {
      for (auto& v : a[r]) v = rng.uniform_int(-1, 3);
      b[r] = rng.uniform_int(-2, 4);
      lp.add_constraint(a[r], Sense::GreaterEqual, b[r]);
    }
    const LpSolution sol = solve(lp);
    const auto expected = oracle::lp_min(c, a, b);
    if (!expected) {
      EXPECT_EQ(sol.status, LpStatus::Infeasible);
      continue;
    }
    ASSERT_EQ(sol.status, LpStatus::Optimal);
    EXPECT_EQ(sol.objective, *expected);
    for (std::size_t r = 0; r < rows; ++r) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < vars; ++j) lhs += a[r][j] * sol.x[j];
      EXPECT_GE(lhs, b[r]);
    }
  }
}

TEST(Simplex, StatusCases) {
  LinearProgram unbounded(1);
  unbounded.set_objective({-1});
  EXPECT_EQ(solve(unbounded).status, LpStatus::Unbounded);

  LinearProgram infeasible(1);
  infeasible.add_constraint({1}, Sense::LessEqual, -1);
  EXPECT_EQ(solve(infeasible).status, LpStatus::Infeasible);
  EXPECT_FALSE(is_feasible(infeasible));

  LinearProgram eq(2);
  eq.set_objective({1, 2});
  eq.add_constraint({1, 1}, Sense::Equal, q(3, 2));
  const auto sol = solve(eq);
  EXPECT_EQ(sol.objective, q(3, 2));
}

TEST(LinearSystem, UniqueAndDegenerate) {
  const auto x = solve_linear_system({{2, 1}, {1, 3}, {3, 4}}, {3, 4, 7});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 1);
  EXPECT_EQ((*x)[1], 1);
  EXPECT_FALSE(solve_linear_system({{1, 1}, {2, 2}}, {1, 2}));
  EXPECT_FALSE(solve_linear_system({{1, 0}, {1, 0}}, {1, 2}));
}
