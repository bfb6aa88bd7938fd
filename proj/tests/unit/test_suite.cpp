#include <gtest/gtest.h>

#include "fremlin/errors.hpp"
#include "fremlin/suite.hpp"

using namespace fremlin;

TEST(Suite, PassesAndIgnoresWorkerCount) {
  SuiteConfig config;
  config.seed = 7;
  config.samples = 30;
  const SuiteResult one = run_suite(config);
  EXPECT_TRUE(one.passed()) << one.to_text();
  config.workers = 3;
  const SuiteResult three = run_suite(config);
  EXPECT_EQ(one.to_json_text(config), three.to_json_text(config));
  config.seed = 8;
  EXPECT_NE(run_suite(config).to_json_text(config), one.to_json_text(config));
}

TEST(Suite, BrokenFixtureIsReported) {
  SuiteConfig config;
  config.samples = 20;
  const SuiteResult r = run_suite(config);
  bool found = false;
  for (const auto& rep : r.reports)
    if (const CheckLine* l = rep.find("universal/broken-fixture")) found = l->violations > 0 && l->passed();
  EXPECT_TRUE(found);
}

TEST(Suite, UnitFamilies) {
  CounterRng rng(5);
  for (int i = 0; i < 50; ++i) {
    EXPECT_TRUE(random_unit_family(rng, 4, 2, true).separating());
    const SeminormFamily blind = random_unit_family(rng, 4, 3, false, 2);
    EXPECT_FALSE(blind.separating());
    EXPECT_EQ(blind.blind_direction(), 2u);
  }
  EXPECT_THROW(random_unit_family(rng, 2, 2, false, 5), InvalidArgument);
  SuiteConfig bad;
  bad.samples = 0;
  EXPECT_THROW(run_suite(bad), InvalidArgument);
}
