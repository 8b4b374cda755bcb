#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "climakg/analytics/quantiles.hpp"
#include "climakg/errors.hpp"
#include "oracles.hpp"

using namespace climakg;
namespace ct = climakg::testing;
using analytics::ComputeQuartiles;

constexpr double kTol = 1e-9;

TEST(Quartiles, KnownValues) {
  const auto q = ComputeQuartiles({1, 2, 3, 4});
  EXPECT_NEAR(q.q1, 1.75, kTol);
  EXPECT_NEAR(q.median, 2.5, kTol);
  EXPECT_NEAR(q.q3, 3.25, kTol);
  const auto single = ComputeQuartiles({5});
  EXPECT_EQ(single.q1, 5);
  EXPECT_EQ(single.median, 5);
  EXPECT_EQ(single.q3, 5);
  const auto unsorted = ComputeQuartiles({4, 1, 3, 2});
  EXPECT_NEAR(unsorted.q1, 1.75, kTol);
  const std::vector<double> sorted = {1, 2, 3, 4, 5};
  EXPECT_NEAR(analytics::SortedQuantile(sorted, 0.0), 1, kTol);
  EXPECT_NEAR(analytics::SortedQuantile(sorted, 1.0), 5, kTol);
  EXPECT_NEAR(analytics::SortedQuantile(sorted, 0.1), 1.4, kTol);
}

TEST(Quartiles, EmptyInput) {
  EXPECT_THROW(ComputeQuartiles({}), EmptyInput);
  EXPECT_THROW(analytics::SortedQuantile(std::vector<double>{}, 0.5), EmptyInput);
}

TEST(QuartilesProperties, MatchOracleAndInvariants) {
  std::mt19937_64 rng(81);
  for (int round = 0; round < 500; ++round) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 200)(rng);
    std::vector<double> v(n);
    std::normal_distribution<double> value(10, 8);
    for (auto& x : v) x = std::round(value(rng) * 10) / 10;
    const auto q = ComputeQuartiles(v);
    EXPECT_NEAR(q.q1, ct::BruteQuantile(v, 0.25), kTol);
    EXPECT_NEAR(q.median, ct::BruteQuantile(v, 0.5), kTol);
    EXPECT_NEAR(q.q3, ct::BruteQuantile(v, 0.75), kTol);
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    EXPECT_LE(*lo, q.q1);
    EXPECT_LE(q.q1, q.median);
    EXPECT_LE(q.median, q.q3);
    EXPECT_LE(q.q3, *hi);
    std::shuffle(v.begin(), v.end(), rng);
    const auto p = ComputeQuartiles(v);
    EXPECT_EQ(p.q1, q.q1);
    EXPECT_EQ(p.median, q.median);
    EXPECT_EQ(p.q3, q.q3);
  }
}
