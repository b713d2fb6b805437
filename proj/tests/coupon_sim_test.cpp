// Copyright 2026 The permagg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "oracles.hpp"
#include "permagg/coupon_sim.hpp"

namespace permagg {
namespace {

double Rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

TEST(Classic, Examples) {
  EXPECT_DOUBLE_EQ(CouponExpectationClassic(1), 1.0);
  EXPECT_DOUBLE_EQ(CouponExpectationClassic(2), 3.0);
  EXPECT_DOUBLE_EQ(CouponExpectationClassic(3), 5.5);
  EXPECT_THROW(CouponExpectationClassic(0), std::invalid_argument);
}

TEST(KCoupon, Examples) {
  EXPECT_DOUBLE_EQ(KCouponExpectation(2, 1), 3.0);
  EXPECT_DOUBLE_EQ(KCouponExpectation(3, 2), 2.5);
  for (std::size_t m = 1; m <= 300; m += 37) {
    EXPECT_NEAR(KCouponExpectation(m, m), 1.0, 1e-12);
  }
  EXPECT_THROW(KCouponExpectation(3, 4), std::invalid_argument);
  EXPECT_THROW(KCouponExpectation(3, 0), std::invalid_argument);
}

TEST(KCoupon, SingleDrawsMatchClassic) {
  for (std::size_t m = 1; m <= 200; ++m) {
    ASSERT_LE(Rel(KCouponExpectation(m, 1), CouponExpectationClassic(m)), 1e-9)
        << "m=" << m;
  }
}

TEST(KCoupon, MatchesSubsetChainOracle) {
  for (std::size_t m = 1; m <= 10; ++m) {
    for (std::size_t k = 1; k <= m; ++k) {
      const double exact = oracle::KCouponBySubsets(m, k);
      ASSERT_LE(Rel(KCouponAlternatingSum(m, k), exact), 1e-10);
      ASSERT_LE(Rel(KCouponMarkovChain(m, k), exact), 1e-10);
      ASSERT_LE(Rel(KCouponTailSum(m, k), exact), 1e-10);
    }
  }
}

TEST(KCoupon, EvaluatorsAgreeWhereTheAlternatingSumHolds) {
  for (std::size_t m = 2; m <= kAlternatingSumMaxM; ++m) {
    for (std::size_t k : {std::size_t{1}, m / 3 + 1, m - 1}) {
      const double chain = KCouponMarkovChain(m, k);
      ASSERT_LE(Rel(KCouponAlternatingSum(m, k), chain), 1e-9)
          << "m=" << m << " k=" << k;
    }
  }
}

TEST(KCoupon, ChainMatchesTailSumForLargeM) {
  const std::vector<std::pair<std::size_t, std::size_t>> cases{
      {45, 9}, {190, 19}, {1225, 49}, {4950, 99}, {2450, 49}};
  for (const auto& [m, k] : cases) {
    const double chain = KCouponMarkovChain(m, k);
    EXPECT_LE(Rel(chain, KCouponTailSum(m, k)), 1e-9) << "m=" << m;
    EXPECT_DOUBLE_EQ(KCouponExpectation(m, k), chain);
  }
}

TEST(KCoupon, FiniteAndMonotoneForHugeM) {
  // K_1000 has 499500 edges drawn 999 at a time.
  const double e = KCouponExpectation(499500, 999);
  EXPECT_TRUE(std::isfinite(e));
  EXPECT_GT(e, 500.0);
  EXPECT_LT(e, 1.2 * 1000.0 * std::log(1000.0));
  EXPECT_LT(KCouponExpectation(4950, 99), KCouponExpectation(4950, 50));
}

TEST(Simulation, TwoNodes) {
  const auto r = SimulateCoverComplete(2, false, 100, 1);
  EXPECT_EQ(r.mean_cover_time, 1.0);
  EXPECT_EQ(r.stddev, 0.0);
}

TEST(Simulation, TenNodesMatchesClosedForm) {
  const auto r = SimulateCoverComplete(10, false, 10000, 42);
  EXPECT_LE(Rel(r.mean_cover_time, KCouponExpectation(45, 9)), 0.05);
  const auto d = SimulateCoverComplete(10, true, 10000, 42);
  EXPECT_LE(Rel(d.mean_cover_time, KCouponExpectation(90, 9)), 0.05);
}

TEST(Simulation, LowerBoundAndMetadata) {
  for (std::size_t n : {3, 6, 9}) {
    const auto r = SimulateCoverComplete(n, false, 200, 7);
    EXPECT_GE(r.mean_cover_time, std::ceil((n - 1) / 2.0));
    EXPECT_EQ(r.n, n);
    EXPECT_EQ(r.trials, 200u);
    EXPECT_EQ(r.seed, 7u);
    EXPECT_FALSE(r.directed);
  }
}

TEST(Simulation, ThreadCountDoesNotChangeResult) {
  const auto one = SimulateCoverComplete(12, false, 300, 9, 1);
  const auto four = SimulateCoverComplete(12, false, 300, 9, 4);
  EXPECT_EQ(one.mean_cover_time, four.mean_cover_time);
  EXPECT_EQ(one.stddev, four.stddev);
}

TEST(Simulation, RejectsBadArguments) {
  EXPECT_THROW(SimulateCoverComplete(1, false, 10, 0), std::invalid_argument);
  EXPECT_THROW(SimulateCoverComplete(5, false, 0, 0), std::invalid_argument);
}

TEST(Simulation, GrowthLaw) {
  for (std::size_t n : {10, 20, 50, 100, 200}) {
    const auto r = SimulateCoverComplete(n, false, 200, 3);
    const double shape = r.mean_cover_time / (n * std::log(static_cast<double>(n)));
    EXPECT_GE(shape, 0.3) << "n=" << n;
    EXPECT_LE(shape, 1.2) << "n=" << n;
  }
}

TEST(PgCount, Examples) {
  EXPECT_EQ(PgCoverCount(7, false), 3u);
  EXPECT_EQ(PgCoverCount(8, true), 8u);
  EXPECT_EQ(PgCoverCount(7, true), 6u);
  EXPECT_EQ(PgCoverCount(1, false), 1u);
  EXPECT_EQ(PgCoverCount(3, false), 1u);
  EXPECT_EQ(PgCoverCount(1, true), 1u);
  EXPECT_THROW(PgCoverCount(0, false), std::invalid_argument);
}

TEST(Savings, TenNodesExceedsOne) {
  EXPECT_GT(SavingsRatio(10, 500, 1), 1.0);
  EXPECT_THROW(SavingsRatio(3, 10, 1), std::invalid_argument);
}

TEST(Sweep, RowsAndCsv) {
  const auto rows = CoverSweep(4, 8, 2, true, true, 50, 1);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0].n, 4u);
  EXPECT_FALSE(rows[0].directed);
  EXPECT_TRUE(rows[1].directed);
  EXPECT_EQ(rows[5].n, 8u);
  EXPECT_DOUBLE_EQ(rows[0].closed_form, KCouponExpectation(6, 3));
  EXPECT_DOUBLE_EQ(rows[1].closed_form, KCouponExpectation(12, 3));
  std::stringstream ss;
  WriteSweepCsv(ss, rows);
  std::string header;
  std::getline(ss, header);
  EXPECT_EQ(header, "n,mode,trials,mean,stddev,closed_form,pg_count,ratio");
  std::string line;
  std::getline(ss, line);
  EXPECT_EQ(line.rfind("4,undirected,50,", 0), 0u);
  EXPECT_THROW(CoverSweep(1, 5, 1, true, false, 5, 0), std::invalid_argument);
  EXPECT_THROW(CoverSweep(5, 4, 1, true, false, 5, 0), std::invalid_argument);
}

}  // namespace
}  // namespace permagg
