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

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "permagg/perm_group.hpp"

namespace permagg {
namespace {

using Image = std::vector<Label>;

Permutation RandomPermutation(std::size_t n, std::mt19937_64& rng) {
  Image image(n);
  std::iota(image.begin(), image.end(), 1U);
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation(image);
}

// Unordered pairs of one ring, computed without the library.
std::set<std::pair<Label, Label>> RingPairs(const std::vector<Label>& ring) {
  std::set<std::pair<Label, Label>> out;
  const std::size_t n = ring.size();
  if (n < 2) return out;
  for (std::size_t t = 0; t < n; ++t) {
    Label a = ring[t];
    Label b = ring[(t + 1) % n];
    if (a == b) continue;
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

TEST(Sigma, SmallCases) {
  EXPECT_TRUE(Sigma(1).is_identity());
  EXPECT_EQ(Sigma(2).image(), (Image{2, 1}));
  EXPECT_EQ(Sigma(3).image(), (Image{1, 3, 2}));
  EXPECT_EQ(Sigma(4).cycle_notation(), "(1 3 4 2)");
  EXPECT_THROW(Sigma(0), std::invalid_argument);
}

TEST(Sigma, Images) {
  EXPECT_EQ(Sigma(5).image(), (Image{1, 4, 2, 5, 3}));
  EXPECT_EQ(Sigma(6).image(), (Image{3, 1, 5, 2, 6, 4}));
  EXPECT_EQ(Sigma(4).image(), (Image{3, 1, 4, 2}));
}

TEST(Sigma, MatchesCycleDescription) {
  for (std::size_t n = 2; n <= 200; ++n) {
    ASSERT_EQ(Sigma(n).image(), oracle::SigmaFromCycle(n)) << "n=" << n;
  }
}

TEST(Sigma, CycleStructure) {
  for (std::size_t n = 5; n <= 60; ++n) {
    const auto cycles = Sigma(n).cycles();
    ASSERT_EQ(cycles.size(), 1u);
    EXPECT_EQ(cycles[0].size(), n % 2 == 1 ? n - 1 : n);
    if (n % 2 == 1) EXPECT_EQ(Sigma(n)(1), 1u);
  }
}

TEST(SigmaPrime, AgreesWithSigmaForOddN) {
  for (std::size_t n = 1; n <= 99; n += 2) {
    EXPECT_EQ(SigmaPrime(n), Sigma(n));
  }
}

TEST(SigmaPrime, EvenNFixesOneAndCyclesTheRest) {
  for (std::size_t n = 4; n <= 100; n += 2) {
    const Permutation p = SigmaPrime(n);
    EXPECT_EQ(p(1), 1u);
    const auto cycles = p.cycles();
    ASSERT_EQ(cycles.size(), 1u);
    EXPECT_EQ(cycles[0].size(), n - 1);
    EXPECT_EQ(Order(p), n - 1);
  }
  EXPECT_EQ(SigmaPrime(6).image(), (Image{1, 4, 2, 6, 3, 5}));
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation(Image{1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation(Image{0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation(Image{1, 2, 4}), std::invalid_argument);
}

TEST(Compose, Examples) {
  const Permutation s5 = Sigma(5);
  EXPECT_EQ(Compose(s5, Permutation::Identity(5)), s5);
  EXPECT_TRUE(Compose(s5, Inverse(s5)).is_identity());
  EXPECT_EQ(Compose(s5, s5).image(), (Image{1, 5, 4, 3, 2}));
  EXPECT_THROW(Compose(Sigma(4), Sigma(5)), std::invalid_argument);
}

TEST(Compose, MatchesOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 15;
    const auto p = RandomPermutation(n, rng);
    const auto q = RandomPermutation(n, rng);
    oracle::Perm p0(n), q0(n);
    for (std::size_t i = 0; i < n; ++i) {
      p0[i] = p.image()[i] - 1;
      q0[i] = q.image()[i] - 1;
    }
    const auto r0 = oracle::Compose(p0, q0);
    const auto r = Compose(p, q);
    for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(r.image()[i], r0[i] + 1);
  }
}

TEST(Order, Examples) {
  EXPECT_EQ(Order(Sigma(5)), 4u);
  EXPECT_EQ(Order(Sigma(6)), 6u);
  EXPECT_EQ(Order(Permutation::Identity(7)), 1u);
  EXPECT_EQ(Order(Permutation(Image{2, 1, 4, 5, 3})), 6u);
}

TEST(Order, LcmMatchesIteration) {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 20;
    const auto p = RandomPermutation(n, rng);
    ASSERT_EQ(Order(p), OrderByIteration(p));
  }
}

TEST(Power, MatchesRepeatedComposition) {
  const Permutation s = Sigma(9);
  Permutation acc = Permutation::Identity(9);
  for (std::size_t e = 0; e < 12; ++e) {
    EXPECT_EQ(Power(s, e), acc);
    acc = Compose(s, acc);
  }
}

TEST(GenerateGroup, Sizes) {
  EXPECT_EQ(GenerateGroup(Sigma(7)).size(), 6u);
  EXPECT_EQ(GenerateGroup(Sigma(8)).size(), 8u);
  EXPECT_EQ(GenerateGroup(Permutation::Identity(3)).size(), 1u);
  EXPECT_EQ(GenerateGroup(Sigma(1)).size(), 1u);
  EXPECT_EQ(GenerateGroup(Sigma(2)).size(), 2u);
  EXPECT_EQ(GenerateGroup(Sigma(3)).size(), 2u);
  for (std::size_t n = 4; n <= 200; ++n) {
    const std::size_t expected = n % 2 == 1 ? n - 1 : n;
    ASSERT_EQ(GenerateGroup(Sigma(n)).size(), expected) << "n=" << n;
  }
}

TEST(GenerateGroup, PowerOrderAndClosure) {
  const auto group = GenerateGroup(Sigma(9));
  const auto& el = group.elements();
  EXPECT_TRUE(el[0].is_identity());
  for (std::size_t i = 0; i < el.size(); ++i) {
    EXPECT_EQ(el[i], Power(Sigma(9), i));
    for (std::size_t j = 0; j < el.size(); ++j) {
      EXPECT_EQ(Compose(el[i], el[j]), el[(i + j) % el.size()]);
    }
  }
}

TEST(Act, Examples) {
  EXPECT_EQ(Act(Permutation::Identity(5), 3), 3u);
  EXPECT_EQ(Act(Sigma(5), 2), 4u);
  EXPECT_THROW(Act(Sigma(5), 0), std::out_of_range);
  EXPECT_THROW(Act(Sigma(5), 6), std::out_of_range);
}

TEST(Act, GroupActionAxioms) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const auto p = RandomPermutation(n, rng);
    const auto q = RandomPermutation(n, rng);
    const Label i = static_cast<Label>(1 + rng() % n);
    ASSERT_EQ(Act(Permutation::Identity(n), i), i);
    ASSERT_EQ(Act(Compose(p, q), i), Act(p, Act(q, i)));
  }
}

TEST(Arrangements, Examples) {
  const auto arrs = Arrangements(GenerateGroup(Sigma(5)));
  EXPECT_EQ(arrs[0].ring, (Image{1, 2, 3, 4, 5}));
  EXPECT_EQ(arrs[1].ring, (Image{1, 4, 2, 5, 3}));
  EXPECT_EQ(Arrangements(GenerateGroup(Sigma(6))).size(), 6u);
}

TEST(Arrangements, PairsCloseTheRing) {
  const Arrangement a{{1, 4, 2, 5, 3}};
  const std::vector<LabelPair> expected{{1, 4}, {4, 2}, {2, 5}, {5, 3}, {3, 1}};
  EXPECT_EQ(a.pairs(), expected);
  EXPECT_TRUE(Arrangement{{1}}.pairs().empty());
}

TEST(Coverage, SevenNeighbors) {
  const auto arrs = Arrangements(GenerateGroup(Sigma(7)));
  const auto report = MakeCoverageReport(arrs, 7);
  EXPECT_EQ(report.total_pairs(), 21u);
  EXPECT_EQ(report.covered_after[2], 21u);
  EXPECT_EQ(report.arrangements_to_cover(), 3u);
  EXPECT_TRUE(report.first_block_disjoint);
  EXPECT_TRUE(report.every_ordered_pair_exactly_once());
  std::size_t total = 0;
  for (std::size_t m : report.ordered_multiplicity) total += m;
  EXPECT_EQ(total, 42u);
}

TEST(Coverage, EightNeighborsWithFixedPointGenerator) {
  const auto arrs = Arrangements(GenerateGroup(SigmaPrime(8)));
  const auto report = MakeCoverageReport(arrs, 8);
  EXPECT_EQ(report.first_block_size, 3u);
  EXPECT_TRUE(report.first_block_disjoint);
  EXPECT_EQ(report.covered_after[3], 28u);
  EXPECT_EQ(DuplicatedPairs(arrs, 8, 4), 4u);
}

TEST(Coverage, EightNeighborsWithSigma) {
  const auto arrs = Arrangements(GenerateGroup(Sigma(8)));
  const auto report = MakeCoverageReport(arrs, 8);
  EXPECT_EQ(report.covered_after[3], 28u);
  EXPECT_EQ(DuplicatedPairs(arrs, 8, 4), 4u);
  EXPECT_TRUE(report.every_ordered_pair_at_least_once());
  // The n-cycle generator for even n repeats pairs early: (4,5) and (8,1)
  // appear in both the first and third arrangement.
  EXPECT_FALSE(report.first_block_disjoint);
  const auto p0 = RingPairs(arrs[0].ring);
  const auto p2 = RingPairs(arrs[2].ring);
  EXPECT_TRUE(p0.count({4, 5}) && p2.count({4, 5}));
  EXPECT_TRUE(p0.count({1, 8}) && p2.count({1, 8}));
}

TEST(Coverage, TinyDegreesAreCoveredImmediately) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto arrs = Arrangements(GenerateGroup(Sigma(n)));
    const auto report = MakeCoverageReport(arrs, n);
    EXPECT_EQ(report.covered_after[0], report.total_pairs());
    EXPECT_EQ(report.arrangements_to_cover(), 1u);
  }
}

TEST(Coverage, LawForAllDegrees) {
  for (std::size_t n = 4; n <= 200; ++n) {
    const auto arrs = Arrangements(GenerateGroup(SigmaPrime(n)));
    const std::size_t block = (n - 1) / 2;
    // Disjointness of the first block, checked pair by pair.
    std::set<std::pair<Label, Label>> seen;
    std::size_t listed = 0;
    for (std::size_t i = 0; i < block; ++i) {
      const auto pairs = RingPairs(arrs[i].ring);
      listed += pairs.size();
      seen.insert(pairs.begin(), pairs.end());
    }
    ASSERT_EQ(seen.size(), listed) << "n=" << n;
    ASSERT_TRUE(MakeCoverageReport(arrs, n).first_block_disjoint);

    for (const Permutation& gen : {Sigma(n), SigmaPrime(n)}) {
      const auto a = Arrangements(GenerateGroup(gen));
      std::set<std::pair<Label, Label>> covered;
      for (std::size_t i = 0; i < n / 2; ++i) {
        const auto pairs = RingPairs(a[i].ring);
        covered.insert(pairs.begin(), pairs.end());
      }
      ASSERT_EQ(covered.size(), n * (n - 1) / 2) << "n=" << n;
    }
    const auto full = MakeCoverageReport(Arrangements(GenerateGroup(Sigma(n))), n);
    ASSERT_TRUE(full.every_ordered_pair_at_least_once()) << "n=" << n;
    if (n % 2 == 1) ASSERT_TRUE(full.every_ordered_pair_exactly_once());
  }
}

TEST(Coverage, RejectsMismatchedDegree) {
  const auto arrs = Arrangements(GenerateGroup(Sigma(5)));
  EXPECT_THROW(MakeCoverageReport(arrs, 6), std::invalid_argument);
}

TEST(Coverage, CountsAreNondecreasing) {
  for (std::size_t n = 2; n <= 40; ++n) {
    const auto r = MakeCoverageReport(Arrangements(GenerateGroup(Sigma(n))), n);
    for (std::size_t i = 1; i < r.covered_after.size(); ++i) {
      ASSERT_GE(r.covered_after[i], r.covered_after[i - 1]);
    }
  }
}

}  // namespace
}  // namespace permagg
