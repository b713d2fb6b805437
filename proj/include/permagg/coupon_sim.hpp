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

#ifndef PERMAGG_COUPON_SIM_HPP_
#define PERMAGG_COUPON_SIM_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace permagg {

// m * H(m).
double CouponExpectationClassic(std::size_t m);

// Above this m the alternating inclusion-exclusion sum loses all precision
// even in extended arithmetic, and KCouponExpectation switches to the
// absorbing-chain recursion.
inline constexpr std::size_t kAlternatingSumMaxM = 32;

// Expected number of k-subset draws (uniform, without repetition inside a
// draw) until all m coupon types are seen.
double KCouponExpectation(std::size_t m, std::size_t k);

// Inclusion-exclusion closed form
//   sum_{i=1}^{m} (-1)^{i+1} C(m,i) / (1 - C(m-i,k)/C(m,k))
// in long double with compensated summation. Accurate only for small m.
double KCouponAlternatingSum(std::size_t m, std::size_t k);

// Exact recursion on the number of collected types: from j collected, a
// draw adds t new ones with hypergeometric probability. All terms positive.
double KCouponMarkovChain(std::size_t m, std::size_t k);

// E[X] = sum_{s>=0} Pr(X > s), with the distribution of collected types
// propagated draw by draw; stops at tail mass below rel_tol * running sum.
double KCouponTailSum(std::size_t m, std::size_t k, double rel_tol = 1e-12);

struct SimulationResult {
  std::size_t n = 0;
  bool directed = false;
  std::size_t trials = 0;
  double mean_cover_time = 0.0;
  double stddev = 0.0;
  std::uint64_t seed = 0;
};

// Draws uniformly random node orderings of K_n; each contributes its n - 1
// consecutive pairs (as undirected edges, or as arcs in directed mode).
// Counts draws until every edge (arc) has appeared. Trial t is seeded from
// (seed, t). `threads` > 1 splits trials across threads; the result does not
// depend on it.
SimulationResult SimulateCoverComplete(std::size_t n, bool directed,
                                       std::size_t trials, std::uint64_t seed,
                                       std::size_t threads = 1);

// Orderings used by the permutation-group strategy: floor(n/2) undirected
// (1 when n < 4), or n / n - 1 directed for even / odd n (1 when n = 1).
std::size_t PgCoverCount(std::size_t n, bool directed);

// Simulated undirected mean cover time / PgCoverCount(n, false).
double SavingsRatio(std::size_t n, std::size_t trials, std::uint64_t seed,
                    std::size_t threads = 1);

struct SweepRow {
  std::size_t n = 0;
  bool directed = false;
  SimulationResult sim;
  double closed_form = 0.0;
  std::size_t pg_count = 0;
  double ratio = 0.0;  // sim mean / pg_count
};

std::vector<SweepRow> CoverSweep(std::size_t n_begin, std::size_t n_end,
                                 std::size_t n_step, bool undirected,
                                 bool directed, std::size_t trials,
                                 std::uint64_t seed, std::size_t threads = 1);

// "n,mode,trials,mean,stddev,closed_form,pg_count,ratio".
void WriteSweepCsv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace permagg

#endif  // PERMAGG_COUPON_SIM_HPP_
