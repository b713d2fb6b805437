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

#include "permagg/coupon_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

namespace permagg {

namespace {

// Neumaier compensated accumulator.
template <typename T>
class CompensatedSum {
 public:
  void Add(T x) {
    const T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  T sum_ = 0;
  T comp_ = 0;
};

void CheckCouponArgs(std::size_t m, std::size_t k) {
  if (m == 0) throw std::invalid_argument("need at least one coupon type");
  if (k == 0 || k > m) {
    throw std::invalid_argument("draw size k = " + std::to_string(k) +
                                " must satisfy 1 <= k <= m = " +
                                std::to_string(m));
  }
}

// Probabilities of drawing t new types (t = lo, lo+1, ...) when j of m are
// collected and k are drawn. Weights are built outward from the mode by
// ratio recurrences and normalized, so no factorials are evaluated.
struct HypergeometricRow {
  std::size_t lo = 0;
  std::vector<double> prob;
};

HypergeometricRow NewTypesDistribution(std::size_t m, std::size_t k,
                                       std::size_t j) {
  constexpr double kNegligible = 1e-30;
  const std::size_t fresh = m - j;
  const std::size_t t_min = k > j ? k - j : 0;
  const std::size_t t_max = std::min(k, fresh);
  // Ratio w(t+1) / w(t).
  auto up = [&](std::size_t t) {
    return (static_cast<double>(fresh - t) / static_cast<double>(t + 1)) *
           (static_cast<double>(k - t) /
            static_cast<double>(j + t + 1 - k));
  };
  const double mode_guess = static_cast<double>(k + 1) *
                            static_cast<double>(fresh + 1) /
                            static_cast<double>(m + 2);
  std::size_t mode = std::clamp(static_cast<std::size_t>(mode_guess), t_min,
                                t_max);

  std::vector<double> below;  // w(mode-1), w(mode-2), ...
  double w = 1.0;
  for (std::size_t t = mode; t > t_min; --t) {
    w /= up(t - 1);
    if (w < kNegligible) break;
    below.push_back(w);
  }
  std::vector<double> above;  // w(mode+1), ...
  w = 1.0;
  for (std::size_t t = mode; t < t_max; ++t) {
    w *= up(t);
    if (w < kNegligible) break;
    above.push_back(w);
  }

  HypergeometricRow row;
  row.lo = mode - below.size();
  row.prob.assign(below.rbegin(), below.rend());
  row.prob.push_back(1.0);
  row.prob.insert(row.prob.end(), above.begin(), above.end());
  const double total = std::accumulate(row.prob.begin(), row.prob.end(), 0.0);
  for (double& p : row.prob) p /= total;
  return row;
}

std::uint64_t TrialCoverTime(std::size_t n, bool directed, std::uint64_t seed,
                             std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0U);
  std::vector<std::uint64_t> seen((n * n + 63) / 64, 0);
  std::size_t remaining = directed ? n * (n - 1) : n * (n - 1) / 2;
  std::uint64_t draws = 0;
  while (remaining > 0) {
    std::shuffle(order.begin(), order.end(), rng);
    ++draws;
    for (std::size_t t = 0; t + 1 < n; ++t) {
      std::size_t a = order[t];
      std::size_t b = order[t + 1];
      if (!directed && a > b) std::swap(a, b);
      const std::size_t idx = a * n + b;
      const std::uint64_t bit = std::uint64_t{1} << (idx & 63);
      if ((seen[idx >> 6] & bit) == 0) {
        seen[idx >> 6] |= bit;
        --remaining;
      }
    }
  }
  return draws;
}

}  // namespace

double CouponExpectationClassic(std::size_t m) {
  if (m == 0) throw std::invalid_argument("need at least one coupon type");
  CompensatedSum<long double> h;
  for (std::size_t i = m; i >= 1; --i) h.Add(1.0L / static_cast<long double>(i));
  return static_cast<double>(static_cast<long double>(m) * h.value());
}

double KCouponAlternatingSum(std::size_t m, std::size_t k) {
  CheckCouponArgs(m, k);
  CompensatedSum<long double> sum;
  long double binom = 1.0L;  // C(m, i)
  for (std::size_t i = 1; i <= m; ++i) {
    binom = binom * static_cast<long double>(m - i + 1) /
            static_cast<long double>(i);
    // C(m-i, k) / C(m, k) = prod_{t<k} (m-i-t) / (m-t).
    long double miss = 0.0L;
    if (m - i >= k) {
      miss = 1.0L;
      for (std::size_t t = 0; t < k; ++t) {
        miss *= static_cast<long double>(m - i - t) /
                static_cast<long double>(m - t);
      }
    }
    const long double term = binom / (1.0L - miss);
    sum.Add(i % 2 == 1 ? term : -term);
  }
  return static_cast<double>(sum.value());
}

double KCouponMarkovChain(std::size_t m, std::size_t k) {
  CheckCouponArgs(m, k);
  // remaining[j] = expected further draws with j types collected.
  std::vector<long double> remaining(m + 1, 0.0L);
  for (std::size_t j = m; j-- > 0;) {
    const auto row = NewTypesDistribution(m, k, j);
    long double progress = 0.0L;
    long double weighted = 0.0L;
    for (std::size_t i = 0; i < row.prob.size(); ++i) {
      const std::size_t t = row.lo + i;
      if (t == 0) continue;
      progress += row.prob[i];
      weighted += row.prob[i] * remaining[j + t];
    }
    remaining[j] = (1.0L + weighted) / progress;
  }
  return static_cast<double>(remaining[0]);
}

double KCouponTailSum(std::size_t m, std::size_t k, double rel_tol) {
  CheckCouponArgs(m, k);
  std::vector<HypergeometricRow> rows;
  rows.reserve(m);
  for (std::size_t j = 0; j < m; ++j) rows.push_back(NewTypesDistribution(m, k, j));

  std::vector<long double> dist(m + 1, 0.0L);
  std::vector<long double> next(m + 1, 0.0L);
  dist[0] = 1.0L;
  CompensatedSum<long double> expectation;
  expectation.Add(1.0L);  // Pr(X > 0)
  for (std::size_t s = 1;; ++s) {
    std::fill(next.begin(), next.end(), 0.0L);
    next[m] = dist[m];
    for (std::size_t j = 0; j < m; ++j) {
      if (dist[j] == 0.0L) continue;
      const auto& row = rows[j];
      for (std::size_t i = 0; i < row.prob.size(); ++i) {
        next[j + row.lo + i] += dist[j] * row.prob[i];
      }
    }
    dist.swap(next);
    const long double tail = 1.0L - dist[m];  // Pr(X > s)
    expectation.Add(tail);
    if (tail < rel_tol * expectation.value()) break;
    if (s > 100000000) {
      throw std::runtime_error("tail sum did not converge");
    }
  }
  return static_cast<double>(expectation.value());
}

double KCouponExpectation(std::size_t m, std::size_t k) {
  CheckCouponArgs(m, k);
  if (m <= kAlternatingSumMaxM) return KCouponAlternatingSum(m, k);
  return KCouponMarkovChain(m, k);
}

SimulationResult SimulateCoverComplete(std::size_t n, bool directed,
                                       std::size_t trials, std::uint64_t seed,
                                       std::size_t threads) {
  if (n < 2) throw std::invalid_argument("cover simulation needs n >= 2");
  if (trials == 0) throw std::invalid_argument("need at least one trial");
  std::vector<std::uint64_t> times(trials);
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, trials);
  if (workers == 1) {
    for (std::size_t t = 0; t < trials; ++t) {
      times[t] = TrialCoverTime(n, directed, seed, t);
    }
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < trials; t += workers) {
          times[t] = TrialCoverTime(n, directed, seed, t);
        }
      });
    }
  }

  // Welford in trial order.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const double x = static_cast<double>(times[t]);
    const double delta = x - mean;
    mean += delta / static_cast<double>(t + 1);
    m2 += delta * (x - mean);
  }
  SimulationResult result;
  result.n = n;
  result.directed = directed;
  result.trials = trials;
  result.mean_cover_time = mean;
  result.stddev = trials > 1 ? std::sqrt(m2 / static_cast<double>(trials - 1))
                             : 0.0;
  result.seed = seed;
  return result;
}

std::size_t PgCoverCount(std::size_t n, bool directed) {
  if (n == 0) throw std::invalid_argument("need n >= 1");
  if (directed) {
    if (n == 1) return 1;
    return n % 2 == 0 ? n : n - 1;
  }
  return n < 4 ? 1 : n / 2;
}

double SavingsRatio(std::size_t n, std::size_t trials, std::uint64_t seed,
                    std::size_t threads) {
  if (n < 4) throw std::invalid_argument("savings ratio needs n >= 4");
  const auto sim = SimulateCoverComplete(n, false, trials, seed, threads);
  return sim.mean_cover_time / static_cast<double>(PgCoverCount(n, false));
}

std::vector<SweepRow> CoverSweep(std::size_t n_begin, std::size_t n_end,
                                 std::size_t n_step, bool undirected,
                                 bool directed, std::size_t trials,
                                 std::uint64_t seed, std::size_t threads) {
  if (n_begin < 2 || n_step == 0 || n_end < n_begin) {
    throw std::invalid_argument("sweep range must satisfy 2 <= begin <= end "
                                "with a positive step");
  }
  std::vector<SweepRow> rows;
  for (std::size_t n = n_begin; n <= n_end; n += n_step) {
    for (bool dir : {false, true}) {
      if ((dir && !directed) || (!dir && !undirected)) continue;
      SweepRow row;
      row.n = n;
      row.directed = dir;
      row.sim = SimulateCoverComplete(n, dir, trials, seed, threads);
      const std::size_t m = dir ? n * (n - 1) : n * (n - 1) / 2;
      row.closed_form = KCouponExpectation(m, n - 1);
      row.pg_count = PgCoverCount(n, dir);
      row.ratio = row.sim.mean_cover_time / static_cast<double>(row.pg_count);
      rows.push_back(row);
    }
  }
  return rows;
}

void WriteSweepCsv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "n,mode,trials,mean,stddev,closed_form,pg_count,ratio\n";
  const auto old_precision = out.precision(10);
  for (const auto& r : rows) {
    out << r.n << ',' << (r.directed ? "directed" : "undirected") << ','
        << r.sim.trials << ',' << r.sim.mean_cover_time << ',' << r.sim.stddev
        << ',' << r.closed_form << ',' << r.pg_count << ',' << r.ratio << '\n';
  }
  out.precision(old_precision);
}

}  // namespace permagg
