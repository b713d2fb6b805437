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

#include "permagg/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permagg {

namespace {

// Writes the cycle c0 -> c1 -> ... -> c0 into image (1-indexed labels).
void SetCycle(std::vector<Label>& image, const std::vector<Label>& cycle) {
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    image[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
  }
}

std::vector<Label> IdentityImage(std::size_t n) {
  std::vector<Label> image(n);
  std::iota(image.begin(), image.end(), Label{1});
  return image;
}

std::size_t PairIndex(Label a, Label b, std::size_t n) {
  if (a > b) std::swap(a, b);
  return (a - 1) * n + (b - 1);
}

}  // namespace

Permutation::Permutation(std::vector<Label> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (Label x : image_) {
    if (x < 1 || x > image_.size() || seen[x - 1]) {
      throw std::invalid_argument("image is not a bijection on {1..n}");
    }
    seen[x - 1] = true;
  }
}

Permutation Permutation::Identity(std::size_t n) {
  return Permutation(IdentityImage(n));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i + 1) return false;
  }
  return true;
}

std::vector<std::vector<Label>> Permutation::cycles() const {
  std::vector<std::vector<Label>> out;
  std::vector<bool> seen(image_.size(), false);
  for (Label start = 1; start <= image_.size(); ++start) {
    if (seen[start - 1] || (*this)(start) == start) continue;
    std::vector<Label> cycle;
    for (Label x = start; !seen[x - 1]; x = (*this)(x)) {
      seen[x - 1] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::cycle_notation() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& c : cs) {
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0) out << ' ';
      out << c[i];
    }
    out << ')';
  }
  return out.str();
}

Permutation Sigma(std::size_t n) {
  if (n == 0) throw std::invalid_argument("sigma requires n >= 1");
  auto image = IdentityImage(n);
  if (n == 1) return Permutation(std::move(image));
  std::vector<Label> cycle;
  if (n % 2 == 1) {
    for (Label x = 2; x < n; x += 2) cycle.push_back(x);
    for (Label x = static_cast<Label>(n); x > 1; x -= 2) cycle.push_back(x);
  } else {
    for (Label x = 1; x < n; x += 2) cycle.push_back(x);
    for (Label x = static_cast<Label>(n); x > 0; x -= 2) cycle.push_back(x);
  }
  SetCycle(image, cycle);
  return Permutation(std::move(image));
}

Permutation SigmaPrime(std::size_t n) {
  if (n == 0) throw std::invalid_argument("sigma' requires n >= 1");
  if (n % 2 == 1) return Sigma(n);
  auto image = IdentityImage(n);
  if (n == 2) return Permutation(std::move(image));
  std::vector<Label> cycle;
  for (Label x = 2; x + 1 < n; x += 2) cycle.push_back(x);
  cycle.push_back(static_cast<Label>(n));
  for (Label x = static_cast<Label>(n - 1); x > 1; x -= 2) cycle.push_back(x);
  SetCycle(image, cycle);
  return Permutation(std::move(image));
}

Permutation Compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("cannot compose permutations of degree " +
                                std::to_string(p.degree()) + " and " +
                                std::to_string(q.degree()));
  }
  std::vector<Label> image(p.degree());
  for (Label i = 1; i <= p.degree(); ++i) image[i - 1] = p(q(i));
  return Permutation(std::move(image));
}

Permutation Inverse(const Permutation& p) {
  std::vector<Label> image(p.degree());
  for (Label i = 1; i <= p.degree(); ++i) image[p(i) - 1] = i;
  return Permutation(std::move(image));
}

Permutation Power(const Permutation& p, std::size_t exponent) {
  Permutation result = Permutation::Identity(p.degree());
  Permutation base = p;
  while (exponent > 0) {
    if (exponent & 1U) result = Compose(result, base);
    base = Compose(base, base);
    exponent >>= 1U;
  }
  return result;
}

std::uint64_t Order(const Permutation& p) {
  std::uint64_t order = 1;
  for (const auto& c : p.cycles()) order = std::lcm(order, c.size());
  return order;
}

std::uint64_t OrderByIteration(const Permutation& p) {
  std::uint64_t t = 1;
  for (Permutation q = p; !q.is_identity(); q = Compose(p, q)) ++t;
  return t;
}

Label Act(const Permutation& p, Label i) {
  if (i < 1 || i > p.degree()) {
    throw std::out_of_range("label " + std::to_string(i) +
                            " outside 1.." + std::to_string(p.degree()));
  }
  return p(i);
}

PermutationGroup GenerateGroup(const Permutation& g) {
  PermutationGroup group;
  group.generator_ = g;
  Permutation current = Permutation::Identity(g.degree());
  do {
    group.elements_.push_back(current);
    current = Compose(g, current);
  } while (!current.is_identity());
  return group;
}

std::vector<LabelPair> Arrangement::pairs() const {
  std::vector<LabelPair> out;
  const std::size_t n = ring.size();
  if (n < 2) return out;
  out.reserve(n);
  for (std::size_t t = 0; t < n; ++t) out.emplace_back(ring[t], ring[(t + 1) % n]);
  return out;
}

Arrangement ArrangementOf(const Permutation& g) { return {g.image()}; }

std::vector<Arrangement> Arrangements(const PermutationGroup& group) {
  std::vector<Arrangement> out;
  out.reserve(group.size());
  for (const auto& g : group.elements()) out.push_back(ArrangementOf(g));
  return out;
}

std::vector<Arrangement> ArrangementSequence(const Permutation& g,
                                             std::size_t count) {
  std::vector<Arrangement> out;
  out.reserve(count);
  Permutation current = Permutation::Identity(g.degree());
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(ArrangementOf(current));
    current = Compose(g, current);
  }
  return out;
}

CoverageReport MakeCoverageReport(std::span<const Arrangement> arrangements,
                                  std::size_t n) {
  CoverageReport report;
  report.n = n;
  report.first_block_size = n == 0 ? 0 : (n - 1) / 2;
  report.ordered_multiplicity.assign(n * n, 0);

  std::vector<std::size_t> unordered(n * n, 0);
  std::size_t covered = 0;
  for (std::size_t idx = 0; idx < arrangements.size(); ++idx) {
    const auto& arr = arrangements[idx];
    if (arr.size() != n) {
      throw std::invalid_argument("arrangement degree " +
                                  std::to_string(arr.size()) +
                                  " differs from n = " + std::to_string(n));
    }
    for (const auto& [a, b] : arr.pairs()) {
      if (a == b) continue;
      ++report.ordered_multiplicity[(a - 1) * n + (b - 1)];
      auto& slot = unordered[PairIndex(a, b, n)];
      if (slot == 0) ++covered;
      ++slot;
      if (idx < report.first_block_size && slot > 1) {
        report.first_block_disjoint = false;
      }
    }
    report.covered_after.push_back(covered);
  }
  return report;
}

std::size_t DuplicatedPairs(std::span<const Arrangement> arrangements,
                            std::size_t n, std::size_t prefix) {
  std::vector<std::size_t> count(n * n, 0);
  for (std::size_t idx = 0; idx < prefix && idx < arrangements.size(); ++idx) {
    for (const auto& [a, b] : arrangements[idx].pairs()) {
      if (a != b) ++count[PairIndex(a, b, n)];
    }
  }
  return static_cast<std::size_t>(
      std::count_if(count.begin(), count.end(),
                    [](std::size_t c) { return c > 1; }));
}

std::size_t CoverageReport::arrangements_to_cover() const {
  for (std::size_t i = 0; i < covered_after.size(); ++i) {
    if (covered_after[i] == total_pairs()) return i + 1;
  }
  return 0;
}

bool CoverageReport::every_ordered_pair_at_least_once() const {
  for (Label a = 1; a <= n; ++a) {
    for (Label b = 1; b <= n; ++b) {
      if (a != b && ordered_count(a, b) == 0) return false;
    }
  }
  return true;
}

bool CoverageReport::every_ordered_pair_exactly_once() const {
  for (Label a = 1; a <= n; ++a) {
    for (Label b = 1; b <= n; ++b) {
      if (a != b && ordered_count(a, b) != 1) return false;
    }
  }
  return true;
}

}  // namespace permagg
