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

#ifndef PERMAGG_PERM_GROUP_HPP_
#define PERMAGG_PERM_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

// Neighbor labels in this module are 1-indexed: a permutation of degree n
// acts on {1, ..., n}.
namespace permagg {

using Label = std::uint32_t;

class Permutation {
 public:
  Permutation() = default;
  // image[i - 1] = p(i). Throws unless image is a bijection on {1..n}.
  explicit Permutation(std::vector<Label> image);

  static Permutation Identity(std::size_t n);

  std::size_t degree() const { return image_.size(); }
  const std::vector<Label>& image() const { return image_; }
  Label operator()(Label i) const { return image_[i - 1]; }
  bool is_identity() const;

  // Disjoint cycles of length >= 2, each starting at its smallest label.
  std::vector<std::vector<Label>> cycles() const;
  // e.g. "(1 3 4 2)"; "()" for the identity.
  std::string cycle_notation() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Label> image_;
};

// Arrangement generator. n = 1 gives the identity. For n >= 2 the pattern
//   odd n:  fixes 1, cycle (2 4 6 ... n-1 n n-2 ... 5 3)
//   even n: n-cycle      (1 3 5 ... n-1 n n-2 ... 4 2)
// which reduces to (1 2), (2 3), (1 3 4 2) for n = 2, 3, 4.
Permutation Sigma(std::size_t n);

// Rotation of the classic edge-disjoint Hamiltonian cycle construction:
// fixes 1 and cycles (2 4 6 ... n-1 n n-2 ... 5 3) for odd n or
// (2 4 6 ... n-2 n n-1 ... 5 3) for even n. Equal to Sigma(n) for odd n.
// Starting from the ring 1..n its first floor((n-1)/2) powers give pairwise
// edge-disjoint rings for every n >= 3.
Permutation SigmaPrime(std::size_t n);

// (p ∘ q)(i) = p(q(i)).
Permutation Compose(const Permutation& p, const Permutation& q);
Permutation Inverse(const Permutation& p);
Permutation Power(const Permutation& p, std::size_t exponent);

// lcm of the cycle lengths.
std::uint64_t Order(const Permutation& p);
// Smallest t > 0 with p^t = e, by repeated composition.
std::uint64_t OrderByIteration(const Permutation& p);

// Group action of a permutation on a label. Throws on out-of-range labels.
Label Act(const Permutation& p, Label i);

class PermutationGroup {
 public:
  const Permutation& generator() const { return generator_; }
  // [e, g, g^2, ..., g^(order-1)].
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t degree() const { return generator_.degree(); }

 private:
  friend PermutationGroup GenerateGroup(const Permutation& g);
  Permutation generator_;
  std::vector<Permutation> elements_;
};

PermutationGroup GenerateGroup(const Permutation& g);

using LabelPair = std::pair<Label, Label>;

// A cyclic ordering of labels 1..n. Ring position t holds g(t) for the
// element g that produced it; consecutive pairs wrap around.
struct Arrangement {
  std::vector<Label> ring;

  std::size_t size() const { return ring.size(); }
  // The n ordered consecutive pairs (ring[t], ring[t+1 mod n]). Empty when
  // n < 2.
  std::vector<LabelPair> pairs() const;
};

Arrangement ArrangementOf(const Permutation& g);
std::vector<Arrangement> Arrangements(const PermutationGroup& group);
// Rings for e, g, g^2, ..., g^(count-1).
std::vector<Arrangement> ArrangementSequence(const Permutation& g,
                                             std::size_t count);

struct CoverageReport {
  std::size_t n = 0;
  // covered_after[i] = distinct unordered pairs covered by the first i + 1
  // arrangements.
  std::vector<std::size_t> covered_after;
  std::size_t first_block_size = 0;  // floor((n - 1) / 2)
  bool first_block_disjoint = true;
  // multiplicity[(a-1) * n + (b-1)] counts ordered pair (a, b) over all
  // arrangements.
  std::vector<std::size_t> ordered_multiplicity;

  std::size_t total_pairs() const { return n * (n - 1) / 2; }
  std::size_t ordered_count(Label a, Label b) const {
    return ordered_multiplicity[(a - 1) * n + (b - 1)];
  }
  // Smallest prefix length covering every unordered pair; 0 if never.
  std::size_t arrangements_to_cover() const;
  bool every_ordered_pair_at_least_once() const;
  bool every_ordered_pair_exactly_once() const;
};

CoverageReport MakeCoverageReport(std::span<const Arrangement> arrangements,
                                  std::size_t n);

// Number of unordered pairs seen more than once among the first `prefix`
// arrangements.
std::size_t DuplicatedPairs(std::span<const Arrangement> arrangements,
                            std::size_t n, std::size_t prefix);

}  // namespace permagg

#endif  // PERMAGG_PERM_GROUP_HPP_
