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

#include "permagg/wl.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace permagg {

namespace {

using Signature = std::vector<Color>;

// Assigns consecutive ids to the distinct signatures in sorted order.
class Interner {
 public:
  void Add(const Signature& s) { table_.emplace(s, 0); }
  void Freeze() {
    Color next = 0;
    for (auto& [sig, id] : table_) id = next++;
  }
  Color Get(const Signature& s) const { return table_.at(s); }
  std::size_t size() const { return table_.size(); }

 private:
  std::map<Signature, Color> table_;
};

std::size_t IntPow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

// Multiset as sorted (color, count) runs, prefixed by its size.
void AppendMultiset(std::vector<Color>& colors, Signature& out) {
  std::sort(colors.begin(), colors.end());
  out.push_back(static_cast<Color>(colors.size()));
  for (std::size_t i = 0; i < colors.size();) {
    std::size_t j = i;
    while (j < colors.size() && colors[j] == colors[i]) ++j;
    out.push_back(colors[i]);
    out.push_back(static_cast<Color>(j - i));
    i = j;
  }
}

// Equality pattern plus ordered adjacency pattern of the tuple. For k <= 3
// this determines the isomorphism type of the labeled induced subgraph.
Color AtomicType(const Graph& g, std::span<const Node> tuple) {
  Color code = 0;
  for (std::size_t a = 0; a < tuple.size(); ++a) {
    for (std::size_t b = a + 1; b < tuple.size(); ++b) {
      const bool equal = tuple[a] == tuple[b];
      const bool adjacent = !equal && g.has_edge(tuple[a], tuple[b]);
      code = code * 3 + (equal ? 2 : (adjacent ? 1 : 0));
    }
  }
  return code;
}

void Decode(std::size_t index, std::size_t n, std::span<Node> tuple) {
  for (std::size_t j = tuple.size(); j-- > 0;) {
    tuple[j] = static_cast<Node>(index % n);
    index /= n;
  }
}

std::map<Color, std::size_t> Histogram(const std::vector<Color>& colors) {
  std::map<Color, std::size_t> h;
  for (Color c : colors) ++h[c];
  return h;
}

void CheckInput(const Graph& g, std::size_t k, const WlBudget& budget) {
  if (g.directed()) {
    throw std::invalid_argument("WL refinement expects undirected graphs");
  }
  if (k < 1 || k > 3) {
    throw std::invalid_argument("k must be 1, 2 or 3");
  }
  const std::size_t n = g.node_count();
  const std::size_t limit = k == 2 ? budget.max_nodes_k2
                            : k == 3 ? budget.max_nodes_k3
                                     : n;
  if (n > limit) {
    throw std::length_error(
        std::to_string(k) + "-WL on " + std::to_string(n) +
        " nodes needs " + std::to_string(IntPow(n, k)) +
        " tuples; budget allows N <= " + std::to_string(limit));
  }
}

// One round of signatures for a single graph.
std::vector<Signature> Signatures(const Graph& g, std::size_t k,
                                  const std::vector<Color>& colors) {
  const std::size_t n = g.node_count();
  std::vector<Signature> sigs(colors.size());
  std::vector<Color> bucket;
  if (k == 1) {
    for (Node v = 0; v < n; ++v) {
      bucket.clear();
      for (Node u : g.neighbors(v)) bucket.push_back(colors[u]);
      sigs[v].push_back(colors[v]);
      AppendMultiset(bucket, sigs[v]);
    }
    return sigs;
  }
  std::array<std::size_t, 3> stride{};
  for (std::size_t j = 0; j < k; ++j) stride[j] = IntPow(n, k - 1 - j);
  std::array<Node, 3> tuple{};
  for (std::size_t idx = 0; idx < colors.size(); ++idx) {
    Decode(idx, n, std::span<Node>(tuple.data(), k));
    Signature& sig = sigs[idx];
    sig.push_back(colors[idx]);
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t base = idx - tuple[j] * stride[j];
      bucket.clear();
      for (std::size_t u = 0; u < n; ++u) {
        bucket.push_back(colors[base + u * stride[j]]);
      }
      AppendMultiset(bucket, sig);
    }
  }
  return sigs;
}

}  // namespace

std::vector<ColorHistogram> RefineJointly(std::span<const Graph* const> graphs,
                                          std::size_t k,
                                          const WlBudget& budget) {
  for (const Graph* g : graphs) CheckInput(*g, k, budget);

  std::vector<std::vector<Color>> colors(graphs.size());
  std::vector<ColorHistogram> out(graphs.size());

  // Initial coloring.
  {
    std::vector<std::vector<Signature>> init(graphs.size());
    Interner interner;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      const Graph& g = *graphs[gi];
      const std::size_t count = IntPow(g.node_count(), k);
      init[gi].resize(count);
      std::array<Node, 3> tuple{};
      for (std::size_t idx = 0; idx < count; ++idx) {
        Color code = 0;
        if (k > 1) {
          Decode(idx, g.node_count(), std::span<Node>(tuple.data(), k));
          code = AtomicType(g, std::span<const Node>(tuple.data(), k));
        }
        init[gi][idx] = {code};
        interner.Add(init[gi][idx]);
      }
      out[gi].k = k;
      out[gi].item_count = count;
    }
    interner.Freeze();
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      colors[gi].resize(init[gi].size());
      for (std::size_t idx = 0; idx < init[gi].size(); ++idx) {
        colors[gi][idx] = interner.Get(init[gi][idx]);
      }
      out[gi].iterations.push_back(Histogram(colors[gi]));
    }
  }

  auto joint_classes = [&]() {
    std::vector<bool> seen;
    std::size_t count = 0;
    for (const auto& cs : colors) {
      for (Color c : cs) {
        if (c >= seen.size()) seen.resize(c + 1, false);
        if (!seen[c]) {
          seen[c] = true;
          ++count;
        }
      }
    }
    return count;
  };

  std::size_t max_items = 0;
  for (const auto& h : out) max_items = std::max(max_items, h.item_count);

  std::size_t classes = joint_classes();
  for (std::size_t round = 0; round <= max_items; ++round) {
    std::vector<std::vector<Signature>> sigs(graphs.size());
    Interner interner;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      sigs[gi] = Signatures(*graphs[gi], k, colors[gi]);
      for (const auto& s : sigs[gi]) interner.Add(s);
    }
    interner.Freeze();
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      for (std::size_t idx = 0; idx < sigs[gi].size(); ++idx) {
        colors[gi][idx] = interner.Get(sigs[gi][idx]);
      }
      out[gi].iterations.push_back(Histogram(colors[gi]));
    }
    const std::size_t next = joint_classes();
    if (next == classes) {
      for (auto& h : out) h.stable = true;
      break;
    }
    classes = next;
  }
  return out;
}

ColorHistogram Wl1Refine(const Graph& g) {
  const Graph* graphs[] = {&g};
  return RefineJointly(graphs, 1)[0];
}

ColorHistogram KwlRefine(const Graph& g, std::size_t k,
                         const WlBudget& budget) {
  if (k != 2 && k != 3) throw std::invalid_argument("k must be 2 or 3");
  const Graph* graphs[] = {&g};
  return RefineJointly(graphs, k, budget)[0];
}

WlVerdict WlDistinguish(const Graph& a, const Graph& b, std::size_t k,
                        const WlBudget& budget) {
  if (a.node_count() != b.node_count()) return WlVerdict::kDistinguished;
  const Graph* graphs[] = {&a, &b};
  const auto hist = RefineJointly(graphs, k, budget);
  for (std::size_t t = 0; t < hist[0].iterations.size(); ++t) {
    if (hist[0].iterations[t] != hist[1].iterations[t]) {
      return WlVerdict::kDistinguished;
    }
  }
  return WlVerdict::kIndistinguishable;
}

const char* ToString(WlVerdict verdict) {
  return verdict == WlVerdict::kDistinguished ? "distinguished"
                                              : "indistinguishable";
}

}  // namespace permagg
