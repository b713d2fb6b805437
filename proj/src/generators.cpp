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

#include "permagg/generators.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace permagg {

namespace {

constexpr int kRegularAttempts = 1000;

void CheckProbability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
}

// One pairing-model attempt. False on a dead end.
bool TryRegular(std::size_t n, std::size_t d, std::mt19937_64& rng,
                std::set<Edge>& edges) {
  edges.clear();
  std::vector<Node> stubs;
  stubs.reserve(n * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (Node v = 0; v < n; ++v) stubs.push_back(v);
  }
  while (!stubs.empty()) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::map<Node, std::size_t> leftover;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      Node a = std::min(stubs[i], stubs[i + 1]);
      Node b = std::max(stubs[i], stubs[i + 1]);
      if (a != b && !edges.contains({a, b})) {
        edges.insert({a, b});
      } else {
        ++leftover[a];
        ++leftover[b];
      }
    }
    // Dead end unless some pair of leftover nodes can still be joined.
    bool suitable = leftover.empty();
    for (auto i = leftover.begin(); i != leftover.end() && !suitable; ++i) {
      for (auto j = std::next(i); j != leftover.end(); ++j) {
        if (!edges.contains({i->first, j->first})) {
          suitable = true;
          break;
        }
      }
    }
    if (!suitable) return false;
    stubs.clear();
    for (const auto& [node, count] : leftover) {
      for (std::size_t c = 0; c < count; ++c) stubs.push_back(node);
    }
  }
  return true;
}

std::vector<std::string> SplitSpec(std::string_view spec) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = spec.find(':', start);
    parts.emplace_back(spec.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::size_t ParseSize(const std::string& s, std::string_view spec) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer '" + s + "' in generator spec '" +
                                std::string(spec) + "'");
  }
  return value;
}

double ParseReal(const std::string& s, std::string_view spec) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("bad number '" + s + "' in generator spec '" +
                              std::string(spec) + "'");
}

}  // namespace

Graph Complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Node i = 0; i < n; ++i) {
    for (Node j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::FromEdgeList(n, edges, false);
}

Graph Star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Node i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::FromEdgeList(leaves + 1, edges, false);
}

Graph Cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 nodes");
  std::vector<Edge> edges;
  for (Node i = 0; i < n; ++i) {
    edges.emplace_back(i, static_cast<Node>((i + 1) % n));
  }
  return Graph::FromEdgeList(n, edges, false);
}

Graph Path(std::size_t n) {
  std::vector<Edge> edges;
  for (Node i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::FromEdgeList(n, edges, false);
}

Graph Paw() {
  const std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}, {0, 3}};
  return Graph::FromEdgeList(4, edges, false);
}

Graph ErdosRenyi(std::size_t n, double p, std::uint64_t seed) {
  CheckProbability(p);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Node i = 0; i < n; ++i) {
    for (Node j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph::FromEdgeList(n, edges, false);
}

Graph ErdosRenyiDirected(std::size_t n, double p, std::uint64_t seed) {
  CheckProbability(p);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> arcs;
  for (Node i = 0; i < n; ++i) {
    for (Node j = 0; j < n; ++j) {
      if (i != j && coin(rng)) arcs.emplace_back(i, j);
    }
  }
  return Graph::FromEdgeList(n, arcs, true);
}

Graph RandomRegular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if ((n * d) % 2 != 0) {
    throw std::invalid_argument("n * d must be even for a d-regular graph");
  }
  if (d != 0 && d >= n) throw std::invalid_argument("degree must be below n");
  std::mt19937_64 rng(seed);
  std::set<Edge> edges;
  for (int attempt = 0; attempt < kRegularAttempts; ++attempt) {
    if (TryRegular(n, d, rng, edges)) {
      std::vector<Edge> list(edges.begin(), edges.end());
      return Graph::FromEdgeList(n, list, false);
    }
  }
  throw std::runtime_error("random regular generation failed after " +
                           std::to_string(kRegularAttempts) + " attempts");
}

Graph Rooks4x4() {
  std::vector<Edge> edges;
  for (Node a = 0; a < 16; ++a) {
    for (Node b = a + 1; b < 16; ++b) {
      if (a / 4 == b / 4 || a % 4 == b % 4) edges.emplace_back(a, b);
    }
  }
  return Graph::FromEdgeList(16, edges, false);
}

Graph Shrikhande() {
  constexpr int kShifts[6][2] = {{1, 0}, {3, 0}, {0, 1},
                                 {0, 3}, {1, 1}, {3, 3}};
  std::vector<Edge> edges;
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      for (const auto& s : kShifts) {
        const Node a = static_cast<Node>(4 * x + y);
        const Node b =
            static_cast<Node>(4 * ((x + s[0]) % 4) + (y + s[1]) % 4);
        if (a < b) edges.emplace_back(a, b);
      }
    }
  }
  return Graph::FromEdgeList(16, edges, false);
}

Graph FromGeneratorSpec(std::string_view spec, std::uint64_t seed) {
  const auto parts = SplitSpec(spec);
  const std::string& name = parts[0];
  auto want = [&](std::size_t count) {
    if (parts.size() != count + 1) {
      throw std::invalid_argument("generator '" + name + "' expects " +
                                  std::to_string(count) + " argument(s)");
    }
  };
  if (name == "complete") {
    want(1);
    return Complete(ParseSize(parts[1], spec));
  }
  if (name == "star") {
    want(1);
    return Star(ParseSize(parts[1], spec));
  }
  if (name == "cycle") {
    want(1);
    return Cycle(ParseSize(parts[1], spec));
  }
  if (name == "path") {
    want(1);
    return Path(ParseSize(parts[1], spec));
  }
  if (name == "paw") {
    want(0);
    return Paw();
  }
  if (name == "er") {
    want(2);
    return ErdosRenyi(ParseSize(parts[1], spec), ParseReal(parts[2], spec),
                      seed);
  }
  if (name == "der") {
    want(2);
    return ErdosRenyiDirected(ParseSize(parts[1], spec),
                              ParseReal(parts[2], spec), seed);
  }
  if (name == "regular") {
    want(2);
    return RandomRegular(ParseSize(parts[1], spec), ParseSize(parts[2], spec),
                         seed);
  }
  if (name == "rooks") {
    want(0);
    return Rooks4x4();
  }
  if (name == "shrikhande") {
    want(0);
    return Shrikhande();
  }
  throw std::invalid_argument("unknown generator '" + name + "'");
}

}  // namespace permagg
