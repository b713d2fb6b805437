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

#include "permagg/rw_estimator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace permagg {

namespace {

constexpr std::size_t kMinBurnIn = 16;

struct LocalWalker {
  explicit LocalWalker(const Graph& g) : graph(g) {
    adjacency.reserve(g.node_count());
    for (Node v = 0; v < g.node_count(); ++v) {
      adjacency.push_back(g.neighbors(v));
    }
  }

  Node Step(Node from, std::mt19937_64& rng) const {
    const auto& nb = adjacency[from];
    std::uniform_int_distribution<std::size_t> pick(0, nb.size() - 1);
    return nb[pick(rng)];
  }

  const Graph& graph;
  std::vector<std::vector<Node>> adjacency;
};

std::size_t CenterTriangles(const Graph& local, Node center) {
  std::size_t twice = 0;
  for (Node u : local.neighbors(center)) {
    twice += local.common_neighbors(center, u);
  }
  return twice / 2;
}

}  // namespace

std::vector<Node> SimpleRandomWalk(const InducedNeighborhood& nb, Node start,
                                   std::size_t steps, std::uint64_t seed) {
  const Graph& g = nb.subgraph;
  if (start >= g.node_count()) {
    throw std::out_of_range("walk start " + std::to_string(start) +
                            " outside the neighborhood");
  }
  if (g.degree(start) == 0) {
    throw std::invalid_argument("walk start node is isolated");
  }
  if (steps == 0) throw std::invalid_argument("walk needs r >= 1");
  LocalWalker walker(g);
  std::mt19937_64 rng(seed);
  std::vector<Node> walk;
  walk.reserve(steps);
  walk.push_back(start);
  while (walk.size() < steps) walk.push_back(walker.Step(walk.back(), rng));
  return walk;
}

std::pair<double, double> ExpectedMoments(std::size_t d0, std::size_t tau0) {
  if (d0 == 0) throw std::invalid_argument("expected moments need d0 >= 1");
  const double d = static_cast<double>(d0);
  const double t = static_cast<double>(tau0);
  return {3.0 * t / (d + t), (d + 1.0) / (2.0 * (d + t))};
}

double RatioEstimate(std::size_t d0, double y1, double y2) {
  return (static_cast<double>(d0) + 1.0) / 6.0 * y1 / y2;
}

EstimateResult EstimateIncidenceTriangles(const Graph& g, Node v,
                                          const WalkConfig& config) {
  if (config.steps < 3) {
    throw std::invalid_argument("the estimator needs r >= 3 steps");
  }
  InducedNeighborhood nb = InducedClosedNeighborhood(g, v);
  const std::size_t d0 = nb.subgraph.degree(nb.center_index);
  if (d0 == 0) {
    throw std::invalid_argument("node " + std::to_string(v) +
                                " is isolated; its neighborhood has no walk");
  }
  const bool augment = config.augment.value_or(
      CenterTriangles(nb.subgraph, nb.center_index) == 0);
  if (augment) nb = AddArtificialApex(nb);

  const Graph& local = nb.subgraph;
  const Node center = nb.center_index;
  const std::size_t local_d0 = local.degree(center);
  LocalWalker walker(local);
  std::mt19937_64 rng(config.seed);

  Node current = 0;
  if (config.start_policy == StartPolicy::kUniform) {
    std::uniform_int_distribution<Node> pick(
        0, static_cast<Node>(local.node_count() - 1));
    current = pick(rng);
  } else {
    std::vector<double> weights;
    for (Node u = 0; u < local.node_count(); ++u) {
      weights.push_back(static_cast<double>(local.degree(u)));
    }
    std::discrete_distribution<Node> pick(weights.begin(), weights.end());
    current = pick(rng);
  }

  const std::size_t burn =
      config.burn_in.value_or(std::max(kMinBurnIn, local_d0));
  for (std::size_t i = 0; i < burn; ++i) current = walker.Step(current, rng);

  std::vector<double> degree(local.node_count());
  for (Node u = 0; u < local.node_count(); ++u) {
    degree[u] = static_cast<double>(local.degree(u));
  }
  const bool center_only = config.weight == TriangleWeight::kCenterTriangles;

  // current = X_1.
  double sum_y1 = 0.0;
  double sum_y2 = 1.0 / degree[current];
  Node prev = current;
  Node mid = walker.Step(prev, rng);  // X_2
  sum_y2 += 1.0 / degree[mid];
  for (std::size_t k = 3; k <= config.steps; ++k) {
    const Node next = walker.Step(mid, rng);
    sum_y2 += 1.0 / degree[next];
    if (local.has_edge(prev, next) &&
        (!center_only || prev == center || mid == center || next == center)) {
      sum_y1 += degree[mid];
    }
    prev = mid;
    mid = next;
  }

  EstimateResult result;
  result.y1 = sum_y1 / static_cast<double>(config.steps - 2);
  result.y2 = sum_y2 / static_cast<double>(config.steps);
  result.z0_raw = RatioEstimate(local_d0, result.y1, result.y2);
  result.z0 = augment ? result.z0_raw - static_cast<double>(d0) : result.z0_raw;
  result.steps_used = config.steps;
  result.burn_in = burn;
  result.augmented = augment;
  result.d0 = d0;
  return result;
}

std::vector<EstimateResult> EstimateEnsemble(const Graph& g, Node v,
                                             WalkConfig config,
                                             std::size_t seeds) {
  std::vector<EstimateResult> out;
  out.reserve(seeds);
  const std::uint64_t base = config.seed;
  for (std::size_t s = 0; s < seeds; ++s) {
    config.seed = base + s;
    out.push_back(EstimateIncidenceTriangles(g, v, config));
  }
  return out;
}

}  // namespace permagg
