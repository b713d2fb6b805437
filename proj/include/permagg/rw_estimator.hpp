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

#ifndef PERMAGG_RW_ESTIMATOR_HPP_
#define PERMAGG_RW_ESTIMATOR_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "permagg/graph.hpp"

// Random-walk estimation of the incidence-triangle count of a node from a
// simple random walk on its closed 1-hop neighborhood.
//
// For a walk X_1..X_r on the neighborhood graph G' (degrees d'):
//   Y1 = mean over 2 <= k <= r-1 of a_k * d'(X_k)
//   Y2 = mean over 1 <= k <= r   of 1 / d'(X_k)
//   z0 = (d0 + 1) / 6 * Y1 / Y2
// where a_k indicates that X_{k-1} and X_{k+1} are adjacent. Under the
// stationary distribution E[Y1] = 3 tau0 / (d0 + tau0) and
// E[Y2] = (d0 + 1) / (2 (d0 + tau0)), so z0 recovers tau0.
namespace permagg {

enum class StartPolicy { kUniform, kDegreeProportional };

// Which closed 2-paths X_{k-1} X_k X_{k+1} contribute to a_k.
//   kCenterTriangles: only triangles through the center node. This is the
//     weighting under which the closed-form moments hold exactly.
//   kAnyTriangle: every triangle of G'. z0 then tends to the number of
//     triangles in G' (tau0 plus the center's incidence 4-cliques).
enum class TriangleWeight { kCenterTriangles, kAnyTriangle };

struct WalkConfig {
  std::size_t steps = 100000;  // r, after burn-in
  std::uint64_t seed = 0;
  // Empty: augment exactly when the neighborhood has no triangle at the
  // center (it is then a star around v).
  std::optional<bool> augment;
  StartPolicy start_policy = StartPolicy::kDegreeProportional;
  TriangleWeight weight = TriangleWeight::kCenterTriangles;
  // Empty: max(16, d0) discarded steps before Y1/Y2 accumulate.
  std::optional<std::size_t> burn_in;
};

struct EstimateResult {
  double z0 = 0.0;  // de-augmented estimate of tau0
  double z0_raw = 0.0;  // (d0' + 1) / 6 * y1 / y2 before de-augmentation
  double y1 = 0.0;
  double y2 = 0.0;
  std::size_t steps_used = 0;
  std::size_t burn_in = 0;
  bool augmented = false;
  std::size_t d0 = 0;  // degree of the center in the input graph
};

// r-step walk (X_1 = start). Each move is uniform over the current node's
// neighbors. Throws if start is isolated.
std::vector<Node> SimpleRandomWalk(const InducedNeighborhood& nb, Node start,
                                   std::size_t steps, std::uint64_t seed);

// (E[Y1], E[Y2]) for a center of degree d0 with tau0 incidence triangles.
std::pair<double, double> ExpectedMoments(std::size_t d0, std::size_t tau0);

// (d0 + 1) / 6 * y1 / y2.
double RatioEstimate(std::size_t d0, double y1, double y2);

EstimateResult EstimateIncidenceTriangles(const Graph& g, Node v,
                                          const WalkConfig& config);

// One estimate per seed in [base_seed, base_seed + seeds).
std::vector<EstimateResult> EstimateEnsemble(const Graph& g, Node v,
                                             WalkConfig config,
                                             std::size_t seeds);

}  // namespace permagg

#endif  // PERMAGG_RW_ESTIMATOR_HPP_
