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

#ifndef PERMAGG_SERIALIZE_HPP_
#define PERMAGG_SERIALIZE_HPP_

#include <json.hpp>
#include <span>
#include <vector>

#include "permagg/coupon_sim.hpp"
#include "permagg/perm_group.hpp"
#include "permagg/pg_aggregate.hpp"
#include "permagg/rw_estimator.hpp"
#include "permagg/substructure.hpp"
#include "permagg/wl.hpp"

// JSON encodings used by the command-line tool.
namespace permagg {

using Json = nlohmann::ordered_json;

// 1-indexed image array.
Json ToJson(const Permutation& p);
Permutation PermutationFromJson(const Json& j);

// Unordered pairs covered by the full group appear as "i-j" keys (i < j)
// with their ordered multiplicities summed.
Json ToJson(const CoverageReport& report);
Json ToJson(std::span<const Arrangement> arrangements);

// Counts ordered by node id.
Json ToJson(const CountVector& counts);

Json ToJson(const ColorHistogram& histogram);

// {node, z0, y1, y2, r, seeds, augmented} for an ensemble: z0, y1 and y2
// are ensemble means, per-seed values go under "runs".
Json EnsembleToJson(Node node, std::span<const EstimateResult> runs);

Json ToJson(const SimulationResult& sim);
Json ToJson(const SweepRow& row);

// {"0": [..], "1": [..], ...}.
Json FeatureTableToJson(const FeatureTable& table);
FeatureTable FeatureTableFromJson(const Json& j);

// Matrices are {"rows": r, "cols": c, "data": [row-major values]}.
Json MatrixToJson(const Matrix& m);
Matrix MatrixFromJson(const Json& j);

// {"layers": [{"mode": "elman" | "linear" | "gin", ...,
//              "w_self": matrix, "scorer": matrix (optional)}]}.
// Elman layers carry W, U, b and "activation" ("identity" | "tanh"); linear
// layers carry "alpha"; gin layers carry W and b. Throws on malformed input.
Json ModelWeightsToJson(const ModelWeights& weights);
ModelWeights ModelWeightsFromJson(const Json& j);

}  // namespace permagg

#endif  // PERMAGG_SERIALIZE_HPP_
