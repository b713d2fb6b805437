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

#ifndef PERMAGG_PG_AGGREGATE_HPP_
#define PERMAGG_PG_AGGREGATE_HPP_

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "permagg/graph.hpp"
#include "permagg/perm_group.hpp"
#include "permagg/wl.hpp"

// Forward-only permutation-sensitive neighborhood aggregation.
//
// For a node v with neighbors u_1 < ... < u_n and the cyclic group G
// generated by Sigma(n), one layer computes
//
//   h_v' = sum_{g in G} SEQ(h_{u_g(1)}, ..., h_{u_g(n)}, h_{u_g(1)})
//          + W_self h_v
//
// where SEQ is a recurrent sequence function started from a zero state. The
// ring-closing repeat of the first element makes every run see the n
// consecutive pairs of one arrangement.
namespace permagg {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Row v holds the features of node v.
using FeatureTable = Eigen::MatrixXd;

enum class Activation { kIdentity, kTanh };

// state <- alpha * state + x.
struct LinearRecurrence {
  double alpha = 1.0;
};

// y_t = a(U y_{t-1} + W x_t + b).
struct Elman {
  Matrix w;
  Matrix u;
  Vector b;
  Activation activation = Activation::kIdentity;
};

// Elman with U = I and identity activation, where the bias enters once (on
// the first step) instead of every step. Run over {h_u} ∪ {h_v} it is
// exactly the linear GIN layer W (h_v + sum h_u) + b.
struct GinRecovery {
  Matrix w;
  Vector b;
};

using SeqAggregator = std::variant<LinearRecurrence, Elman, GinRecovery>;

// Width of a sequence run's output for inputs of width in_width. Throws on
// inconsistent weight shapes.
std::size_t OutputWidth(const SeqAggregator& agg, std::size_t in_width);

// Runs the aggregator over feats.row(order[0]), feats.row(order[1]), ...
Vector RunSequence(const SeqAggregator& agg, const FeatureTable& feats,
                   std::span<const Node> order);

// Fold state <- alpha * state + x from the zero state. Throws on an empty
// sequence or mismatched widths.
Vector LinearRecurrenceFold(std::span<const Vector> seq, double alpha);

// Sum over the group of runs on (h_{u_g(1)}, ..., h_{u_g(n)}, h_{u_g(1)})
// plus w_self h_v. `numbering` lists u_1..u_n; the default is ascending ids.
Vector AggregateNode(const Graph& g, Node v, const FeatureTable& feats,
                     const SeqAggregator& agg, const Matrix& w_self);
Vector AggregateNode(const Graph& g, Node v, const FeatureTable& feats,
                     const SeqAggregator& agg, const Matrix& w_self,
                     std::span<const Node> numbering);

// Sum over the group of runs on (h_v, h_{u_g(1)}, ..., h_{u_g(n)}, h_v).
// An isolated node gives a single run over (h_v, h_v).
Vector AggregateNodeMerged(const Graph& g, Node v, const FeatureTable& feats,
                           const SeqAggregator& agg);
Vector AggregateNodeMerged(const Graph& g, Node v, const FeatureTable& feats,
                           const SeqAggregator& agg,
                           std::span<const Node> numbering);

// All nodes of one layer.
FeatureTable AggregateLayer(const Graph& g, const FeatureTable& feats,
                            const SeqAggregator& agg, const Matrix& w_self);
FeatureTable AggregateLayerMerged(const Graph& g, const FeatureTable& feats,
                                  const SeqAggregator& agg);

// W (h_v + sum_{u in N(v)} h_u) + b.
Vector GinLayerReference(const Graph& g, Node v, const FeatureTable& feats,
                         const Matrix& w, const Vector& b);

// Ordered global node pairs (a, b) fed consecutively to the sequence
// function across all group elements when aggregating at v.
std::vector<Edge> ConsumedNeighborPairs(const Graph& g, Node v);

// s = sum_k W_k sum_v h_v^(k).
Vector ReadoutGraph(std::span<const FeatureTable> per_layer,
                    std::span<const Matrix> scorers);

// One layer of weights: the sequence function, the self transform, and an
// optional readout scorer (C x width).
struct LayerParams {
  SeqAggregator agg;
  Matrix w_self;
  std::optional<Matrix> scorer;
};

struct ModelWeights {
  std::vector<LayerParams> layers;
};

enum class Channel { kTriangles, kFourCliques, kWedges };

std::optional<Channel> ParseChannel(const std::string& name);
const char* ToString(Channel channel);

enum class AggregatorKind { kElman, kLinearRecurrence };

struct DistinguishConfig {
  AggregatorKind kind = AggregatorKind::kElman;
  double alpha = 0.5;  // linear recurrence weight
  Activation activation = Activation::kTanh;
  std::size_t layers = 2;
  std::size_t hidden = 8;  // Elman state width
  std::uint64_t seed = 0;
  // Count channels appended after the one-hot degree columns.
  std::vector<Channel> channels;
  double tolerance = 1e-9;
};

// One-hot degree (width `degree_width`) followed by the requested channels.
FeatureTable InitialFeatures(const Graph& g, std::size_t degree_width,
                             std::span<const Channel> channels);

// Seeded weights (normal, scaled by 1/sqrt(fan-in)) for the configuration.
ModelWeights RandomModelWeights(std::size_t in_width,
                                const DistinguishConfig& config);

// Runs every layer and returns the final node features.
FeatureTable RunModel(const Graph& g, const FeatureTable& input,
                      const ModelWeights& weights);

struct DistinguishResult {
  WlVerdict verdict = WlVerdict::kIndistinguishable;
  // Largest entrywise gap between the sorted final feature multisets
  // (infinity when the node counts differ).
  double max_gap = 0.0;
};

// Distinguished iff the multisets of final node features differ by more
// than the tolerance.
DistinguishResult DistinguishByAggregation(
    const Graph& a, const Graph& b, const DistinguishConfig& config,
    const ModelWeights* weights = nullptr);

}  // namespace permagg

#endif  // PERMAGG_PG_AGGREGATE_HPP_
