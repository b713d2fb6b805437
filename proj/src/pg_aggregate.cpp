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

#include "permagg/pg_aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "permagg/substructure.hpp"

namespace permagg {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::string Shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void CheckNode(const FeatureTable& feats, Node v) {
  if (v >= static_cast<std::size_t>(feats.rows())) {
    throw std::out_of_range("node " + std::to_string(v) +
                            " has no feature row");
  }
}

void CheckTable(const Graph& g, const FeatureTable& feats) {
  if (static_cast<std::size_t>(feats.rows()) != g.node_count()) {
    throw std::invalid_argument(
        "feature table has " + std::to_string(feats.rows()) +
        " rows for a graph with " + std::to_string(g.node_count()) + " nodes");
  }
}

std::vector<Node> DefaultNumbering(const Graph& g, Node v) {
  if (v >= g.node_count()) {
    throw std::out_of_range("node " + std::to_string(v) + " out of range");
  }
  return g.neighbors(v);
}

// Sequences u_{p(1)}, ..., u_{p(n)} for every element p of the group
// generated by Sigma(n).
std::vector<std::vector<Node>> GroupOrders(std::span<const Node> numbering) {
  const std::size_t n = numbering.size();
  std::vector<std::vector<Node>> orders;
  if (n == 0) return orders;
  const PermutationGroup group = GenerateGroup(Sigma(n));
  orders.reserve(group.size());
  for (const Permutation& p : group.elements()) {
    std::vector<Node> order(n);
    for (std::size_t i = 0; i < n; ++i) {
      order[i] = numbering[p(static_cast<Label>(i + 1)) - 1];
    }
    orders.push_back(std::move(order));
  }
  return orders;
}

Matrix RandomMatrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(
      0.0, 1.0 / std::sqrt(static_cast<double>(std::max<std::size_t>(cols, 1))));
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = normal(rng);
  }
  return m;
}

// Rows sorted lexicographically.
std::vector<std::vector<double>> SortedRows(const FeatureTable& t) {
  std::vector<std::vector<double>> rows(t.rows());
  for (Eigen::Index r = 0; r < t.rows(); ++r) {
    rows[r].resize(t.cols());
    for (Eigen::Index c = 0; c < t.cols(); ++c) rows[r][c] = t(r, c);
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace

std::size_t OutputWidth(const SeqAggregator& agg, std::size_t in_width) {
  return std::visit(
      Overloaded{
          [&](const LinearRecurrence&) { return in_width; },
          [&](const Elman& e) {
            const auto h = static_cast<std::size_t>(e.w.rows());
            if (static_cast<std::size_t>(e.w.cols()) != in_width ||
                static_cast<std::size_t>(e.u.rows()) != h ||
                static_cast<std::size_t>(e.u.cols()) != h ||
                static_cast<std::size_t>(e.b.size()) != h) {
              throw std::invalid_argument(
                  "elman shapes W " + Shape(e.w) + ", U " + Shape(e.u) +
                  ", b " + std::to_string(e.b.size()) +
                  " do not fit input width " + std::to_string(in_width));
            }
            return h;
          },
          [&](const GinRecovery& gr) {
            const auto h = static_cast<std::size_t>(gr.w.rows());
            if (static_cast<std::size_t>(gr.w.cols()) != in_width ||
                static_cast<std::size_t>(gr.b.size()) != h) {
              throw std::invalid_argument(
                  "gin shapes W " + Shape(gr.w) + ", b " +
                  std::to_string(gr.b.size()) + " do not fit input width " +
                  std::to_string(in_width));
            }
            return h;
          },
      },
      agg);
}

Vector RunSequence(const SeqAggregator& agg, const FeatureTable& feats,
                   std::span<const Node> order) {
  if (order.empty()) throw std::invalid_argument("empty sequence");
  for (Node v : order) CheckNode(feats, v);
  const std::size_t width = OutputWidth(agg, feats.cols());
  return std::visit(
      Overloaded{
          [&](const LinearRecurrence& lr) -> Vector {
            Vector state = Vector::Zero(width);
            for (Node v : order) {
              state = lr.alpha * state + feats.row(v).transpose();
            }
            return state;
          },
          [&](const Elman& e) -> Vector {
            Vector state = Vector::Zero(width);
            for (Node v : order) {
              Vector pre = e.u * state + e.w * feats.row(v).transpose() + e.b;
              if (e.activation == Activation::kTanh) {
                pre = pre.array().tanh().matrix();
              }
              state = std::move(pre);
            }
            return state;
          },
          [&](const GinRecovery& gr) -> Vector {
            Vector state = gr.b;
            for (Node v : order) state += gr.w * feats.row(v).transpose();
            return state;
          },
      },
      agg);
}

Vector LinearRecurrenceFold(std::span<const Vector> seq, double alpha) {
  if (seq.empty()) throw std::invalid_argument("empty sequence");
  Vector state = Vector::Zero(seq.front().size());
  for (const Vector& x : seq) {
    if (x.size() != state.size()) {
      throw std::invalid_argument("sequence elements differ in width");
    }
    state = alpha * state + x;
  }
  return state;
}

Vector AggregateNode(const Graph& g, Node v, const FeatureTable& feats,
                     const SeqAggregator& agg, const Matrix& w_self) {
  const auto numbering = DefaultNumbering(g, v);
  return AggregateNode(g, v, feats, agg, w_self, numbering);
}

Vector AggregateNode(const Graph& g, Node v, const FeatureTable& feats,
                     const SeqAggregator& agg, const Matrix& w_self,
                     std::span<const Node> numbering) {
  CheckTable(g, feats);
  CheckNode(feats, v);
  const std::size_t width = OutputWidth(agg, feats.cols());
  if (static_cast<std::size_t>(w_self.rows()) != width ||
      w_self.cols() != feats.cols()) {
    throw std::invalid_argument("W_self is " + Shape(w_self) + ", expected " +
                                std::to_string(width) + "x" +
                                std::to_string(feats.cols()));
  }
  Vector out = w_self * feats.row(v).transpose();
  for (auto order : GroupOrders(numbering)) {
    order.push_back(order.front());
    out += RunSequence(agg, feats, order);
  }
  return out;
}

Vector AggregateNodeMerged(const Graph& g, Node v, const FeatureTable& feats,
                           const SeqAggregator& agg) {
  const auto numbering = DefaultNumbering(g, v);
  return AggregateNodeMerged(g, v, feats, agg, numbering);
}

Vector AggregateNodeMerged(const Graph& g, Node v, const FeatureTable& feats,
                           const SeqAggregator& agg,
                           std::span<const Node> numbering) {
  CheckTable(g, feats);
  CheckNode(feats, v);
  if (numbering.empty()) {
    const Node both[] = {v, v};
    return RunSequence(agg, feats, both);
  }
  Vector out = Vector::Zero(OutputWidth(agg, feats.cols()));
  for (const auto& inner : GroupOrders(numbering)) {
    std::vector<Node> order;
    order.reserve(inner.size() + 2);
    order.push_back(v);
    order.insert(order.end(), inner.begin(), inner.end());
    order.push_back(v);
    out += RunSequence(agg, feats, order);
  }
  return out;
}

FeatureTable AggregateLayer(const Graph& g, const FeatureTable& feats,
                            const SeqAggregator& agg, const Matrix& w_self) {
  CheckTable(g, feats);
  FeatureTable out(g.node_count(), OutputWidth(agg, feats.cols()));
  for (Node v = 0; v < g.node_count(); ++v) {
    out.row(v) = AggregateNode(g, v, feats, agg, w_self).transpose();
  }
  return out;
}

FeatureTable AggregateLayerMerged(const Graph& g, const FeatureTable& feats,
                                  const SeqAggregator& agg) {
  CheckTable(g, feats);
  FeatureTable out(g.node_count(), OutputWidth(agg, feats.cols()));
  for (Node v = 0; v < g.node_count(); ++v) {
    out.row(v) = AggregateNodeMerged(g, v, feats, agg).transpose();
  }
  return out;
}

Vector GinLayerReference(const Graph& g, Node v, const FeatureTable& feats,
                         const Matrix& w, const Vector& b) {
  CheckTable(g, feats);
  CheckNode(feats, v);
  if (w.cols() != feats.cols() || w.rows() != b.size()) {
    throw std::invalid_argument("gin shapes W " + Shape(w) + ", b " +
                                std::to_string(b.size()) +
                                " do not fit input width " +
                                std::to_string(feats.cols()));
  }
  Vector sum = feats.row(v).transpose();
  for (Node u : g.neighbors(v)) sum += feats.row(u).transpose();
  return w * sum + b;
}

std::vector<Edge> ConsumedNeighborPairs(const Graph& g, Node v) {
  const auto numbering = DefaultNumbering(g, v);
  std::vector<Edge> pairs;
  for (auto order : GroupOrders(numbering)) {
    order.push_back(order.front());
    for (std::size_t t = 0; t + 1 < order.size(); ++t) {
      pairs.emplace_back(order[t], order[t + 1]);
    }
  }
  return pairs;
}

Vector ReadoutGraph(std::span<const FeatureTable> per_layer,
                    std::span<const Matrix> scorers) {
  if (per_layer.size() != scorers.size()) {
    throw std::invalid_argument("need one scorer per layer");
  }
  if (per_layer.empty()) throw std::invalid_argument("no layers to read out");
  Vector s = Vector::Zero(scorers.front().rows());
  for (std::size_t k = 0; k < per_layer.size(); ++k) {
    const Matrix& w = scorers[k];
    if (w.rows() != s.size() || w.cols() != per_layer[k].cols()) {
      throw std::invalid_argument("scorer " + std::to_string(k) + " is " +
                                  Shape(w) + " for layer width " +
                                  std::to_string(per_layer[k].cols()));
    }
    s += w * per_layer[k].colwise().sum().transpose();
  }
  return s;
}

std::optional<Channel> ParseChannel(const std::string& name) {
  if (name == "triangles" || name == "triangle") return Channel::kTriangles;
  if (name == "4clique" || name == "four_clique" || name == "4cliques") {
    return Channel::kFourCliques;
  }
  if (name == "wedges" || name == "wedge") return Channel::kWedges;
  return std::nullopt;
}

const char* ToString(Channel channel) {
  switch (channel) {
    case Channel::kTriangles:
      return "triangles";
    case Channel::kFourCliques:
      return "4clique";
    case Channel::kWedges:
      return "wedges";
  }
  return "unknown";
}

FeatureTable InitialFeatures(const Graph& g, std::size_t degree_width,
                             std::span<const Channel> channels) {
  if (g.directed()) {
    throw std::invalid_argument("aggregation features need an undirected graph");
  }
  if (g.node_count() > 0 && g.max_degree() >= degree_width) {
    throw std::invalid_argument("degree one-hot width " +
                                std::to_string(degree_width) +
                                " is too small for max degree " +
                                std::to_string(g.max_degree()));
  }
  FeatureTable t = FeatureTable::Zero(g.node_count(),
                                      degree_width + channels.size());
  for (Node v = 0; v < g.node_count(); ++v) t(v, g.degree(v)) = 1.0;
  for (std::size_t c = 0; c < channels.size(); ++c) {
    CountVector counts;
    switch (channels[c]) {
      case Channel::kTriangles:
        counts = IncidenceTriangles(g);
        break;
      case Channel::kFourCliques:
        counts = IncidenceFourCliques(g);
        break;
      case Channel::kWedges:
        counts = IncidenceWedges(g);
        break;
    }
    for (Node v = 0; v < g.node_count(); ++v) {
      t(v, degree_width + c) = static_cast<double>(counts[v]);
    }
  }
  return t;
}

ModelWeights RandomModelWeights(std::size_t in_width,
                                const DistinguishConfig& config) {
  if (config.layers == 0) throw std::invalid_argument("need at least one layer");
  if (config.kind == AggregatorKind::kElman && config.hidden == 0) {
    throw std::invalid_argument("elman hidden width must be positive");
  }
  std::mt19937_64 rng(config.seed);
  ModelWeights weights;
  std::size_t width = in_width;
  for (std::size_t l = 0; l < config.layers; ++l) {
    LayerParams layer;
    if (config.kind == AggregatorKind::kElman) {
      Elman e;
      e.w = RandomMatrix(config.hidden, width, rng);
      e.u = RandomMatrix(config.hidden, config.hidden, rng);
      e.b = RandomMatrix(config.hidden, 1, rng).col(0);
      e.activation = config.activation;
      layer.agg = std::move(e);
      layer.w_self = RandomMatrix(config.hidden, width, rng);
      width = config.hidden;
    } else {
      layer.agg = LinearRecurrence{config.alpha};
      layer.w_self = RandomMatrix(width, width, rng);
    }
    weights.layers.push_back(std::move(layer));
  }
  return weights;
}

FeatureTable RunModel(const Graph& g, const FeatureTable& input,
                      const ModelWeights& weights) {
  FeatureTable h = input;
  for (const LayerParams& layer : weights.layers) {
    h = AggregateLayer(g, h, layer.agg, layer.w_self);
  }
  return h;
}

DistinguishResult DistinguishByAggregation(const Graph& a, const Graph& b,
                                           const DistinguishConfig& config,
                                           const ModelWeights* weights) {
  DistinguishResult result;
  if (a.node_count() != b.node_count()) {
    result.verdict = WlVerdict::kDistinguished;
    result.max_gap = std::numeric_limits<double>::infinity();
    return result;
  }
  const std::size_t degree_width =
      std::max(a.node_count() ? a.max_degree() : 0,
               b.node_count() ? b.max_degree() : 0) +
      1;
  const FeatureTable fa = InitialFeatures(a, degree_width, config.channels);
  const FeatureTable fb = InitialFeatures(b, degree_width, config.channels);
  ModelWeights owned;
  if (weights == nullptr) {
    owned = RandomModelWeights(fa.cols(), config);
    weights = &owned;
  }
  const auto ra = SortedRows(RunModel(a, fa, *weights));
  const auto rb = SortedRows(RunModel(b, fb, *weights));
  for (std::size_t r = 0; r < ra.size(); ++r) {
    for (std::size_t c = 0; c < ra[r].size(); ++c) {
      result.max_gap = std::max(result.max_gap, std::abs(ra[r][c] - rb[r][c]));
    }
  }
  result.verdict = result.max_gap > config.tolerance
                       ? WlVerdict::kDistinguished
                       : WlVerdict::kIndistinguishable;
  return result;
}

}  // namespace permagg
