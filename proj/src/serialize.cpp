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

#include "permagg/serialize.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace permagg {

namespace {

const Json& Require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

Vector VectorFromJson(const Json& j) {
  const Matrix m = MatrixFromJson(j);
  if (m.cols() != 1) {
    throw std::invalid_argument("bias must have one column, got " +
                                std::to_string(m.cols()));
  }
  return m.col(0);
}

Json VectorToJson(const Vector& v) { return MatrixToJson(Matrix(v)); }

}  // namespace

Json ToJson(const Permutation& p) { return Json(p.image()); }

Permutation PermutationFromJson(const Json& j) {
  return Permutation(j.get<std::vector<Label>>());
}

Json ToJson(const CoverageReport& report) {
  std::map<std::pair<Label, Label>, std::size_t> unordered;
  for (Label a = 1; a <= report.n; ++a) {
    for (Label b = a + 1; b <= report.n; ++b) {
      unordered[{a, b}] = report.ordered_count(a, b) + report.ordered_count(b, a);
    }
  }
  Json pairs = Json::object();
  for (const auto& [key, count] : unordered) {
    pairs[std::to_string(key.first) + "-" + std::to_string(key.second)] = count;
  }
  Json j;
  j["n"] = report.n;
  j["total_pairs"] = report.total_pairs();
  j["covered_after"] = report.covered_after;
  j["arrangements_to_cover"] = report.arrangements_to_cover();
  j["first_block_size"] = report.first_block_size;
  j["first_block_disjoint"] = report.first_block_disjoint;
  j["every_ordered_pair_at_least_once"] =
      report.every_ordered_pair_at_least_once();
  j["every_ordered_pair_exactly_once"] =
      report.every_ordered_pair_exactly_once();
  j["pairs"] = std::move(pairs);
  return j;
}

Json ToJson(std::span<const Arrangement> arrangements) {
  Json j = Json::array();
  for (const auto& a : arrangements) j.push_back(a.ring);
  return j;
}

Json ToJson(const CountVector& counts) { return Json(counts.counts); }

Json ToJson(const ColorHistogram& histogram) {
  Json classes = Json::array();
  for (std::size_t t = 0; t < histogram.iterations.size(); ++t) {
    classes.push_back(histogram.class_count(t));
  }
  Json j;
  j["k"] = histogram.k;
  j["items"] = histogram.item_count;
  j["iterations"] = histogram.iterations.size();
  j["class_counts"] = std::move(classes);
  j["stable"] = histogram.stable;
  return j;
}

Json EnsembleToJson(Node node, std::span<const EstimateResult> runs) {
  if (runs.empty()) throw std::invalid_argument("empty ensemble");
  double z0 = 0.0;
  double y1 = 0.0;
  double y2 = 0.0;
  Json rows = Json::array();
  for (std::size_t s = 0; s < runs.size(); ++s) {
    const auto& r = runs[s];
    z0 += r.z0;
    y1 += r.y1;
    y2 += r.y2;
    rows.push_back({{"z0", r.z0}, {"y1", r.y1}, {"y2", r.y2}});
  }
  const double count = static_cast<double>(runs.size());
  Json j;
  j["node"] = node;
  j["z0"] = z0 / count;
  j["y1"] = y1 / count;
  j["y2"] = y2 / count;
  j["r"] = runs.front().steps_used;
  j["seeds"] = runs.size();
  j["augmented"] = runs.front().augmented;
  j["runs"] = std::move(rows);
  return j;
}

Json ToJson(const SimulationResult& sim) {
  Json j;
  j["n"] = sim.n;
  j["mode"] = sim.directed ? "directed" : "undirected";
  j["trials"] = sim.trials;
  j["mean"] = sim.mean_cover_time;
  j["stddev"] = sim.stddev;
  j["seed"] = sim.seed;
  return j;
}

Json ToJson(const SweepRow& row) {
  Json j = ToJson(row.sim);
  j["closed_form"] = row.closed_form;
  j["pg_count"] = row.pg_count;
  j["ratio"] = row.ratio;
  return j;
}

Json FeatureTableToJson(const FeatureTable& table) {
  Json j = Json::object();
  for (Eigen::Index v = 0; v < table.rows(); ++v) {
    std::vector<double> row(table.cols());
    for (Eigen::Index c = 0; c < table.cols(); ++c) row[c] = table(v, c);
    j[std::to_string(v)] = std::move(row);
  }
  return j;
}

FeatureTable FeatureTableFromJson(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("feature table must be an object");
  const auto n = static_cast<Eigen::Index>(j.size());
  Eigen::Index width = -1;
  FeatureTable table;
  for (Eigen::Index v = 0; v < n; ++v) {
    const std::string key = std::to_string(v);
    if (!j.contains(key)) {
      throw std::invalid_argument("feature table lacks node " + key);
    }
    const auto row = j.at(key).get<std::vector<double>>();
    if (width < 0) {
      width = static_cast<Eigen::Index>(row.size());
      table.resize(n, width);
    } else if (static_cast<Eigen::Index>(row.size()) != width) {
      throw std::invalid_argument("feature rows differ in width at node " + key);
    }
    for (Eigen::Index c = 0; c < width; ++c) table(v, c) = row[c];
  }
  return table;
}

Json MatrixToJson(const Matrix& m) {
  std::vector<double> data;
  data.reserve(m.size());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(m(r, c));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Matrix MatrixFromJson(const Json& j) {
  const auto rows = Require(j, "rows").get<Eigen::Index>();
  const auto cols = Require(j, "cols").get<Eigen::Index>();
  const auto data = Require(j, "data").get<std::vector<double>>();
  if (rows < 0 || cols < 0 ||
      static_cast<std::size_t>(rows * cols) != data.size()) {
    throw std::invalid_argument("matrix shape " + std::to_string(rows) + "x" +
                                std::to_string(cols) + " does not match " +
                                std::to_string(data.size()) + " values");
  }
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = data[r * cols + c];
  }
  return m;
}

Json ModelWeightsToJson(const ModelWeights& weights) {
  Json layers = Json::array();
  for (const LayerParams& layer : weights.layers) {
    Json j;
    if (const auto* e = std::get_if<Elman>(&layer.agg)) {
      j["mode"] = "elman";
      j["W"] = MatrixToJson(e->w);
      j["U"] = MatrixToJson(e->u);
      j["b"] = VectorToJson(e->b);
      j["activation"] =
          e->activation == Activation::kTanh ? "tanh" : "identity";
    } else if (const auto* lr = std::get_if<LinearRecurrence>(&layer.agg)) {
      j["mode"] = "linear";
      j["alpha"] = lr->alpha;
    } else {
      const auto& gr = std::get<GinRecovery>(layer.agg);
      j["mode"] = "gin";
      j["W"] = MatrixToJson(gr.w);
      j["b"] = VectorToJson(gr.b);
    }
    j["w_self"] = MatrixToJson(layer.w_self);
    if (layer.scorer) j["scorer"] = MatrixToJson(*layer.scorer);
    layers.push_back(std::move(j));
  }
  return {{"layers", std::move(layers)}};
}

ModelWeights ModelWeightsFromJson(const Json& j) {
  ModelWeights weights;
  for (const Json& l : Require(j, "layers")) {
    LayerParams layer;
    const auto mode = Require(l, "mode").get<std::string>();
    if (mode == "elman") {
      Elman e;
      e.w = MatrixFromJson(Require(l, "W"));
      e.u = MatrixFromJson(Require(l, "U"));
      e.b = VectorFromJson(Require(l, "b"));
      const auto act = l.value("activation", std::string("identity"));
      if (act == "tanh") {
        e.activation = Activation::kTanh;
      } else if (act != "identity") {
        throw std::invalid_argument("unknown activation \"" + act + "\"");
      }
      layer.agg = std::move(e);
    } else if (mode == "linear") {
      layer.agg = LinearRecurrence{Require(l, "alpha").get<double>()};
    } else if (mode == "gin") {
      layer.agg = GinRecovery{MatrixFromJson(Require(l, "W")),
                              VectorFromJson(Require(l, "b"))};
    } else {
      throw std::invalid_argument("unknown layer mode \"" + mode + "\"");
    }
    layer.w_self = MatrixFromJson(Require(l, "w_self"));
    if (l.contains("scorer")) layer.scorer = MatrixFromJson(l.at("scorer"));
    weights.layers.push_back(std::move(layer));
  }
  if (weights.layers.empty()) throw std::invalid_argument("no layers in weights");
  return weights;
}

}  // namespace permagg
