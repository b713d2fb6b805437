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


#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "permagg/coupon_sim.hpp"
#include "permagg/generators.hpp"
#include "permagg/graph.hpp"
#include "permagg/perm_group.hpp"
#include "permagg/pg_aggregate.hpp"
#include "permagg/rw_estimator.hpp"
#include "permagg/serialize.hpp"
#include "permagg/substructure.hpp"
#include "permagg/wl.hpp"

namespace py = pybind11;
using namespace permagg;

namespace {

void CheckNode(const Graph& g, Node v) {
  if (v >= g.node_count()) {
    throw py::index_error("node " + std::to_string(v) + " out of range");
  }
}

std::string EdgeListText(const Graph& g) {
  std::ostringstream out;
  WriteEdgeList(out, g);
  return out.str();
}

Graph ParseEdgeListText(const std::string& text) {
  std::istringstream in(text);
  return ReadEdgeList(in);
}

std::string Coverage(std::size_t n, const std::string& variant) {
  if (variant != "sigma" && variant != "sigma-prime") {
    throw std::invalid_argument("variant must be 'sigma' or 'sigma-prime'");
  }
  const Permutation gen = variant == "sigma" ? Sigma(n) : SigmaPrime(n);
  const auto rings = Arrangements(GenerateGroup(gen));
  return ToJson(MakeCoverageReport(rings, n)).dump();
}

std::string EstimateJson(const Graph& g, Node v, std::size_t r,
                         std::size_t seeds, std::uint64_t seed) {
  WalkConfig cfg;
  cfg.steps = r;
  cfg.seed = seed;
  return EnsembleToJson(v, EstimateEnsemble(g, v, cfg, seeds)).dump();
}

std::string Distinguish(const Graph& a, const Graph& b,
                        const std::vector<std::string>& channels,
                        std::uint64_t seed) {
  DistinguishConfig cfg;
  cfg.seed = seed;
  for (const auto& name : channels) {
    const auto c = ParseChannel(name);
    if (!c) throw std::invalid_argument("unknown channel '" + name + "'");
    cfg.channels.push_back(*c);
  }
  const auto r = DistinguishByAggregation(a, b, cfg);
  Json j{{"verdict", ToString(r.verdict)}, {"max_gap", r.max_gap}};
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_permagg, m) {
  m.doc() = "Native core of the permagg package";
  m.attr("__version__") = PERMAGG_VERSION;

  py::class_<Graph>(m, "Graph")
      .def_static(
          "from_edges",
          [](std::size_t n, const std::vector<Edge>& edges, bool directed) {
            return Graph::FromEdgeList(n, edges, directed);
          },
          py::arg("n"), py::arg("edges"), py::arg("directed") = false)
      .def_static("from_text", &ParseEdgeListText, py::arg("text"))
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("directed", &Graph::directed)
      .def("degree",
           [](const Graph& g, Node v) {
             CheckNode(g, v);
             return g.degree(v);
           })
      .def("neighbors",
           [](const Graph& g, Node v) {
             CheckNode(g, v);
             return g.neighbors(v);
           })
      .def("has_edge",
           [](const Graph& g, Node u, Node v) {
             CheckNode(g, u);
             CheckNode(g, v);
             return g.has_edge(u, v);
           })
      .def("edges", &Graph::edges)
      .def("to_text", &EdgeListText)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.node_count()) +
               " m=" + std::to_string(g.edge_count()) +
               (g.directed() ? " directed>" : ">");
      });

  m.def("generate", &FromGeneratorSpec, py::arg("spec"), py::arg("seed") = 0,
        "Build a graph from a spec such as 'er:10:0.3' or 'rooks'.");
  m.def("relabel", &Relabel, py::arg("g"), py::arg("perm"));

  m.def("sigma", [](std::size_t n) { return Sigma(n).image(); }, py::arg("n"));
  m.def("sigma_prime", [](std::size_t n) { return SigmaPrime(n).image(); },
        py::arg("n"));
  m.def("cycle_notation",
        [](const std::vector<Label>& image) {
          return Permutation(image).cycle_notation();
        },
        py::arg("image"));
  m.def("order", [](const std::vector<Label>& image) { return Order(Permutation(image)); },
        py::arg("image"));
  m.def("generate_group",
        [](const std::vector<Label>& image) {
          const auto group = GenerateGroup(Permutation(image));
          std::vector<std::vector<Label>> out;
          for (const auto& p : group.elements()) {
            out.push_back(p.image());
          }
          return out;
        },
        py::arg("image"));
  m.def("_coverage_json", &Coverage, py::arg("n"), py::arg("variant") = "sigma");

  m.def("incidence_triangles", [](const Graph& g) { return IncidenceTriangles(g).counts; });
  m.def("incidence_triangles_directed",
        [](const Graph& g) { return IncidenceTrianglesDirected(g).counts; });
  m.def("incidence_4cliques", [](const Graph& g) { return IncidenceFourCliques(g).counts; });
  m.def("incidence_wedges", [](const Graph& g) { return IncidenceWedges(g).counts; });
  m.def("clustering", &ClusteringCoefficients);
  m.def("trace_of_cube", &TraceOfCube);

  m.def("wl_distinguish",
        [](const Graph& a, const Graph& b, std::size_t k) {
          return std::string(ToString(WlDistinguish(a, b, k)));
        },
        py::arg("a"), py::arg("b"), py::arg("k") = 1);

  m.def("_estimate_json", &EstimateJson, py::arg("g"), py::arg("node"),
        py::arg("r") = 100000, py::arg("seeds") = 1, py::arg("seed") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("expected_moments", &ExpectedMoments, py::arg("d0"), py::arg("tau0"));

  m.def("kcoupon_expectation", &KCouponExpectation, py::arg("m"), py::arg("k"));
  m.def("pg_cover_count", &PgCoverCount, py::arg("n"), py::arg("directed") = false);
  m.def("simulate_cover",
        [](std::size_t n, bool directed, std::size_t trials, std::uint64_t seed,
           std::size_t threads) {
          const auto r = SimulateCoverComplete(n, directed, trials, seed, threads);
          return py::make_tuple(r.mean_cover_time, r.stddev);
        },
        py::arg("n"), py::arg("directed") = false, py::arg("trials") = 1000,
        py::arg("seed") = 0, py::arg("threads") = 1);
  m.def("savings_ratio", &SavingsRatio, py::arg("n"), py::arg("trials") = 1000,
        py::arg("seed") = 0, py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());

  m.def("linear_recurrence",
        [](const Matrix& rows, double alpha) {
          std::vector<Vector> seq;
          for (Eigen::Index i = 0; i < rows.rows(); ++i) seq.push_back(rows.row(i).transpose());
          return LinearRecurrenceFold(seq, alpha);
        },
        py::arg("seq"), py::arg("alpha"), "Fold the rows of seq in order.");
  m.def("aggregate_node_linear",
        [](const Graph& g, Node v, const FeatureTable& feats, double alpha,
           const Matrix& w_self) {
          return AggregateNode(g, v, feats, LinearRecurrence{alpha}, w_self);
        },
        py::arg("g"), py::arg("node"), py::arg("feats"), py::arg("alpha"),
        py::arg("w_self"));
  m.def("aggregate_node_elman",
        [](const Graph& g, Node v, const FeatureTable& feats, const Matrix& w,
           const Matrix& u, const Vector& b, bool tanh, const Matrix& w_self) {
          Elman e{w, u, b, tanh ? Activation::kTanh : Activation::kIdentity};
          return AggregateNode(g, v, feats, e, w_self);
        },
        py::arg("g"), py::arg("node"), py::arg("feats"), py::arg("w"),
        py::arg("u"), py::arg("b"), py::arg("tanh"), py::arg("w_self"));
  m.def("gin_layer", &GinLayerReference, py::arg("g"), py::arg("node"),
        py::arg("feats"), py::arg("w"), py::arg("b"));
  m.def("_distinguish_json", &Distinguish, py::arg("a"), py::arg("b"),
        py::arg("channels") = std::vector<std::string>{}, py::arg("seed") = 0);
}
