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

#include "permagg/substructure.hpp"

#include <Eigen/Dense>
#include <bit>
#include <ostream>
#include <stdexcept>
#include <string>

namespace permagg {

namespace {

void RequireUndirected(const Graph& g, const char* what) {
  if (g.directed()) {
    throw std::invalid_argument(std::string(what) +
                                " expects an undirected graph");
  }
}

void CheckBudget(const Graph& g, const BruteForceBudget& budget) {
  if (g.node_count() > budget.max_nodes) {
    throw std::length_error("brute-force counting limited to " +
                            std::to_string(budget.max_nodes) +
                            " nodes, got " + std::to_string(g.node_count()));
  }
}

// Popcount of (a & b & c) restricted to bit positions above `after`.
std::size_t CountAbove(std::span<const std::uint64_t> a,
                       std::span<const std::uint64_t> b,
                       std::span<const std::uint64_t> c, Node after) {
  std::size_t total = 0;
  const std::size_t first = (after + 1) >> 6;
  for (std::size_t w = first; w < a.size(); ++w) {
    std::uint64_t bits = a[w] & b[w] & c[w];
    if (w == first) {
      const unsigned shift = (after + 1) & 63U;
      bits &= ~std::uint64_t{0} << shift;
    }
    total += std::popcount(bits);
  }
  return total;
}

}  // namespace

const char* ToString(CountKind kind) {
  switch (kind) {
    case CountKind::kTriangle:
      return "triangle";
    case CountKind::kDirectedTriangle:
      return "directed_triangle";
    case CountKind::kFourClique:
      return "four_clique";
    case CountKind::kWedge:
      return "wedge";
  }
  return "unknown";
}

std::uint64_t CountVector::total() const {
  std::uint64_t s = 0;
  for (auto c : counts) s += c;
  return s;
}

CountVector IncidenceTriangles(const Graph& g) {
  RequireUndirected(g, "IncidenceTriangles");
  CountVector out{CountKind::kTriangle,
                  std::vector<std::uint64_t>(g.node_count(), 0)};
  for (Node v = 0; v < g.node_count(); ++v) {
    std::uint64_t twice = 0;
    for (Node u : g.neighbors(v)) twice += g.common_neighbors(v, u);
    out.counts[v] = twice / 2;
  }
  return out;
}

CountVector IncidenceTrianglesDirected(const Graph& g) {
  if (!g.directed()) {
    throw std::invalid_argument(
        "IncidenceTrianglesDirected expects a directed graph");
  }
  const std::size_t n = g.node_count();
  // in_rows[j] marks predecessors of j.
  std::vector<std::vector<std::uint64_t>> in_rows(
      n, std::vector<std::uint64_t>(g.words_per_row(), 0));
  for (const auto& [a, b] : g.edges()) {
    in_rows[b][a >> 6] |= std::uint64_t{1} << (a & 63);
  }
  CountVector out{CountKind::kDirectedTriangle,
                  std::vector<std::uint64_t>(n, 0)};
  for (Node i = 0; i < n; ++i) {
    const auto out_i = g.row(i);
    std::uint64_t sum = 0;
    for (Node j = 0; j < n; ++j) {
      if (!g.has_edge(j, i)) continue;
      // (A^2)_{ij} = #{k : i -> k -> j}.
      for (std::size_t w = 0; w < out_i.size(); ++w) {
        sum += std::popcount(out_i[w] & in_rows[j][w]);
      }
    }
    out.counts[i] = sum;
  }
  return out;
}

std::uint64_t TraceOfCube(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
  IntMatrix a = IntMatrix::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = 1;
    if (!g.directed()) a(v, u) = 1;
  }
  const IntMatrix a2 = a * a;
  std::int64_t trace = 0;
  for (Eigen::Index i = 0; i < n; ++i) trace += a2.row(i).dot(a.col(i));
  return static_cast<std::uint64_t>(trace);
}

std::uint64_t TotalTriangles(const Graph& g) {
  RequireUndirected(g, "TotalTriangles");
  return TraceOfCube(g) / 6;
}

CountVector IncidenceFourCliques(const Graph& g) {
  RequireUndirected(g, "IncidenceFourCliques");
  CountVector out{CountKind::kFourClique,
                  std::vector<std::uint64_t>(g.node_count(), 0)};
  for (Node v = 0; v < g.node_count(); ++v) {
    const auto nv = g.row(v);
    std::uint64_t total = 0;
    for (Node i : g.neighbors(v)) {
      for (Node j : g.neighbors(i)) {
        if (j <= i || !g.has_edge(v, j)) continue;
        total += CountAbove(nv, g.row(i), g.row(j), j);
      }
    }
    out.counts[v] = total;
  }
  return out;
}

CountVector IncidenceWedges(const Graph& g) {
  const CountVector tau = IncidenceTriangles(g);
  CountVector out{CountKind::kWedge,
                  std::vector<std::uint64_t>(g.node_count(), 0)};
  for (Node v = 0; v < g.node_count(); ++v) {
    const std::uint64_t d = g.degree(v);
    out.counts[v] = d * (d - (d > 0 ? 1 : 0)) / 2 - tau.counts[v];
  }
  return out;
}

std::vector<double> ClusteringCoefficients(const Graph& g) {
  const CountVector tau = IncidenceTriangles(g);
  std::vector<double> out(g.node_count(), 0.0);
  for (Node v = 0; v < g.node_count(); ++v) {
    const double d = static_cast<double>(g.degree(v));
    if (d < 2) continue;
    out[v] = 2.0 * static_cast<double>(tau.counts[v]) / (d * (d - 1));
  }
  return out;
}

CountVector BruteForceIncidenceTriangles(const Graph& g,
                                         const BruteForceBudget& budget) {
  RequireUndirected(g, "BruteForceIncidenceTriangles");
  CheckBudget(g, budget);
  CountVector out{CountKind::kTriangle,
                  std::vector<std::uint64_t>(g.node_count(), 0)};
  for (Node v = 0; v < g.node_count(); ++v) {
    const auto nb = g.neighbors(v);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (g.has_edge(nb[a], nb[b])) ++out.counts[v];
      }
    }
  }
  return out;
}

CountVector BruteForceIncidenceFourCliques(const Graph& g,
                                           const BruteForceBudget& budget) {
  RequireUndirected(g, "BruteForceIncidenceFourCliques");
  CheckBudget(g, budget);
  CountVector out{CountKind::kFourClique,
                  std::vector<std::uint64_t>(g.node_count(), 0)};
  for (Node v = 0; v < g.node_count(); ++v) {
    const auto nb = g.neighbors(v);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (!g.has_edge(nb[a], nb[b])) continue;
        for (std::size_t c = b + 1; c < nb.size(); ++c) {
          if (g.has_edge(nb[a], nb[c]) && g.has_edge(nb[b], nb[c])) {
            ++out.counts[v];
          }
        }
      }
    }
  }
  return out;
}

void WriteCountCsv(std::ostream& out, const CountVector& counts) {
  out << "node,count\n";
  for (std::size_t v = 0; v < counts.size(); ++v) {
    out << v << ',' << counts.counts[v] << '\n';
  }
}

}  // namespace permagg
