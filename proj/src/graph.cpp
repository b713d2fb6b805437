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

#include "permagg/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace permagg {

Graph::Graph(std::size_t n, bool directed)
    : n_(n),
      words_((n + 63) / 64),
      directed_(directed),
      rows_(n * ((n + 63) / 64), 0) {}

void Graph::set_arc(Node u, Node v) {
  rows_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
}

Graph Graph::FromEdgeList(std::size_t n, std::span<const Edge> edges,
                          bool directed) {
  Graph g(n, directed);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      std::ostringstream msg;
      msg << "edge (" << u << ", " << v << ") has an endpoint outside [0, "
          << n << ")";
      throw std::invalid_argument(msg.str());
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at node " + std::to_string(u));
    }
    g.set_arc(u, v);
    if (!directed) g.set_arc(v, u);
  }
  return g;
}

std::size_t Graph::degree(Node v) const {
  std::size_t d = 0;
  for (std::uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Node v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::uint64_t w : rows_) total += std::popcount(w);
  return directed_ ? total : total / 2;
}

std::vector<Node> Graph::neighbors(Node v) const {
  std::vector<Node> out;
  const auto r = row(v);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits != 0) {
      out.push_back(static_cast<Node>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t Graph::common_neighbors(Node u, Node v) const {
  const auto a = row(u);
  const auto b = row(v);
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Node u = 0; u < n_; ++u) {
    for (Node v : neighbors(u)) {
      if (directed_ || u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

InducedNeighborhood InducedClosedNeighborhood(const Graph& g, Node v) {
  if (g.directed()) {
    throw std::invalid_argument(
        "induced neighborhoods are defined on undirected graphs only");
  }
  if (v >= g.node_count()) {
    throw std::out_of_range("node " + std::to_string(v) + " out of range");
  }
  InducedNeighborhood nb;
  nb.local_to_global.push_back(v);
  for (Node u : g.neighbors(v)) nb.local_to_global.push_back(u);

  const auto& ids = nb.local_to_global;
  std::vector<Edge> local;
  for (Node i = 0; i < ids.size(); ++i) {
    for (Node j = i + 1; j < ids.size(); ++j) {
      if (g.has_edge(ids[i], ids[j])) local.emplace_back(i, j);
    }
  }
  nb.subgraph = Graph::FromEdgeList(ids.size(), local, false);
  nb.center_index = 0;
  return nb;
}

InducedNeighborhood AddArtificialApex(const InducedNeighborhood& nb) {
  const std::size_t n = nb.subgraph.node_count();
  std::vector<Edge> edges = nb.subgraph.edges();
  for (Node i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Node>(n));

  InducedNeighborhood out;
  out.subgraph = Graph::FromEdgeList(n + 1, edges, false);
  out.center_index = nb.center_index;
  out.local_to_global = nb.local_to_global;
  out.has_apex = true;
  return out;
}

Graph Relabel(const Graph& g, std::span<const Node> perm) {
  if (perm.size() != g.node_count()) {
    throw std::invalid_argument("relabeling size does not match node count");
  }
  std::vector<bool> hit(perm.size(), false);
  for (Node p : perm) {
    if (p >= perm.size() || hit[p]) {
      throw std::invalid_argument("relabeling is not a permutation");
    }
    hit[p] = true;
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::FromEdgeList(g.node_count(), edges, g.directed());
}

Graph ReadEdgeList(std::istream& in) {
  std::size_t n = 0;
  std::size_t m = 0;
  std::string kind;
  if (!(in >> n >> m >> kind) || (kind != "u" && kind != "d")) {
    throw std::invalid_argument(
        "edge list header must be \"N M D\" with D in {u, d}");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    long long i = 0;
    long long j = 0;
    if (!(in >> i >> j)) {
      throw std::invalid_argument("edge list truncated at edge " +
                                  std::to_string(e));
    }
    if (i < 0 || j < 0) {
      throw std::invalid_argument("negative node id in edge list");
    }
    edges.emplace_back(static_cast<Node>(i), static_cast<Node>(j));
  }
  return Graph::FromEdgeList(n, edges, kind == "d");
}

void WriteEdgeList(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.node_count() << ' ' << edges.size() << ' '
      << (g.directed() ? 'd' : 'u') << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

}  // namespace permagg
