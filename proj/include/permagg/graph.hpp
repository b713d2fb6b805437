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

#ifndef PERMAGG_GRAPH_HPP_
#define PERMAGG_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace permagg {

using Node = std::uint32_t;
using Edge = std::pair<Node, Node>;

// Finite simple graph with dense bit-row adjacency. Nodes are 0-indexed.
// Immutable once built; undirected graphs store both arcs of every edge.
class Graph {
 public:
  Graph() = default;

  // Rejects out-of-range endpoints and self-loops. Duplicate edges (and,
  // for undirected graphs, reversed duplicates) collapse.
  static Graph FromEdgeList(std::size_t n, std::span<const Edge> edges,
                            bool directed);

  std::size_t node_count() const { return n_; }
  bool directed() const { return directed_; }

  bool has_edge(Node u, Node v) const {
    return (rows_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }

  // Out-degree for directed graphs.
  std::size_t degree(Node v) const;
  std::size_t max_degree() const;

  // Undirected: number of edges. Directed: number of arcs.
  std::size_t edge_count() const;

  // Ascending node ids.
  std::vector<Node> neighbors(Node v) const;

  // Raw adjacency row of v: words_per_row() 64-bit words.
  std::span<const std::uint64_t> row(Node v) const {
    return {rows_.data() + v * words_, words_};
  }
  std::size_t words_per_row() const { return words_; }

  // |N(u) ∩ N(v)| via row intersection.
  std::size_t common_neighbors(Node u, Node v) const;

  // Undirected: each edge once with first < second. Directed: every arc.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(std::size_t n, bool directed);
  void set_arc(Node u, Node v);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  bool directed_ = false;
  std::vector<std::uint64_t> rows_;
};

// Closed 1-hop neighborhood of a node as its own graph. Local node 0 is the
// center; local i > 0 maps to the i-th neighbor in ascending id order. The
// apex, when present, is the last local node and has no global id.
struct InducedNeighborhood {
  Graph subgraph;
  Node center_index = 0;
  std::vector<Node> local_to_global;
  bool has_apex = false;
};

InducedNeighborhood InducedClosedNeighborhood(const Graph& g, Node v);

// Adds one node adjacent to every existing node of the neighborhood.
InducedNeighborhood AddArtificialApex(const InducedNeighborhood& nb);

// Returns g with node i renamed to perm[i].
Graph Relabel(const Graph& g, std::span<const Node> perm);

// Edge-list text format: header "N M D" with D in {u, d}, then M lines
// "i j". Undirected edges are written once with i < j.
Graph ReadEdgeList(std::istream& in);
void WriteEdgeList(std::ostream& out, const Graph& g);

}  // namespace permagg

#endif  // PERMAGG_GRAPH_HPP_
