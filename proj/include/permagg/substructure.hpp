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

#ifndef PERMAGG_SUBSTRUCTURE_HPP_
#define PERMAGG_SUBSTRUCTURE_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "permagg/graph.hpp"

namespace permagg {

enum class CountKind { kTriangle, kDirectedTriangle, kFourClique, kWedge };

const char* ToString(CountKind kind);

// Per-node counts ordered by node id.
struct CountVector {
  CountKind kind = CountKind::kTriangle;
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
  std::size_t size() const { return counts.size(); }
  std::uint64_t operator[](std::size_t v) const { return counts[v]; }
};

// tau = 1/2 (A^2 ⊙ A) 1, evaluated per row as sum over neighbors u of
// |N(v) ∩ N(u)|, halved.
CountVector IncidenceTriangles(const Graph& g);

// tau_dir = (A^2 ⊙ A^T) 1 on a directed graph.
CountVector IncidenceTrianglesDirected(const Graph& g);

// tr(A^3) by explicit integer matrix products.
std::uint64_t TraceOfCube(const Graph& g);

// tr(A^3) / 6 on an undirected graph.
std::uint64_t TotalTriangles(const Graph& g);

// Per node: neighbor triples with all three mutual edges present.
CountVector IncidenceFourCliques(const Graph& g);

// Per node: C(d_v, 2) - tau_v.
CountVector IncidenceWedges(const Graph& g);

// c_v = 2 |edges among N(v)| / (d_v (d_v - 1)); 0 when d_v < 2.
std::vector<double> ClusteringCoefficients(const Graph& g);

struct BruteForceBudget {
  std::size_t max_nodes = 2000;
};

// Exhaustive enumeration over neighbor pairs / triples using has_edge only.
CountVector BruteForceIncidenceTriangles(const Graph& g,
                                         const BruteForceBudget& budget = {});
CountVector BruteForceIncidenceFourCliques(
    const Graph& g, const BruteForceBudget& budget = {});

// "node,count" lines with a header.
void WriteCountCsv(std::ostream& out, const CountVector& counts);

}  // namespace permagg

#endif  // PERMAGG_SUBSTRUCTURE_HPP_
