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

#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "oracles.hpp"
#include "permagg/generators.hpp"
#include "permagg/graph.hpp"

namespace permagg {
namespace {

bool IsSrg16_6_2_2(const Graph& g) {
  if (g.node_count() != 16) return false;
  for (Node u = 0; u < 16; ++u) {
    if (g.degree(u) != 6) return false;
    for (Node v = u + 1; v < 16; ++v) {
      std::size_t common = 0;
      for (Node w = 0; w < 16; ++w) common += g.has_edge(u, w) && g.has_edge(v, w);
      if (common != 2) return false;
    }
  }
  return true;
}

void ExpectSimpleSymmetric(const Graph& g) {
  for (Node u = 0; u < g.node_count(); ++u) {
    EXPECT_FALSE(g.has_edge(u, u));
    for (Node v = 0; v < g.node_count(); ++v) {
      EXPECT_EQ(g.has_edge(u, v), g.has_edge(v, u));
    }
  }
}

TEST(FromEdgeList, CompleteGraphOnFour) {
  const std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  const Graph g = Graph::FromEdgeList(4, e, false);
  EXPECT_EQ(g.edge_count(), 6u);
  for (Node v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 3u);
  EXPECT_EQ(g, Complete(4));
}

TEST(FromEdgeList, EmptyGraph) {
  const Graph g = Graph::FromEdgeList(3, {}, false);
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 0u);
  for (Node v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 0u);
}

TEST(FromEdgeList, DuplicatesCollapse) {
  const std::vector<Edge> e{{0, 1}, {1, 0}};
  const Graph g = Graph::FromEdgeList(5, e, false);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.has_edge(1, 0));
}

TEST(FromEdgeList, DirectedKeepsOrientation) {
  const std::vector<Edge> e{{0, 1}, {1, 0}, {1, 2}};
  const Graph g = Graph::FromEdgeList(3, e, true);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_FALSE(g.has_edge(2, 1));
}

TEST(FromEdgeList, RejectsBadInput) {
  const std::vector<Edge> loop{{1, 1}};
  const std::vector<Edge> out{{0, 3}};
  EXPECT_THROW(Graph::FromEdgeList(3, loop, false), std::invalid_argument);
  try {
    Graph::FromEdgeList(3, out, false);
    FAIL() << "expected an endpoint error";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("(0, 3)"), std::string::npos);
  }
}

TEST(FromEdgeList, WideGraphsCrossWordBoundaries) {
  const std::vector<Edge> e{{0, 63}, {63, 64}, {64, 129}};
  const Graph g = Graph::FromEdgeList(130, e, false);
  EXPECT_EQ(g.neighbors(64), (std::vector<Node>{63, 129}));
  EXPECT_EQ(g.common_neighbors(0, 64), 1u);
}

TEST(InducedNeighborhood, CompleteGraph) {
  const auto nb = InducedClosedNeighborhood(Complete(4), 0);
  EXPECT_EQ(nb.subgraph.node_count(), 4u);
  EXPECT_EQ(nb.subgraph.edge_count(), 6u);
  EXPECT_EQ(nb.center_index, 0u);
}

TEST(InducedNeighborhood, StarCenter) {
  const auto nb = InducedClosedNeighborhood(Star(5), 0);
  EXPECT_EQ(nb.subgraph.node_count(), 6u);
  EXPECT_EQ(nb.subgraph.edge_count(), 5u);
}

TEST(InducedNeighborhood, CycleOfFive) {
  const auto nb = InducedClosedNeighborhood(Cycle(5), 0);
  EXPECT_EQ(nb.subgraph.node_count(), 3u);
  EXPECT_EQ(nb.subgraph.edge_count(), 2u);
  EXPECT_EQ(nb.local_to_global, (std::vector<Node>{0, 1, 4}));
}

TEST(InducedNeighborhood, RejectsDirected) {
  EXPECT_THROW(InducedClosedNeighborhood(ErdosRenyiDirected(5, 0.5, 1), 0),
               std::invalid_argument);
}

TEST(InducedNeighborhood, EdgeCountIsDegreePlusTriangles) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = ErdosRenyi(10, 0.3, seed);
    const auto tau = oracle::Triangles(oracle::Matrix(g));
    for (Node v = 0; v < g.node_count(); ++v) {
      const auto nb = InducedClosedNeighborhood(g, v);
      ASSERT_EQ(nb.subgraph.node_count(), g.degree(v) + 1);
      ASSERT_EQ(nb.subgraph.edge_count(), g.degree(v) + tau[v]);
      for (Node a = 0; a < nb.subgraph.node_count(); ++a) {
        for (Node b = 0; b < nb.subgraph.node_count(); ++b) {
          ASSERT_EQ(nb.subgraph.has_edge(a, b),
                    g.has_edge(nb.local_to_global[a], nb.local_to_global[b]));
        }
      }
    }
  }
}

struct ApexCase {
  Graph g;
  Node v;
  std::size_t d_aug;
  std::uint64_t tau_aug;
};

TEST(ArtificialApex, DegreeAndTriangles) {
  const std::vector<ApexCase> cases{
      {Star(3), 0, 4, 3},
      {Complete(4), 0, 4, 6},
      {Path(2), 0, 2, 1},
  };
  for (const auto& c : cases) {
    const auto aug = AddArtificialApex(InducedClosedNeighborhood(c.g, c.v));
    EXPECT_TRUE(aug.has_apex);
    const Graph& s = aug.subgraph;
    EXPECT_EQ(s.degree(aug.center_index), c.d_aug);
    const auto tau = oracle::Triangles(oracle::Matrix(s));
    EXPECT_EQ(tau[aug.center_index], c.tau_aug);
    const Node apex = static_cast<Node>(s.node_count() - 1);
    EXPECT_EQ(s.degree(apex), s.node_count() - 1);
  }
}

TEST(ArtificialApex, ConsistentOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = ErdosRenyi(12, 0.35, seed);
    const auto tau = oracle::Triangles(oracle::Matrix(g));
    for (Node v = 0; v < g.node_count(); ++v) {
      const auto aug = AddArtificialApex(InducedClosedNeighborhood(g, v));
      const auto tau_aug = oracle::Triangles(oracle::Matrix(aug.subgraph));
      EXPECT_EQ(aug.subgraph.degree(aug.center_index), g.degree(v) + 1);
      EXPECT_EQ(tau_aug[aug.center_index], g.degree(v) + tau[v]);
    }
  }
}

TEST(ErdosRenyi, Extremes) {
  EXPECT_EQ(ErdosRenyi(10, 0.0, 7).edge_count(), 0u);
  EXPECT_EQ(ErdosRenyi(10, 1.0, 7), Complete(10));
  EXPECT_THROW(ErdosRenyi(10, 1.5, 7), std::invalid_argument);
}

TEST(ErdosRenyi, DeterministicPerSeed) {
  EXPECT_EQ(ErdosRenyi(10, 0.3, 42), ErdosRenyi(10, 0.3, 42));
  EXPECT_NE(ErdosRenyi(30, 0.3, 42), ErdosRenyi(30, 0.3, 43));
}

TEST(ErdosRenyi, EdgeDensityNearP) {
  std::size_t edges = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    edges += ErdosRenyi(40, 0.3, seed).edge_count();
  }
  const double density = static_cast<double>(edges) / (50.0 * 780.0);
  EXPECT_NEAR(density, 0.3, 0.02);
}

TEST(RandomRegular, Degrees) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = RandomRegular(10, 6, seed);
    ExpectSimpleSymmetric(g);
    for (Node v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 6u);
  }
  EXPECT_EQ(RandomRegular(4, 3, 5), Complete(4));
  EXPECT_EQ(RandomRegular(6, 0, 5).edge_count(), 0u);
}

TEST(RandomRegular, ConfigurationSet) {
  const std::vector<std::pair<std::size_t, std::size_t>> configs{
      {10, 6}, {15, 6}, {20, 5}, {30, 4}, {11, 2}, {12, 11}};
  for (const auto& [n, d] : configs) {
    const Graph g = RandomRegular(n, d, 3);
    for (Node v = 0; v < n; ++v) EXPECT_EQ(g.degree(v), d);
  }
}

TEST(RandomRegular, RejectsInfeasible) {
  EXPECT_THROW(RandomRegular(5, 3, 1), std::invalid_argument);
  EXPECT_THROW(RandomRegular(4, 4, 1), std::invalid_argument);
}

TEST(StronglyRegular, RooksAndShrikhande) {
  const Graph rooks = Rooks4x4();
  const Graph shrikhande = Shrikhande();
  EXPECT_EQ(rooks.edge_count(), 48u);
  EXPECT_EQ(shrikhande.edge_count(), 48u);
  EXPECT_TRUE(IsSrg16_6_2_2(rooks));
  EXPECT_TRUE(IsSrg16_6_2_2(shrikhande));
  ExpectSimpleSymmetric(rooks);
  ExpectSimpleSymmetric(shrikhande);
  const auto k4_rooks = oracle::FourCliques(oracle::Matrix(rooks));
  const auto k4_shri = oracle::FourCliques(oracle::Matrix(shrikhande));
  EXPECT_EQ(std::accumulate(k4_rooks.begin(), k4_rooks.end(), 0ULL) / 4, 8u);
  EXPECT_EQ(std::accumulate(k4_shri.begin(), k4_shri.end(), 0ULL), 0u);
}

TEST(Generators, AllUndirectedOutputsAreSimple) {
  ExpectSimpleSymmetric(Complete(7));
  ExpectSimpleSymmetric(Star(6));
  ExpectSimpleSymmetric(Cycle(9));
  ExpectSimpleSymmetric(Path(5));
  ExpectSimpleSymmetric(Paw());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    ExpectSimpleSymmetric(ErdosRenyi(25, 0.4, seed));
    ExpectSimpleSymmetric(RandomRegular(16, 5 + (seed % 2), seed * 2));
  }
}

TEST(Generators, SpecStrings) {
  EXPECT_EQ(FromGeneratorSpec("complete:5", 0), Complete(5));
  EXPECT_EQ(FromGeneratorSpec("star:3", 0), Star(3));
  EXPECT_EQ(FromGeneratorSpec("cycle:6", 0), Cycle(6));
  EXPECT_EQ(FromGeneratorSpec("er:10:0.3", 9), ErdosRenyi(10, 0.3, 9));
  EXPECT_EQ(FromGeneratorSpec("regular:10:6", 9), RandomRegular(10, 6, 9));
  EXPECT_EQ(FromGeneratorSpec("rooks", 0), Rooks4x4());
  EXPECT_EQ(FromGeneratorSpec("shrikhande", 0), Shrikhande());
  EXPECT_TRUE(FromGeneratorSpec("der:8:0.5", 1).directed());
  EXPECT_THROW(FromGeneratorSpec("complete", 0), std::invalid_argument);
  EXPECT_THROW(FromGeneratorSpec("complete:x", 0), std::invalid_argument);
  EXPECT_THROW(FromGeneratorSpec("hypercube:3", 0), std::invalid_argument);
}

TEST(Relabel, PreservesStructure) {
  const Graph g = Paw();
  const std::vector<Node> perm{3, 2, 1, 0};
  const Graph h = Relabel(g, perm);
  EXPECT_EQ(h.edge_count(), g.edge_count());
  for (const auto& [u, v] : g.edges()) EXPECT_TRUE(h.has_edge(perm[u], perm[v]));
  const std::vector<Node> bad{0, 0, 1, 2};
  EXPECT_THROW(Relabel(g, bad), std::invalid_argument);
}

TEST(EdgeListFormat, RoundTrip) {
  for (const Graph& g : {Paw(), ErdosRenyi(12, 0.4, 5),
                         ErdosRenyiDirected(9, 0.3, 2), Graph::FromEdgeList(3, {}, false)}) {
    std::stringstream ss;
    WriteEdgeList(ss, g);
    EXPECT_EQ(ReadEdgeList(ss), g);
  }
}

TEST(EdgeListFormat, HeaderAndErrors) {
  std::stringstream ss;
  WriteEdgeList(ss, Path(3));
  std::string header;
  std::getline(ss, header);
  EXPECT_EQ(header, "3 2 u");
  std::stringstream bad("3 2 u\n0 1\n");
  EXPECT_THROW(ReadEdgeList(bad), std::invalid_argument);
  std::stringstream kind("3 1 x\n0 1\n");
  EXPECT_THROW(ReadEdgeList(kind), std::invalid_argument);
}

}  // namespace
}  // namespace permagg
