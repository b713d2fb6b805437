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

#ifndef PERMAGG_WL_HPP_
#define PERMAGG_WL_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "permagg/graph.hpp"

namespace permagg {

using Color = std::uint32_t;

// Per-iteration color multisets. Iteration 0 is the initial coloring. Colors
// are interned per iteration into consecutive integers in sorted-signature
// order, so the same signature gets the same id across graphs refined
// together.
struct ColorHistogram {
  std::size_t k = 1;
  std::size_t item_count = 0;  // N for k = 1, N^k otherwise
  std::vector<std::map<Color, std::size_t>> iterations;
  bool stable = false;

  std::size_t class_count(std::size_t t) const {
    return iterations[t].size();
  }
};

struct WlBudget {
  std::size_t max_nodes_k2 = 200;
  std::size_t max_nodes_k3 = 20;
};

enum class WlVerdict { kDistinguished, kIndistinguishable };

// Node color refinement from a uniform initial coloring.
ColorHistogram Wl1Refine(const Graph& g);

// Tuple refinement for k in {2, 3}: tuples start from their atomic type and
// each round combines the previous color with the multiset of colors in each
// of the k coordinate neighborhoods.
ColorHistogram KwlRefine(const Graph& g, std::size_t k,
                         const WlBudget& budget = {});

// Refines all graphs jointly so colors are comparable; every histogram has
// the same number of iterations, ending when the joint partition is stable.
std::vector<ColorHistogram> RefineJointly(std::span<const Graph* const> graphs,
                                          std::size_t k,
                                          const WlBudget& budget = {});

WlVerdict WlDistinguish(const Graph& a, const Graph& b, std::size_t k,
                        const WlBudget& budget = {});

const char* ToString(WlVerdict verdict);

}  // namespace permagg

#endif  // PERMAGG_WL_HPP_
