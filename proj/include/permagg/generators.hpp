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

#ifndef PERMAGG_GENERATORS_HPP_
#define PERMAGG_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "permagg/graph.hpp"

namespace permagg {

Graph Complete(std::size_t n);
// Center 0 with `leaves` leaves 1..leaves.
Graph Star(std::size_t leaves);
Graph Cycle(std::size_t n);
Graph Path(std::size_t n);
// Triangle {0,1,2} plus pendant 3 attached to node 0.
Graph Paw();

// G(n, p): every unordered pair independently with probability p.
Graph ErdosRenyi(std::size_t n, double p, std::uint64_t seed);
// Every ordered pair (i != j) independently with probability p.
Graph ErdosRenyiDirected(std::size_t n, double p, std::uint64_t seed);

// Uniform d-regular simple graph via the pairing model. Invalid pairings
// are rejected point by point; a dead end restarts the attempt.
Graph RandomRegular(std::size_t n, std::size_t d, std::uint64_t seed);

// 4x4 rook's graph: cells (r, c) -> 4r + c, adjacent iff same row or column.
Graph Rooks4x4();
// Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
Graph Shrikhande();

// Built-in generator specs: complete:n, star:n, cycle:n, path:n, paw,
// er:n:p, der:n:p (directed), regular:n:d, rooks, shrikhande. Seed feeds
// the random families.
Graph FromGeneratorSpec(std::string_view spec, std::uint64_t seed);

}  // namespace permagg

#endif  // PERMAGG_GENERATORS_HPP_
