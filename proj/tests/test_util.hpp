// Copyright 2026 The zxcliff Authors
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


#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "zxcliff/circuit.hpp"
#include "zxcliff/diagram.hpp"
#include "zxcliff/semantics.hpp"

namespace zxcliff::test {

/** Same linear map up to a nonzero scalar. */
bool same_map(const Diagram& a, const Diagram& b);

/**
 * A small random open graph: `spiders` Z/X spiders with random phases,
 * `extra` random edges on top of a spanning chain, one input and one output
 * per wire. Parallel edges and self-loops are allowed.
 */
Diagram random_graph(std::size_t wires, std::size_t spiders, std::size_t extra,
                     std::mt19937_64& rng);

/** Random circuits of mixed width, for sweeps. */
std::vector<Circuit> circuit_sample(std::size_t count, std::size_t max_width,
                                    std::size_t max_depth, std::uint64_t seed);

}  // namespace zxcliff::test
