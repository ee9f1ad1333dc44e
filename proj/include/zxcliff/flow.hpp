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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "zxcliff/circuit.hpp"
#include "zxcliff/diagram.hpp"

namespace zxcliff {

/**
 * A causal flow (f, <).
 *
 * The order is stored as a layer rank: outputs have layer 0 and
 * v precedes u iff layer(v) > layer(u).
 */
struct CausalFlow {
  std::map<VertexId, VertexId> successor;
  std::map<VertexId, std::size_t> layer;

  bool precedes(VertexId v, VertexId u) const { return layer.at(v) > layer.at(u); }
};

struct PathPosition {
  std::size_t qubit = 0;
  /// Index along the path; the input boundary sits at 0.
  std::size_t index = 0;
};

struct PathCover {
  /// One path per input, from the input boundary to an output boundary.
  std::vector<std::vector<VertexId>> paths;
  std::map<VertexId, PathPosition> position;
  CausalFlow flow;

  bool on_path(VertexId v) const { return position.contains(v); }
};

/**
 * Checks the flow conditions for `flow` on `d`: the successor is a neighbour, precedes
 * nothing it follows, and every other neighbour of f(v) comes after v.
 * Returns a description of the first violation, or nullopt.
 */
std::optional<std::string> check_flow(const Diagram& d, const CausalFlow& flow);

/**
 * Path cover from the causal flow of `d`.
 *
 * Needs a graph without parallel edges or self-loops and as many inputs as
 * outputs. Throws NotACircuit otherwise, or when no flow exists.
 */
PathCover find_path_cover(const Diagram& d);
std::optional<PathCover> try_path_cover(const Diagram& d);

/** Simple, square, and admits a causal flow. */
bool is_circuit_like(const Diagram& d);

/**
 * Reads the gates off a path cover.
 *
 * Phases become S, V, Z, X (three quarter turns give two gates), H boxes
 * become H, and each edge between paths becomes a CNOT with its control on
 * the Z end. CNOTs are scheduled by walking all paths forward together,
 * firing an edge once both its ends are reached. A permutation of wires
 * between inputs and outputs is emitted as trailing SWAPs.
 */
Circuit extract_circuit(const Diagram& d, const PathCover& pc);

/** Path covers keyed by the diagram's JSON dump. Not thread-safe. */
class PathCoverCache {
 public:
  const std::optional<PathCover>& get(const Diagram& d);
  void clear() { entries_.clear(); }
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, std::optional<PathCover>> entries_;
};

}  // namespace zxcliff
