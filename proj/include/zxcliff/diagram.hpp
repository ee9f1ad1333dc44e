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
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zxcliff/phase.hpp"

namespace zxcliff {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

enum class VertexType : std::uint8_t { Z, X, H, Boundary };

struct VertexKind {
  VertexType type = VertexType::Boundary;
  Phase phase{};

  static constexpr VertexKind z(Phase p = Phase{}) { return {VertexType::Z, p}; }
  static constexpr VertexKind x(Phase p = Phase{}) { return {VertexType::X, p}; }
  static constexpr VertexKind h() { return {VertexType::H, Phase{}}; }
  static constexpr VertexKind boundary() { return {VertexType::Boundary, Phase{}}; }

  constexpr bool is_spider() const {
    return type == VertexType::Z || type == VertexType::X;
  }
  constexpr bool is_boundary() const { return type == VertexType::Boundary; }

  constexpr auto operator<=>(const VertexKind&) const = default;
};

/** The opposite spider colour; H and Boundary map to themselves. */
VertexType opposite_colour(VertexType t);

std::string to_string(const VertexKind& kind);

struct DiagramSignature {
  std::size_t num_inputs = 0;
  std::size_t num_outputs = 0;
  auto operator<=>(const DiagramSignature&) const = default;
};

/**
 * A framed open graph of the stabilizer ZX-calculus.
 *
 * Boundaries are explicit degree-1 vertices listed in `inputs()` and
 * `outputs()`. Edges are undirected and stored as a multiset, so parallel
 * edges and self-loops are representable. Neighbour lists are kept sorted
 * and a self-loop contributes its vertex twice.
 *
 * New vertices always receive `next_id()`, the successor of the largest id
 * in use, so every construction sequence is deterministic.
 */
class Diagram {
 public:
  Diagram() = default;

  /** A single wire: one input, one output and the edge between them. */
  static Diagram identity(std::size_t wires = 1);

  VertexId add_vertex(VertexKind kind);
  /** Inserts a vertex with a caller-chosen id; throws if the id is taken. */
  void add_vertex_with_id(VertexId id, VertexKind kind);
  VertexId add_input();
  VertexId add_output();
  void add_edge(VertexId a, VertexId b);
  /** Removes one copy of the edge; returns false if absent. */
  bool remove_edge(VertexId a, VertexId b);
  /** Removes the vertex, its edges, and its place in the boundary lists. */
  void remove_vertex(VertexId v);

  void set_phase(VertexId v, Phase p);
  void set_kind(VertexId v, VertexKind kind);
  void set_inputs(std::vector<VertexId> ids);
  void set_outputs(std::vector<VertexId> ids);

  bool contains(VertexId v) const { return vertices_.contains(v); }
  const VertexKind& kind(VertexId v) const;
  VertexType type(VertexId v) const { return kind(v).type; }
  Phase phase(VertexId v) const { return kind(v).phase; }
  const std::vector<VertexId>& neighbours(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbours(v).size(); }
  std::size_t edge_multiplicity(VertexId a, VertexId b) const;
  std::size_t self_loops(VertexId v) const { return edge_multiplicity(v, v); }

  std::vector<VertexId> vertex_ids() const;
  std::vector<VertexId> interior_ids() const;
  /** All edges as (low, high) pairs, sorted, with repetitions. */
  std::vector<Edge> edges() const;
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_interior() const;
  std::size_t num_edges() const;

  const std::vector<VertexId>& inputs() const { return inputs_; }
  const std::vector<VertexId>& outputs() const { return outputs_; }
  std::size_t num_inputs() const { return inputs_.size(); }
  std::size_t num_outputs() const { return outputs_.size(); }
  DiagramSignature signature() const { return {inputs_.size(), outputs_.size()}; }
  bool is_input(VertexId v) const;
  bool is_output(VertexId v) const;

  VertexId next_id() const;

  /** Throws InvalidDiagramError if any structural invariant is broken. */
  void validate() const;
  bool is_valid() const;

  /** Structural equality: same ids, kinds, edges and boundary lists. */
  bool operator==(const Diagram& other) const = default;

 private:
  std::map<VertexId, VertexKind> vertices_;
  std::map<VertexId, std::vector<VertexId>> adjacency_;
  std::vector<VertexId> inputs_;
  std::vector<VertexId> outputs_;
};

/** Joins the outputs of `first` to the inputs of `second` positionally. */
Diagram compose(const Diagram& first, const Diagram& second);
/** Disjoint union; `bottom`'s wires come after `top`'s. */
Diagram tensor(const Diagram& top, const Diagram& bottom);
/** Swaps inputs and outputs and negates every spider phase. */
Diagram adjoint(const Diagram& d);

/**
 * Isomorphism of framed labelled graphs: a kind-preserving bijection of
 * vertices preserving edge multiplicities and mapping inputs and outputs
 * positionally.
 */
bool iso_equal(const Diagram& a, const Diagram& b);

/** As iso_equal, but also returns the vertex map a -> b on success. */
std::optional<std::map<VertexId, VertexId>> find_isomorphism(const Diagram& a,
                                                             const Diagram& b);

/** Copy of `d` with vertex ids renumbered 0..n-1 in ascending order. */
Diagram compact_ids(const Diagram& d);

}  // namespace zxcliff
