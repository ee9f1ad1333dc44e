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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zxcliff/diagram.hpp"

namespace zxcliff {

enum class PassKind {
  FuseSpiders,
  RemoveIdentities,
  RemoveSelfLoops,
  HopfReduce,
  HEulerExpand,
  ColourChangeVertex,
  PiCopy,
};

std::string_view pass_name(PassKind k);
std::optional<PassKind> pass_from_name(std::string_view name);

/**
 * Every pass returns a new diagram. When `affected` is non-null it receives
 * the ids the pass touched, in the order they were touched; replay compares
 * these lists.
 */
using Affected = std::vector<VertexId>*;

/// Merges adjacent same-colour spiders into the lower id.
Diagram fuse_spiders(const Diagram& d, Affected affected = nullptr);
/// Deletes zero-phase degree-2 spiders, joining their neighbours.
/**
 * Drops zero-phase spiders of degree 0, and of degree 2 when the two edges
 * lead to different vertices.
 */
Diagram remove_identities(const Diagram& d, Affected affected = nullptr);
/// Deletes plain self-loops on spiders.
Diagram remove_self_loops(const Diagram& d, Affected affected = nullptr);
/// Removes parallel edges between opposite-colour spiders two at a time.
Diagram hopf_reduce(const Diagram& d, Affected affected = nullptr);
/// Replaces each H box by Z(1)-X(1)-Z(1).
Diagram h_euler_expand(const Diagram& d, Affected affected = nullptr);

/**
 * Flips the colour of spider `v` and puts an H box on each of its legs;
 * an existing H box on a leg is cancelled instead. Self-loops are left
 * alone.
 */
Diagram colour_change_vertex(const Diagram& d, VertexId v, Affected affected = nullptr);

/**
 * Pushes the degree-2 pi spider `pauli` through its neighbour `through`,
 * which must be a spider of the other colour: the phase of `through` is
 * negated and a pi spider of the Pauli's colour lands on each of its
 * remaining legs.
 */
Diagram pi_copy(const Diagram& d, VertexId pauli, VertexId through,
                Affected affected = nullptr);

/** Runs a pass by kind; the targeted passes read their vertices from `args`. */
Diagram run_pass(PassKind k, const Diagram& d, const std::vector<VertexId>& args,
                 Affected affected = nullptr);

/**
 * One application of each of fuse, anti-loop, hopf and identity removal,
 * repeated until nothing changes. Calls `on_pass` for each pass that
 * changed the diagram.
 */
template <typename Callback>
Diagram structural_fixpoint(Diagram d, Callback&& on_pass) {
  using Fn = Diagram (*)(const Diagram&, Affected);
  constexpr std::pair<PassKind, Fn> kPasses[] = {
      {PassKind::FuseSpiders, &fuse_spiders},
      {PassKind::RemoveSelfLoops, &remove_self_loops},
      {PassKind::HopfReduce, &hopf_reduce},
      {PassKind::RemoveIdentities, &remove_identities},
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [kind, fn] : kPasses) {
      std::vector<VertexId> touched;
      Diagram next = fn(d, &touched);
      if (!touched.empty()) {
        changed = true;
        on_pass(kind, touched, next);
        d = std::move(next);
      }
    }
  }
  return d;
}

Diagram structural_fixpoint(const Diagram& d);

/** H-Euler expansion followed by the structural fixpoint. */
Diagram simple_form(const Diagram& d);

/**
 * No parallel edges, no self-loops, no adjacent same-colour spiders, no
 * zero-phase degree-2 spiders and no H boxes.
 */
bool is_simple(const Diagram& d);

}  // namespace zxcliff
