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

#include "zxcliff/circuit.hpp"
#include "zxcliff/diagram.hpp"
#include "zxcliff/ruleset.hpp"
#include "zxcliff/trace.hpp"

namespace zxcliff {

struct OptimiserConfig {
  std::size_t max_global_iters = 50;
  /// Cap on rewrite steps across the whole run.
  std::size_t step_budget = kDefaultStepBudget;
  /// Check circuit shape and semantics after every step.
  bool verify_each_step = false;
  /// Final tidy may replace whole width-2 diagrams by their CC2 member.
  bool semantic_fallback = true;
};

struct OptimiserStats {
  std::size_t input_size = 0;   ///< circuit_size of the translated input
  std::size_t simple_size = 0;  ///< circuit_size of its simple form
  std::size_t output_size = 0;
  std::size_t rewrites = 0;     ///< axiomatic rule applications
  std::size_t trace_steps = 0;
  std::size_t iterations = 0;
  bool budget_exceeded = false;
  double millis = 0.0;
};

struct OptimiseResult {
  Circuit circuit;
  Diagram diagram;
  ProofTrace trace;
  OptimiserStats stats;
};

/** A degree-2 spider with phase pi. */
bool is_pauli_vertex(const Diagram& d, VertexId v);

/**
 * Sum of path positions of Pauli vertices plus (|V|+1)^2 for every interior
 * vertex on no path. Without any path cover every interior vertex counts
 * as off-path.
 */
std::int64_t pauli_metric(const Diagram& d);

/**
 * Translates, simplifies, rewrites to a fixpoint and tidies `c`, then reads
 * the result back as a circuit. Throws NotACircuit if the diagram stops
 * being circuit-like, and VerificationError when `verify_each_step`
 * catches a semantic change.
 */
OptimiseResult optimise(const Circuit& c, const OptimiserConfig& cfg = {},
                        const Ruleset& rules = default_ruleset());

/**
 * Replaces each maximal run of degree-2 vertices on a path by its CC1
 * member. With `fallback`, a two-wire diagram is then replaced whole by its
 * CC2 member. Steps go to `trace` when non-null.
 */
Diagram canonicalise_blocks(const Diagram& d, bool fallback, ProofTrace* trace);

/**
 * Moves the Paulis of a line graph to its input end with pi-copy steps and
 * spider fusion. Throws NotALineGraph.
 */
Diagram line_to_pauli_standard(const Diagram& d, ProofTrace* trace);

}  // namespace zxcliff
