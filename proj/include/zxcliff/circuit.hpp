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
#include <string>
#include <string_view>
#include <vector>

#include "zxcliff/diagram.hpp"
#include "zxcliff/semantics.hpp"

namespace zxcliff {

enum class GateType : std::uint8_t { S, V, Z, X, H, CNOT, TONC, SWAP };

/**
 * One gate. Single-qubit gates use `a` only.
 *
 * CNOT a b has control a and target b. TONC a b is the same pair of wires
 * with the roles reversed: target a, control b.
 */
struct Gate {
  GateType type = GateType::S;
  std::size_t a = 0;
  std::size_t b = 0;

  static Gate single(GateType t, std::size_t wire) { return {t, wire, 0}; }
  static Gate cnot(std::size_t control, std::size_t target) {
    return {GateType::CNOT, control, target};
  }
  static Gate tonc(std::size_t a, std::size_t b) { return {GateType::TONC, a, b}; }
  static Gate swap(std::size_t a, std::size_t b) { return {GateType::SWAP, a, b}; }

  bool is_two_qubit() const;
  bool operator==(const Gate&) const = default;
};

std::string_view gate_name(GateType t);

struct Circuit {
  std::size_t width = 1;
  std::vector<Gate> gates;

  /** Throws InvalidGateError on an out-of-range or repeated wire. */
  void validate() const;
  bool operator==(const Circuit&) const = default;
};

/// Product of the gate matrices, first gate rightmost.
ScalarFreeMatrix gate_matrix_product(const Circuit& c,
                                     const SemanticsOptions& opts = {});

/**
 * The circuit as a diagram.
 *
 * Vertex ids: inputs 0..n-1, then gate vertices in gate order (control
 * side first for two-qubit gates), then outputs.
 */
Diagram translate(const Circuit& c);

Circuit parse_circuit(std::string_view text);
std::string serialize_circuit(const Circuit& c);

/**
 * `depth` layers; each layer is a fair coin between one single-qubit gate
 * (uniform over S, V, Z, X, H and over wires) and, when width >= 2, one CNOT
 * on a uniform ordered pair of distinct wires.
 */
Circuit random_clifford_circuit(std::size_t width, std::size_t depth,
                                std::uint64_t seed);

/** Interior vertices, not counting zero-phase degree-2 spiders. */
std::size_t circuit_size(const Diagram& d);

bool check_translation_soundness(const Circuit& c, double tol = kDefaultTolerance,
                                 const SemanticsOptions& opts = {});

}  // namespace zxcliff
