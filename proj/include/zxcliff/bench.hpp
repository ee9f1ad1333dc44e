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
#include <vector>

#include "zxcliff/circuit.hpp"
#include "zxcliff/optimiser.hpp"

namespace zxcliff {

struct BenchConfig {
  std::size_t width = 2;
  std::size_t depth = 20;
  std::size_t count = 50;
  std::uint64_t seed = 0;
  /// Worker threads; 0 means one per hardware thread.
  std::size_t jobs = 1;
  OptimiserConfig optimiser;
  /// Also replay each proof trace against the rule library.
  bool replay = false;
};

struct BenchRun {
  std::uint64_t seed = 0;
  std::size_t input_size = 0;
  std::size_t output_size = 0;
  std::size_t rewrites = 0;
  double millis = 0.0;
  bool verified = false;  ///< semantics checked and equal
  bool replayed = false;
  bool in_normal_form = false;  ///< CC1 member at width 1, CC2 at width 2
  std::string error;
};

/**
 * Aggregates over `count` runs. `ratio` is mean output size over mean
 * input size. Times are milliseconds.
 */
struct BenchReport {
  BenchConfig config;
  std::vector<BenchRun> runs;
  double mean_in = 0.0;
  double mean_out = 0.0;
  double ratio = 0.0;
  double mean_steps = 0.0;
  double ms_mean = 0.0;
  double ms_sigma = 0.0;
  /// Fraction of runs whose semantics were checked and matched.
  double verified = 0.0;

  bool all_verified() const;
  static std::string csv_header();
  std::string csv_row() const;
  std::string table() const;
};

/**
 * Optimises `count` circuits from random_clifford_circuit with seeds
 * seed, seed+1, ... Runs are verified by the oracle when width <= 4; errors
 * are recorded per run.
 */
BenchReport bench(const BenchConfig& cfg, const Ruleset& rules = default_ruleset());

/** Scalar-free equality of two circuits of the same width. */
bool verify_circuits(const Circuit& a, const Circuit& b);

}  // namespace zxcliff
