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

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "zxcliff/rewrite.hpp"

namespace zxcliff {

/**
 * The rule collections of a ruleset directory. Each group is a
 * subdirectory of the same name; files load in filename order.
 *
 * `euler` holds the Euler-form exchange rules in both directions. They
 * keep size constant, so the optimiser never runs them to a fixpoint.
 */
struct Ruleset {
  std::vector<Rule> init;
  std::vector<Rule> always;
  std::vector<Rule> euler;
  std::vector<Rule> pauli_commute;
  std::vector<Rule> cnot_commute;
  std::vector<Rule> c2;
  RuleLibrary library;

  std::vector<const Rule*> all() const;
  std::size_t size() const { return library.size(); }
};

/**
 * The order that always-rules decrease: circuit size, then the number of
 * edges between interior vertices.
 */
std::pair<std::size_t, std::size_t> reduction_weight(const Diagram& d);

/** Group names in load order. */
const std::vector<std::string>& ruleset_groups();

/** Text before the first ':' of a rule name. */
std::string_view rule_family(std::string_view name);

nlohmann::json rule_to_json(const Rule& r);
Rule rule_from_json(const nlohmann::json& j);
Rule read_rule_file(const std::filesystem::path& file);
void write_rule_file(const std::filesystem::path& file, const Rule& r);

/** Z and X exchanged on both sides; the name gains ".dual". */
Rule colour_dual(const Rule& r);

/** Throws UnsoundRuleError unless both sides agree up to a scalar. */
void check_rule_sound(const Rule& r, double tol = 1e-9);

/**
 * Loads and audits a ruleset directory. Every rule's colour dual is added
 * after it unless its left side already occurs in the group.
 */
Ruleset load_ruleset(const std::filesystem::path& dir);

/** The ruleset shipped with the library, loaded once. */
const Ruleset& default_ruleset();

/** Directory of the shipped ruleset. */
std::filesystem::path default_ruleset_dir();

}  // namespace zxcliff
