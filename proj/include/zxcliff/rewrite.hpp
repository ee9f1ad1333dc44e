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
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "zxcliff/diagram.hpp"
#include "zxcliff/trace.hpp"

namespace zxcliff {

struct RulePlan;

/** A directed equation between two diagrams with the same boundary. */
struct Rule {
  std::string name;
  Diagram lhs;
  Diagram rhs;
  /// Matcher search plan; computed on demand when absent.
  std::shared_ptr<const RulePlan> plan;
};

/** Builds a rule with its search plan precomputed. Throws RuleFormatError. */
Rule make_rule(std::string name, Diagram lhs, Diagram rhs);

/**
 * An occurrence of a rule's left-hand side.
 *
 * `vertex_map` sends LHS interior vertices to target vertices. Each LHS
 * boundary stands for one target edge running from the image of its LHS
 * neighbour (`attach[b].first`) to an unmatched target vertex
 * (`attach[b].second`).
 */
struct Match {
  std::string rule_name;
  std::map<VertexId, VertexId> vertex_map;
  std::map<VertexId, std::pair<VertexId, VertexId>> attach;
  /// LHS interior edges paired with their target images.
  std::vector<std::pair<Edge, Edge>> edge_map;

  nlohmann::json fingerprint() const;
  bool operator==(const Match&) const = default;
};

/**
 * All matches of `rule.lhs` in `target`, sorted by the sorted tuple of
 * image ids, then by the vertex map and boundary attachment.
 *
 * Images must have exactly the degree of their LHS vertex and the same
 * multiplicity of edges between them. Boundary attachments that the
 * right-hand side cannot tell apart are reported once.
 */
std::vector<Match> find_matches(const Rule& rule, const Diagram& target);

/** As find_matches, keeping only matches that send `anchor` to `image`. */
std::vector<Match> find_matches_at(const Rule& rule, const Diagram& target, VertexId anchor,
                                   VertexId image);

/** Interior vertices counted by (kind, degree). */
using KindDegreeProfile = std::map<std::pair<VertexKind, std::size_t>, std::size_t>;

KindDegreeProfile kind_degree_profile(const Diagram& d);

/** False when `have` lacks vertices the LHS needs, so `rule` cannot match. */
bool may_match(const Rule& rule, const KindDegreeProfile& have);

/** The AxiomaticRewrite trace step for `m`. */
ProofStep rewrite_step(const Match& m);

/** Replaces the matched region by a fresh copy of `rule.rhs`. */
Diagram apply_match(const Diagram& target, const Rule& rule, const Match& m);

using Metric = std::function<std::int64_t(const Diagram&)>;
using TargetFn = std::function<std::optional<VertexId>(const Diagram&)>;

/**
 * A rewrite strategy: returns the rewritten diagram, or nothing when it
 * does not apply. Implementations append their steps to the trace.
 */
using Strategy = std::function<std::optional<Diagram>(const Diagram&, ProofTrace*)>;

/** First match of the first rule (in list order) that has one. */
std::optional<Diagram> rewrite_first(const std::vector<Rule>& rules, const Diagram& d,
                                     ProofTrace* trace);

/** First match (rules in order) whose result has strictly smaller metric. */
std::optional<Diagram> rewrite_metric(const std::vector<Rule>& rules, const Diagram& d,
                                      const Metric& metric, ProofTrace* trace);

/** First match placing LHS vertex `anchor` on the vertex picked by `target_fn`. */
std::optional<Diagram> rewrite_targeted(const Rule& rule, VertexId anchor,
                                        const Diagram& d, const TargetFn& target_fn,
                                        ProofTrace* trace);

struct ReduceResult {
  Diagram diagram;
  std::size_t steps = 0;
  bool fixpoint = false;  ///< false means the step budget ran out
};

inline constexpr std::size_t kDefaultStepBudget = 10000;

ReduceResult reduce(const Strategy& strategy, const Diagram& d, ProofTrace* trace,
                    std::size_t max_steps = kDefaultStepBudget);

/** Rules by name, for replay. */
using RuleLibrary = std::map<std::string, Rule>;

/**
 * Re-executes the trace from its initial diagram. Throws ReplayDivergence
 * when a step cannot be reproduced.
 */
Diagram replay(const ProofTrace& trace, const RuleLibrary& rules);

}  // namespace zxcliff
