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
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "zxcliff/diagram.hpp"
#include "zxcliff/passes.hpp"

namespace zxcliff {

enum class StepKind { AxiomaticRewrite, StructuralPass, SemanticNormalisation };

std::string_view to_string(StepKind k);

/**
 * One recorded step.
 *
 * AxiomaticRewrite: `name` is the rule, `fingerprint` the match.
 * StructuralPass: `name` is the pass, `args` its targets and `affected`
 * what it touched.
 * SemanticNormalisation: `region` lists the replaced vertices in wire
 * order, `args` holds the two outside endpoints (empty when the whole
 * diagram is replaced) and `name` the replacement ("cc1:<i>", "cc2:<i>").
 */
struct ProofStep {
  StepKind kind = StepKind::AxiomaticRewrite;
  std::string name;
  nlohmann::json fingerprint;
  std::vector<VertexId> args;
  std::vector<VertexId> affected;
  std::vector<VertexId> region;

  nlohmann::json to_json() const;
  static ProofStep from_json(const nlohmann::json& j);
};

class ProofTrace {
 public:
  ProofTrace() = default;
  explicit ProofTrace(Diagram initial)
      : initial_(std::move(initial)), final_(initial_) {}

  const Diagram& initial() const { return initial_; }
  const Diagram& final_diagram() const { return final_; }
  const std::vector<ProofStep>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  std::size_t count(StepKind k) const;

  void record(ProofStep step, const Diagram& after);
  /** Appends the structural passes that turn final_diagram() into its fixpoint. */
  Diagram normalise();

  nlohmann::json to_json() const;
  std::string dump() const;
  static ProofTrace from_json(const nlohmann::json& j);
  static ProofTrace parse(const std::string& text);

 private:
  Diagram initial_;
  std::vector<ProofStep> steps_;
  Diagram final_;
};

/** Records each changing pass of the structural fixpoint into `trace`. */
Diagram traced_fixpoint(const Diagram& d, ProofTrace* trace);

/** Replacement diagram named by a SemanticNormalisation step. */
const Diagram& semantic_replacement(const std::string& name);

/**
 * Checks a SemanticNormalisation step against the oracle and performs the
 * splice. Throws ReplayDivergence if the region does not fit or the
 * semantics differ.
 */
Diagram apply_semantic_step(const Diagram& d, const ProofStep& step);

}  // namespace zxcliff
