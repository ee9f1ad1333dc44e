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

#include "zxcliff/trace.hpp"

#include <algorithm>
#include <array>

#include "zxcliff/diagram_json.hpp"
#include "zxcliff/errors.hpp"
#include "zxcliff/normal_forms.hpp"
#include "zxcliff/semantics.hpp"

namespace zxcliff {

using nlohmann::json;

namespace {

constexpr std::array<std::string_view, 3> kStepNames = {
    "AxiomaticRewrite", "StructuralPass", "SemanticNormalisation"};

}  // namespace

std::string_view to_string(StepKind k) { return kStepNames[static_cast<std::size_t>(k)]; }

json ProofStep::to_json() const {
  json j = {{"kind", to_string(kind)}, {"name", name}};
  switch (kind) {
    case StepKind::AxiomaticRewrite:
      j["match"] = fingerprint;
      break;
    case StepKind::StructuralPass:
      j["args"] = args;
      j["affected"] = affected;
      break;
    case StepKind::SemanticNormalisation:
      j["region"] = region;
      j["args"] = args;
      break;
  }
  return j;
}

ProofStep ProofStep::from_json(const json& j) {
  ProofStep s;
  try {
    const std::string kind = j.at("kind").get<std::string>();
    auto it = std::find(kStepNames.begin(), kStepNames.end(), kind);
    if (it == kStepNames.end()) throw ReplayDivergence("unknown step kind " + kind);
    s.kind = static_cast<StepKind>(it - kStepNames.begin());
    s.name = j.at("name").get<std::string>();
    if (j.contains("match")) s.fingerprint = j.at("match");
    if (j.contains("args")) s.args = j.at("args").get<std::vector<VertexId>>();
    if (j.contains("affected")) s.affected = j.at("affected").get<std::vector<VertexId>>();
    if (j.contains("region")) s.region = j.at("region").get<std::vector<VertexId>>();
  } catch (const json::exception& ex) {
    throw ReplayDivergence(std::string("malformed step: ") + ex.what());
  }
  return s;
}

std::size_t ProofTrace::count(StepKind k) const {
  return static_cast<std::size_t>(std::count_if(
      steps_.begin(), steps_.end(), [k](const ProofStep& s) { return s.kind == k; }));
}

void ProofTrace::record(ProofStep step, const Diagram& after) {
  steps_.push_back(std::move(step));
  final_ = after;
}

Diagram ProofTrace::normalise() { return traced_fixpoint(final_, this); }

json ProofTrace::to_json() const {
  json steps = json::array();
  for (const ProofStep& s : steps_) steps.push_back(s.to_json());
  return json{{"initial", diagram_to_json(initial_)},
              {"steps", std::move(steps)},
              {"final", diagram_to_json(final_)}};
}

std::string ProofTrace::dump() const { return to_json().dump(); }

ProofTrace ProofTrace::from_json(const json& j) {
  ProofTrace t;
  try {
    t.initial_ = diagram_from_json(j.at("initial"));
    for (const auto& s : j.at("steps")) t.steps_.push_back(ProofStep::from_json(s));
    t.final_ = diagram_from_json(j.at("final"));
  } catch (const json::exception& ex) {
    throw ReplayDivergence(std::string("malformed trace: ") + ex.what());
  }
  return t;
}

ProofTrace ProofTrace::parse(const std::string& text) {
  try {
    return from_json(json::parse(text));
  } catch (const json::parse_error& ex) {
    throw ReplayDivergence(std::string("trace is not JSON: ") + ex.what());
  }
}

Diagram traced_fixpoint(const Diagram& d, ProofTrace* trace) {
  return structural_fixpoint(
      d, [trace](PassKind k, const std::vector<VertexId>& touched, const Diagram& after) {
        if (!trace) return;
        ProofStep s;
        s.kind = StepKind::StructuralPass;
        s.name = std::string(pass_name(k));
        s.affected = touched;
        trace->record(std::move(s), after);
      });
}

const Diagram& semantic_replacement(const std::string& name) {
  auto colon = name.find(':');
  if (colon == std::string::npos) throw ReplayDivergence("bad replacement id " + name);
  const std::string table = name.substr(0, colon);
  std::size_t index = 0;
  try {
    index = std::stoul(name.substr(colon + 1));
  } catch (const std::exception&) {
    throw ReplayDivergence("bad replacement id " + name);
  }
  if (table == "cc1" && index < cc1_table().size()) {
    return cc1_table().entries()[index].diagram;
  }
  if (table == "cc2" && index < cc2_family().size()) {
    return cc2_family().members()[index].diagram;
  }
  throw ReplayDivergence("unknown replacement " + name);
}

Diagram apply_semantic_step(const Diagram& d, const ProofStep& step) {
  const Diagram& replacement = semantic_replacement(step.name);

  if (step.args.empty()) {
    // whole diagram
    if (step.region != d.interior_ids()) {
      throw ReplayDivergence("semantic step region is not the whole diagram");
    }
    if (d.signature() != replacement.signature() ||
        !scalar_free_equal(interpret(d), interpret(replacement))) {
      throw ReplayDivergence("semantic replacement " + step.name + " is not equal");
    }
    return replacement;
  }

  if (step.args.size() != 2 || replacement.num_inputs() != 1 ||
      replacement.num_outputs() != 1) {
    throw ReplayDivergence("semantic step must name a single-wire replacement");
  }
  const VertexId before = step.args[0];
  const VertexId after = step.args[1];
  std::vector<VertexKind> kinds;
  VertexId prev = before;
  for (VertexId v : step.region) {
    if (!d.contains(v) || d.kind(v).is_boundary() || d.degree(v) != 2 ||
        d.edge_multiplicity(prev, v) != 1) {
      throw ReplayDivergence("semantic step region is not a wire segment");
    }
    kinds.push_back(d.kind(v));
    prev = v;
  }
  if (!d.contains(after) || d.edge_multiplicity(prev, after) != 1 ||
      (step.region.empty() && before == after)) {
    throw ReplayDivergence("semantic step region is not a wire segment");
  }
  if (!scalar_free_equal(interpret(line_diagram(kinds)), interpret(replacement))) {
    throw ReplayDivergence("semantic replacement " + step.name + " is not equal");
  }

  Diagram out = d;
  if (step.region.empty()) {
    out.remove_edge(before, after);
  }
  for (VertexId v : step.region) out.remove_vertex(v);
  prev = before;
  // replacement is a line: walk it from its input
  VertexId cursor = replacement.inputs()[0];
  VertexId came_from = cursor;
  cursor = replacement.neighbours(cursor)[0];
  while (!replacement.kind(cursor).is_boundary()) {
    VertexId fresh = out.add_vertex(replacement.kind(cursor));
    out.add_edge(prev, fresh);
    prev = fresh;
    const auto& n = replacement.neighbours(cursor);
    VertexId next = n[0] == came_from ? n[1] : n[0];
    came_from = cursor;
    cursor = next;
  }
  out.add_edge(prev, after);
  return out;
}

}  // namespace zxcliff
