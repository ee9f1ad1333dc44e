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


#include "zxcliff/optimiser.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zxcliff/errors.hpp"
#include "zxcliff/flow.hpp"
#include "zxcliff/normal_forms.hpp"
#include "zxcliff/passes.hpp"
#include "zxcliff/rewrite.hpp"
#include "zxcliff/semantics.hpp"

namespace zxcliff {

namespace {

struct IndexedRule {
  const Rule* rule;
  std::optional<VertexId> pauli;  ///< LHS Pauli vertex, for targeting
};

std::vector<IndexedRule> index_rules(std::initializer_list<const std::vector<Rule>*> groups,
                                     bool targeted = false) {
  std::vector<IndexedRule> out;
  for (const auto* g : groups) {
    for (const Rule& r : *g) {
      IndexedRule ir{&r, std::nullopt};
      for (VertexId v : targeted ? r.lhs.interior_ids() : std::vector<VertexId>{}) {
        if (is_pauli_vertex(r.lhs, v)) {
          ir.pauli = v;
          break;
        }
      }
      out.push_back(ir);
    }
  }
  return out;
}

class Run {
 public:
  Run(const Ruleset& rules, const OptimiserConfig& cfg, Diagram start, ProofTrace* trace)
      : cfg_(cfg),
        trace_(trace),
        d_(std::move(start)),
        init_(index_rules({&rules.init})),
        always_(index_rules({&rules.always})),
        pauli_(index_rules({&rules.pauli_commute}, true)),
        cnot_(index_rules({&rules.cnot_commute, &rules.c2})) {}

  Diagram& diagram() { return d_; }
  std::size_t steps() const { return steps_; }
  bool budget_exceeded() const { return budget_hit_; }

  void set_reference(ScalarFreeMatrix u) { reference_ = std::move(u); }

  void init() {
    while (spend()) {
      bool applied = false;
      for (const IndexedRule& ir : init_) {
        auto ms = find_matches(*ir.rule, d_);
        if (ms.empty()) continue;
        Diagram next = apply_match(d_, *ir.rule, ms.front());
        record(rewrite_step(ms.front()), next);
        d_ = std::move(next);
        applied = true;
        break;
      }
      if (!applied) {
        --steps_;
        break;
      }
    }
    std::vector<VertexId> touched;
    Diagram expanded = h_euler_expand(d_, &touched);
    if (!touched.empty()) {
      ProofStep s;
      s.kind = StepKind::StructuralPass;
      s.name = std::string(pass_name(PassKind::HEulerExpand));
      s.affected = touched;
      record(std::move(s), expanded);
      d_ = std::move(expanded);
    }
    d_ = traced_fixpoint(d_, trace_);
    check();
  }

  /// One pass of the three phases; true if anything changed.
  bool iterate() {
    const Diagram before = d_;
    while (spend() && always_step()) {
    }
    while (spend() && pauli_step()) {
    }
    while (spend() && metric_step()) {
    }
    return !(d_ == before) && !iso_equal(d_, before);
  }

 private:
  bool spend() {
    if (steps_ >= cfg_.step_budget) {
      budget_hit_ = true;
      return false;
    }
    ++steps_;
    return true;
  }

  void record(ProofStep s, const Diagram& after) {
    if (trace_) trace_->record(std::move(s), after);
  }

  void commit(ProofStep s, const Diagram& next, Diagram normal) {
    record(std::move(s), next);
    d_ = trace_ ? traced_fixpoint(next, trace_) : std::move(normal);
    check();
  }

  void check() const {
    if (!cfg_.verify_each_step) return;
    if (!is_circuit_like(d_)) throw NotACircuit("optimiser left the circuit-like diagrams");
    if (reference_ && !scalar_free_equal(*reference_, interpret(d_))) {
      throw VerificationError("optimiser step changed the interpretation");
    }
  }

  bool always_step() {
    const KindDegreeProfile have = kind_degree_profile(d_);
    const auto weight = reduction_weight(d_);
    for (const IndexedRule& ir : always_) {
      if (!may_match(*ir.rule, have)) continue;
      for (const Match& m : find_matches(*ir.rule, d_)) {
        Diagram next = apply_match(d_, *ir.rule, m);
        Diagram normal = structural_fixpoint(next);
        if (reduction_weight(normal) < weight && is_circuit_like(normal)) {
          commit(rewrite_step(m), next, std::move(normal));
          return true;
        }
      }
    }
    --steps_;
    return false;
  }

  /// Accepts `normal` when it stays a circuit and lowers the Pauli metric.
  bool improves(const Diagram& normal, std::int64_t current) const {
    return is_circuit_like(normal) && pauli_metric(normal) < current;
  }

  bool pauli_step() {
    const std::int64_t current = pauli_metric(d_);
    const PathCover pc = find_path_cover(d_);
    const KindDegreeProfile have = kind_degree_profile(d_);
    for (const auto& path : pc.paths) {
      for (std::size_t i = 2; i + 1 < path.size(); ++i) {
        const VertexId v = path[i];
        const VertexId pred = path[i - 1];
        if (!is_pauli_vertex(d_, v) || is_pauli_vertex(d_, pred)) continue;
        for (const IndexedRule& ir : pauli_) {
          if (!ir.pauli || !may_match(*ir.rule, have)) continue;
          for (const Match& m : find_matches_at(*ir.rule, d_, *ir.pauli, v)) {
            Diagram next = apply_match(d_, *ir.rule, m);
            Diagram normal = structural_fixpoint(next);
            if (improves(normal, current)) {
              commit(rewrite_step(m), next, std::move(normal));
              return true;
            }
          }
        }
        if (d_.kind(pred).is_spider() && d_.type(pred) != d_.type(v)) {
          std::vector<VertexId> touched;
          Diagram next = pi_copy(d_, v, pred, &touched);
          Diagram normal = structural_fixpoint(next);
          if (improves(normal, current)) {
            ProofStep s;
            s.kind = StepKind::StructuralPass;
            s.name = std::string(pass_name(PassKind::PiCopy));
            s.args = {v, pred};
            s.affected = touched;
            commit(std::move(s), next, std::move(normal));
            return true;
          }
        }
      }
    }
    --steps_;
    return false;
  }

  bool metric_step() {
    const std::int64_t current = pauli_metric(d_);
    const KindDegreeProfile have = kind_degree_profile(d_);
    for (const IndexedRule& ir : cnot_) {
      if (!may_match(*ir.rule, have)) continue;
      for (const Match& m : find_matches(*ir.rule, d_)) {
        Diagram next = apply_match(d_, *ir.rule, m);
        Diagram normal = structural_fixpoint(next);
        if (improves(normal, current)) {
          commit(rewrite_step(m), next, std::move(normal));
          return true;
        }
      }
    }
    --steps_;
    return false;
  }

  const OptimiserConfig& cfg_;
  ProofTrace* trace_;
  Diagram d_;
  std::vector<IndexedRule> init_, always_, pauli_, cnot_;
  std::optional<ScalarFreeMatrix> reference_;
  std::size_t steps_ = 0;
  bool budget_hit_ = false;
};

/// Maximal runs of degree-2 interior vertices, with their end points.
struct RunSpan {
  VertexId before;
  std::vector<VertexId> run;
  VertexId after;
};

std::vector<RunSpan> single_qubit_runs(const Diagram& d, const PathCover& pc) {
  std::vector<RunSpan> out;
  for (const auto& path : pc.paths) {
    std::vector<VertexId> run;
    for (std::size_t i = 1; i < path.size(); ++i) {
      const VertexId v = path[i];
      if (!d.kind(v).is_boundary() && d.degree(v) == 2) {
        run.push_back(v);
        continue;
      }
      if (!run.empty()) out.push_back({path[i - run.size() - 1], run, v});
      run.clear();
    }
  }
  return out;
}

}  // namespace

bool is_pauli_vertex(const Diagram& d, VertexId v) {
  return d.kind(v).is_spider() && d.degree(v) == 2 && d.phase(v).is_pauli();
}

std::int64_t pauli_metric(const Diagram& d) {
  const auto n = static_cast<std::int64_t>(d.num_vertices());
  const std::int64_t big = (n + 1) * (n + 1);
  auto pc = try_path_cover(d);
  if (!pc) return big * static_cast<std::int64_t>(d.num_interior());
  std::int64_t value = 0;
  for (VertexId v : d.interior_ids()) {
    if (!pc->on_path(v)) {
      value += big;
    } else if (is_pauli_vertex(d, v)) {
      value += static_cast<std::int64_t>(pc->position.at(v).index);
    }
  }
  return value;
}

Diagram canonicalise_blocks(const Diagram& start, bool fallback, ProofTrace* trace) {
  Diagram d = start;
  for (bool changed = true; changed;) {
    changed = false;
    const PathCover pc = find_path_cover(d);
    for (const RunSpan& span : single_qubit_runs(d, pc)) {
      std::vector<VertexKind> kinds;
      for (VertexId v : span.run) kinds.push_back(d.kind(v));
      const Diagram line = line_diagram(kinds);
      const std::size_t index = *cc1_table().index_of(interpret(line));
      if (iso_equal(cc1_table().entries()[index].diagram, line)) continue;
      ProofStep s;
      s.kind = StepKind::SemanticNormalisation;
      s.name = "cc1:" + std::to_string(index);
      s.region = span.run;
      s.args = {span.before, span.after};
      Diagram next = apply_semantic_step(d, s);
      if (trace) trace->record(std::move(s), next);
      d = traced_fixpoint(next, trace);
      changed = true;
      break;
    }
  }
  if (fallback && d.num_inputs() == 2 && d.num_outputs() == 2) {
    const ScalarFreeMatrix u = interpret(d);
    const std::size_t index = *cc2_family().index_of(u);
    const Diagram& member = cc2_family().members()[index].diagram;
    if (!iso_equal(member, d)) {
      ProofStep s;
      s.kind = StepKind::SemanticNormalisation;
      s.name = "cc2:" + std::to_string(index);
      s.region = d.interior_ids();
      Diagram next = apply_semantic_step(d, s);
      if (trace) trace->record(std::move(s), next);
      d = std::move(next);
    }
  }
  return d;
}

Diagram line_to_pauli_standard(const Diagram& start, ProofTrace* trace) {
  auto line_order = [](const Diagram& d) {
    if (d.num_inputs() != 1 || d.num_outputs() != 1) {
      throw NotALineGraph("a line graph has one input and one output");
    }
    std::vector<VertexId> order{d.inputs()[0]};
    VertexId prev = d.inputs()[0], cur = d.neighbours(prev)[0];
    while (!d.kind(cur).is_boundary()) {
      if (d.degree(cur) != 2 || d.self_loops(cur) != 0) {
        throw NotALineGraph("vertex " + std::to_string(cur) + " does not have degree 2");
      }
      order.push_back(cur);
      const auto& n = d.neighbours(cur);
      VertexId next = n[0] == prev ? n[1] : n[0];
      prev = cur;
      cur = next;
    }
    order.push_back(cur);
    if (order.size() != d.num_vertices()) throw NotALineGraph("diagram is not connected");
    return order;
  };
  line_order(start);
  auto measure = [&](const Diagram& d) {
    std::int64_t m = 0;
    const auto order = line_order(d);
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (is_pauli_vertex(d, order[i])) m += static_cast<std::int64_t>(i);
    }
    return std::make_pair(circuit_size(d), m);
  };

  std::vector<VertexId> touched;
  Diagram d = h_euler_expand(start, &touched);
  if (!touched.empty() && trace) {
    ProofStep s;
    s.kind = StepKind::StructuralPass;
    s.name = std::string(pass_name(PassKind::HEulerExpand));
    s.affected = touched;
    trace->record(std::move(s), d);
  }
  d = traced_fixpoint(d, trace);
  for (bool changed = true; changed;) {
    changed = false;
    const auto order = line_order(d);
    const auto current = measure(d);
    for (std::size_t i = 2; i + 1 < order.size() && !changed; ++i) {
      const VertexId v = order[i], pred = order[i - 1];
      if (!is_pauli_vertex(d, v) || d.type(pred) == d.type(v)) continue;
      std::vector<VertexId> hit;
      Diagram next = pi_copy(d, v, pred, &hit);
      if (measure(structural_fixpoint(next)) >= current) continue;
      if (trace) {
        ProofStep s;
        s.kind = StepKind::StructuralPass;
        s.name = std::string(pass_name(PassKind::PiCopy));
        s.args = {v, pred};
        s.affected = hit;
        trace->record(std::move(s), next);
      }
      d = traced_fixpoint(next, trace);
      changed = true;
    }
  }
  return d;
}

OptimiseResult optimise(const Circuit& c, const OptimiserConfig& cfg, const Ruleset& rules) {
  if (cfg.max_global_iters == 0 || cfg.step_budget == 0) {
    throw std::invalid_argument("optimiser budgets must be positive");
  }
  c.validate();
  const auto t0 = std::chrono::steady_clock::now();
  OptimiseResult res;
  const Diagram start = translate(c);
  res.trace = ProofTrace(start);
  res.stats.input_size = circuit_size(start);
  res.stats.simple_size = circuit_size(simple_form(start));

  Run run(rules, cfg, start, &res.trace);
  if (cfg.verify_each_step) run.set_reference(interpret(start));
  run.init();
  while (res.stats.iterations < cfg.max_global_iters) {
    ++res.stats.iterations;
    if (!run.iterate() || run.budget_exceeded()) break;
  }
  res.diagram = canonicalise_blocks(run.diagram(), cfg.semantic_fallback, &res.trace);
  res.circuit = extract_circuit(res.diagram, find_path_cover(res.diagram));

  res.stats.output_size = circuit_size(res.diagram);
  res.stats.rewrites = res.trace.count(StepKind::AxiomaticRewrite);
  res.stats.trace_steps = res.trace.size();
  res.stats.budget_exceeded = run.budget_exceeded();
  res.stats.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace zxcliff
