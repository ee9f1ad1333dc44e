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


#include <gtest/gtest.h>

#include <stdexcept>

#include "test_util.hpp"
#include "zxcliff/errors.hpp"
#include "zxcliff/flow.hpp"
#include "zxcliff/normal_forms.hpp"
#include "zxcliff/optimiser.hpp"
#include "zxcliff/passes.hpp"
#include "zxcliff/ruleset.hpp"

namespace zxcliff {
namespace {

Gate g1(GateType t, std::size_t w = 0) { return Gate::single(t, w); }

OptimiserConfig checked(bool fallback) {
  OptimiserConfig cfg;
  cfg.verify_each_step = true;
  cfg.semantic_fallback = fallback;
  return cfg;
}

void expect_same(const Circuit& c, const OptimiseResult& r) {
  ScalarFreeMatrix want = gate_matrix_product(c);
  EXPECT_TRUE(scalar_free_equal(want, gate_matrix_product(r.circuit))) << serialize_circuit(c);
  EXPECT_TRUE(scalar_free_equal(want, interpret(r.diagram))) << serialize_circuit(c);
}

TEST(OptimiserTest, FourSGatesVanish) {
  Circuit c{1, std::vector<Gate>(4, g1(GateType::S))};
  OptimiseResult r = optimise(c, checked(true));
  EXPECT_TRUE(r.circuit.gates.empty());
  EXPECT_EQ(r.stats.output_size, 0u);
  EXPECT_EQ(r.stats.input_size, 4u);
}

TEST(OptimiserTest, HadamardSquaredIsAWire) {
  OptimiseResult r = optimise(Circuit{1, {g1(GateType::H), g1(GateType::H)}}, checked(false));
  EXPECT_TRUE(iso_equal(r.diagram, Diagram::identity()));
  EXPECT_TRUE(r.circuit.gates.empty());
}

TEST(OptimiserTest, OneQubitOutputsAreCC1Members) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    Circuit c = random_clifford_circuit(1, 1 + s % 25, s);
    for (bool fallback : {true, false}) {
      OptimiseResult r = optimise(c, checked(fallback));
      EXPECT_TRUE(cc1_table().contains(r.diagram)) << serialize_circuit(c);
      expect_same(c, r);
    }
  }
}

TEST(OptimiserTest, StatsAreConsistent) {
  Circuit c = random_clifford_circuit(3, 20, 5);
  OptimiseResult r = optimise(c);
  EXPECT_EQ(r.stats.input_size, circuit_size(translate(c)));
  EXPECT_EQ(r.stats.simple_size, circuit_size(simple_form(translate(c))));
  EXPECT_EQ(r.stats.output_size, circuit_size(r.diagram));
  EXPECT_EQ(r.stats.trace_steps, r.trace.size());
  EXPECT_EQ(r.stats.rewrites, r.trace.count(StepKind::AxiomaticRewrite));
  EXPECT_FALSE(r.stats.budget_exceeded);
  EXPECT_TRUE(is_circuit_like(r.diagram));
}

TEST(OptimiserTest, ZeroBudgetsAreRejected) {
  OptimiserConfig cfg;
  cfg.max_global_iters = 0;
  EXPECT_THROW(optimise(Circuit{1, {}}, cfg), std::invalid_argument);
  cfg = {};
  cfg.step_budget = 0;
  EXPECT_THROW(optimise(Circuit{1, {}}, cfg), std::invalid_argument);
}

TEST(OptimiserTest, TightBudgetIsReported) {
  OptimiserConfig cfg;
  cfg.step_budget = 1;
  Circuit c = random_clifford_circuit(2, 30, 9);
  OptimiseResult r = optimise(c, cfg);
  EXPECT_TRUE(r.stats.budget_exceeded);
  expect_same(c, r);
}

// The two-qubit reductions used for closure of the two-qubit family.
struct TwoQubitCase {
  const char* name;
  Circuit lhs;
};

std::vector<TwoQubitCase> two_qubit_cases() {
  return {
      {"quarter X between CNOTs",
       {2, {Gate::cnot(0, 1), g1(GateType::V, 0), Gate::cnot(0, 1)}}},
      {"quarter X and quarter Z between CNOTs",
       {2, {Gate::cnot(0, 1), g1(GateType::V, 0), g1(GateType::S, 1), Gate::cnot(0, 1)}}},
      {"CNOT swap CNOT", {2, {Gate::cnot(0, 1), Gate::swap(0, 1), Gate::cnot(0, 1)}}},
      {"TONC", {2, {Gate::tonc(0, 1)}}},
  };
}

TEST(OptimiserTest, TwoQubitCasesLandInCC2) {
  for (const TwoQubitCase& t : two_qubit_cases()) {
    OptimiseResult r = optimise(t.lhs, checked(true));
    EXPECT_TRUE(cc2_contains(r.diagram)) << t.name;
    expect_same(t.lhs, r);
  }
}

TEST(OptimiserTest, TwoQubitCasesNeverGrowWithoutFallback) {
  for (const TwoQubitCase& t : two_qubit_cases()) {
    OptimiseResult r = optimise(t.lhs, checked(false));
    EXPECT_LE(r.stats.output_size, r.stats.simple_size) << t.name;
    expect_same(t.lhs, r);
  }
}

TEST(OptimiserTest, SameDirectionCnotsWithAPauliCollapse) {
  Circuit c{2, {Gate::cnot(0, 1), g1(GateType::Z, 0), Gate::cnot(0, 1)}};
  OptimiseResult r = optimise(c, checked(false));
  EXPECT_EQ(r.stats.output_size, 1u);
  EXPECT_TRUE(cc2_contains(r.diagram));
}

TEST(OptimiserTest, FallbackOffNeverGrows) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    Circuit c = random_clifford_circuit(2 + s % 2, 20, 1000 + s);
    OptimiseResult r = optimise(c, checked(false));
    EXPECT_LE(r.stats.output_size, r.stats.simple_size) << serialize_circuit(c);
    expect_same(c, r);
  }
}

TEST(OptimiserTest, FallbackOffUsesNoWholeDiagramReplacement) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    OptimiseResult r = optimise(random_clifford_circuit(2, 20, s), checked(false));
    for (const ProofStep& step : r.trace.steps()) {
      EXPECT_NE(step.name.rfind("cc2:", 0), 0u) << step.name;
    }
  }
}

TEST(OptimiserTest, WidthTwoWithFallbackIsCC2) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    Circuit c = random_clifford_circuit(2, 20, s);
    OptimiseResult r = optimise(c, checked(true));
    EXPECT_TRUE(cc2_contains(r.diagram)) << serialize_circuit(c);
    expect_same(c, r);
  }
}

TEST(OptimiserTest, WiderCircuitsKeepSemantics) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Circuit c = random_clifford_circuit(3 + s % 2, 25, 500 + s);
    OptimiseResult r = optimise(c, checked(true));
    expect_same(c, r);
    EXPECT_LE(r.stats.output_size, r.stats.simple_size);
  }
}

TEST(OptimiserTest, Deterministic) {
  Circuit c = random_clifford_circuit(3, 20, 77);
  OptimiseResult a = optimise(c), b = optimise(c);
  EXPECT_EQ(a.circuit, b.circuit);
  EXPECT_EQ(a.diagram, b.diagram);
  EXPECT_EQ(a.trace.dump(), b.trace.dump());
}

TEST(PauliMetricTest, PauliVertices) {
  Diagram d = line_diagram({VertexKind::z(Phase::half()), VertexKind::x(Phase::quarter())});
  auto ids = d.interior_ids();
  EXPECT_TRUE(is_pauli_vertex(d, ids[0]));
  EXPECT_FALSE(is_pauli_vertex(d, ids[1]));
  EXPECT_FALSE(is_pauli_vertex(d, d.inputs()[0]));
}

TEST(PauliMetricTest, SumsPathPositions) {
  Diagram early = line_diagram({VertexKind::z(Phase::half()), VertexKind::x(Phase::quarter())});
  Diagram late = line_diagram({VertexKind::x(Phase::quarter()), VertexKind::z(Phase::half())});
  EXPECT_EQ(pauli_metric(early), 1);
  EXPECT_EQ(pauli_metric(late), 2);
  EXPECT_EQ(pauli_metric(Diagram::identity()), 0);
}

TEST(PauliMetricTest, OffPathVerticesDominate) {
  Diagram d = line_diagram({VertexKind::z(Phase::quarter())});
  VertexId x = d.add_vertex(VertexKind::x(Phase::quarter()));
  d.add_edge(d.interior_ids()[0], x);
  const std::int64_t n = static_cast<std::int64_t>(d.num_vertices());
  EXPECT_GE(pauli_metric(d), (n + 1) * (n + 1));
}

// Two ways to push a Pauli through a CNOT: one keeps a circuit, the other
// leaves a vertex with no path through it.
TEST(NegativeControlTest, MetricAvoidsTheStrandingMatch) {
  const Rule& r = default_ruleset().library.at("GreenPiCx");
  Circuit c{2, {Gate::cnot(1, 0), Gate::cnot(0, 1), g1(GateType::Z, 0)}};
  Diagram d = translate(c);
  auto ms = find_matches(r, d);
  ASSERT_GE(ms.size(), 2u);
  int stranded = 0, kept = 0;
  for (const Match& m : ms) {
    Diagram out = apply_match(d, r, m);
    EXPECT_TRUE(test::same_map(d, out));
    if (try_path_cover(out)) {
      ++kept;
    } else {
      ++stranded;
      EXPECT_FALSE(is_circuit_like(out));
      EXPECT_GT(pauli_metric(out), pauli_metric(d));
    }
  }
  EXPECT_GE(stranded, 1);
  EXPECT_GE(kept, 1);

  auto chosen = rewrite_metric({r}, d, &pauli_metric, nullptr);
  ASSERT_TRUE(chosen.has_value());
  EXPECT_TRUE(try_path_cover(*chosen).has_value());
  EXPECT_LT(pauli_metric(*chosen), pauli_metric(d));
}

TEST(LineTest, PauliPushedToTheInput) {
  Diagram d = line_diagram({VertexKind::x(Phase::quarter()), VertexKind::z(Phase::half())});
  ProofTrace trace(d);
  Diagram out = line_to_pauli_standard(d, &trace);
  EXPECT_TRUE(test::same_map(d, out));
  PathCover pc = find_path_cover(out);
  EXPECT_TRUE(is_pauli_vertex(out, pc.paths[0][1]));
  EXPECT_FALSE(is_pauli_vertex(out, pc.paths[0][2]));
  EXPECT_TRUE(iso_equal(replay(trace, default_ruleset().library), out));
}

TEST(LineTest, StandardLineIsUnchanged) {
  Diagram d = line_diagram({VertexKind::z(Phase::half()), VertexKind::x(Phase::quarter())});
  ProofTrace trace(d);
  EXPECT_TRUE(iso_equal(line_to_pauli_standard(d, &trace), d));
  EXPECT_EQ(trace.size(), 0u);
}

TEST(LineTest, RejectsNonLines) {
  Diagram d = translate(Circuit{2, {Gate::cnot(0, 1)}});
  EXPECT_THROW(line_to_pauli_standard(d, nullptr), NotALineGraph);
}

TEST(LineTest, AlternatingChainReachesStandardForm) {
  std::vector<VertexKind> chain;
  for (int i = 0; i < 6; ++i) {
    Phase p(i % 3 == 0 ? 3 : 1);
    chain.push_back(i % 2 ? VertexKind::x(p) : VertexKind::z(p));
  }
  Diagram d = line_diagram(chain);
  Diagram out = line_to_pauli_standard(d, nullptr);
  EXPECT_TRUE(test::same_map(d, out));
  PathCover pc = find_path_cover(out);
  const auto& path = pc.paths[0];
  std::size_t paulis = 0;
  bool seen_other = false;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    if (is_pauli_vertex(out, path[i])) {
      ++paulis;
      EXPECT_FALSE(seen_other) << "Pauli after a non-Pauli";
    } else {
      seen_other = true;
    }
    if (i > 1) {
      EXPECT_NE(out.type(path[i]), out.type(path[i - 1]));
    }
  }
  EXPECT_LE(paulis, 2u);

  Circuit c{1, {g1(GateType::S), g1(GateType::V), g1(GateType::S), g1(GateType::V),
                g1(GateType::S), g1(GateType::V)}};
  OptimiseResult r = optimise(c);
  std::size_t non_pauli = 0;
  for (VertexId v : r.diagram.interior_ids()) non_pauli += !is_pauli_vertex(r.diagram, v);
  EXPECT_LE(non_pauli, 3u);
}

TEST(CanonicaliseTest, RunIsReplacedByItsForm) {
  Diagram d = line_diagram({VertexKind::z(Phase::quarter()), VertexKind::x(Phase::quarter()),
                            VertexKind::z(Phase::quarter()), VertexKind::x(Phase::half())});
  ProofTrace trace(d);
  Diagram out = canonicalise_blocks(d, false, &trace);
  EXPECT_TRUE(cc1_table().contains(out));
  EXPECT_TRUE(test::same_map(d, out));
  EXPECT_EQ(trace.count(StepKind::SemanticNormalisation), 1u);
  EXPECT_TRUE(iso_equal(replay(trace, {}), out));
}

TEST(CanonicaliseTest, HadamardRunBecomesEulerForm) {
  Diagram d = simple_form(translate(Circuit{1, {g1(GateType::H)}}));
  Diagram out = canonicalise_blocks(d, false, nullptr);
  EXPECT_EQ(out.num_interior(), 3u);
  EXPECT_TRUE(cc1_table().contains(out));
}

TEST(CanonicaliseTest, MembersAreLeftAlone) {
  for (const CC1Entry& e : cc1_table().entries()) {
    ProofTrace trace(e.diagram);
    EXPECT_TRUE(iso_equal(canonicalise_blocks(e.diagram, true, &trace), e.diagram)) << e.name;
    EXPECT_EQ(trace.size(), 0u) << e.name;
  }
}

TEST(CanonicaliseTest, WidthTwoFallback) {
  Diagram d = simple_form(translate(random_clifford_circuit(2, 20, 3)));
  ProofTrace trace(d);
  Diagram out = canonicalise_blocks(d, true, &trace);
  EXPECT_TRUE(cc2_contains(out));
  EXPECT_TRUE(test::same_map(d, out));
  EXPECT_TRUE(iso_equal(replay(trace, {}), out));
}

TEST(CanonicaliseTest, RunsBetweenCnots) {
  Circuit c{2, {g1(GateType::S, 0), g1(GateType::S, 0), g1(GateType::V, 0), Gate::cnot(0, 1),
                g1(GateType::H, 1), g1(GateType::H, 1), g1(GateType::V, 1)}};
  Diagram d = simple_form(translate(c));
  Diagram out = canonicalise_blocks(d, false, nullptr);
  EXPECT_TRUE(test::same_map(d, out));
  EXPECT_TRUE(is_circuit_like(out));
  EXPECT_LE(circuit_size(out), circuit_size(d));
}

}  // namespace
}  // namespace zxcliff
