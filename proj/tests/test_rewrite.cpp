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

#include "test_util.hpp"
#include "zxcliff/errors.hpp"
#include "zxcliff/flow.hpp"
#include "zxcliff/normal_forms.hpp"
#include "zxcliff/optimiser.hpp"
#include "zxcliff/passes.hpp"
#include "zxcliff/rewrite.hpp"
#include "zxcliff/ruleset.hpp"

namespace zxcliff {
namespace {

Gate g1(GateType t, std::size_t w = 0) { return Gate::single(t, w); }

Rule z_pi_rule() {
  Diagram d = line_diagram({VertexKind::z(Phase::half())});
  return make_rule("ZPi", d, d);
}

Rule identity_rule() {
  return make_rule("Ident", line_diagram({VertexKind::z()}), Diagram::identity());
}

Rule fuse_quarters_rule() {
  return make_rule("Fuse11",
                   line_diagram({VertexKind::z(Phase::quarter()), VertexKind::z(Phase::quarter())}),
                   line_diagram({VertexKind::z(Phase::half())}));
}

std::vector<VertexId> images(const Match& m) {
  std::vector<VertexId> out;
  for (const auto& [from, to] : m.vertex_map) out.push_back(to);
  return out;
}

TEST(RewriteTest, TwoCandidatesTwoMatches) {
  Diagram d = translate(Circuit{1, {g1(GateType::Z), g1(GateType::Z)}});
  auto ms = find_matches(z_pi_rule(), d);
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_LT(images(ms[0]), images(ms[1]));
}

TEST(RewriteTest, MayMatchFiltersByProfile) {
  Rule fuse = fuse_quarters_rule();
  Diagram one = translate(Circuit{1, {g1(GateType::S)}});
  Diagram two = translate(Circuit{1, {g1(GateType::S), g1(GateType::S)}});
  EXPECT_FALSE(may_match(fuse, kind_degree_profile(one)));
  EXPECT_TRUE(find_matches(fuse, one).empty());
  EXPECT_TRUE(may_match(fuse, kind_degree_profile(two)));
  Rule bare{"Bare", fuse.lhs, fuse.rhs, nullptr};
  EXPECT_TRUE(may_match(bare, kind_degree_profile(two)));
  EXPECT_FALSE(may_match(bare, kind_degree_profile(one)));
}

TEST(RewriteTest, MatchesAreDeterministic) {
  Diagram d = simple_form(translate(random_clifford_circuit(2, 20, 3)));
  for (const Rule& r : default_ruleset().always) {
    auto a = find_matches(r, d);
    EXPECT_EQ(a, find_matches(r, d));
  }
}

TEST(RewriteTest, GreenPiCxMatchesPauliBeforeControl) {
  const Rule& r = default_ruleset().library.at("GreenPiCx");
  Diagram d = translate(Circuit{2, {g1(GateType::Z), Gate::cnot(0, 1)}});
  EXPECT_GE(find_matches(r, d).size(), 1u);
}

TEST(RewriteTest, EmptyTargetHasNoMatches) {
  for (const Rule* r : default_ruleset().all()) {
    if (r->lhs.num_interior() > 0) {
      EXPECT_TRUE(find_matches(*r, Diagram{}).empty()) << r->name;
    }
  }
}

TEST(RewriteTest, IdentityRemovalByRule) {
  Diagram d = line_diagram({VertexKind::x(Phase::quarter()), VertexKind::z(),
                            VertexKind::x(Phase::quarter())});
  auto ms = find_matches(identity_rule(), d);
  ASSERT_EQ(ms.size(), 1u);
  Diagram out = apply_match(d, identity_rule(), ms[0]);
  EXPECT_EQ(out.num_interior(), 2u);
  EXPECT_TRUE(out.is_valid());
  EXPECT_TRUE(test::same_map(d, out));
}

TEST(RewriteTest, BareWireResult) {
  Diagram d = line_diagram({VertexKind::z()});
  auto ms = find_matches(identity_rule(), d);
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_TRUE(iso_equal(apply_match(d, identity_rule(), ms[0]), Diagram::identity()));
}

TEST(RewriteTest, HopfOnCnotPair) {
  Diagram d = fuse_spiders(translate(Circuit{2, {Gate::cnot(0, 1), Gate::cnot(0, 1)}}));
  Diagram out = structural_fixpoint(hopf_reduce(d));
  EXPECT_TRUE(iso_equal(out, Diagram::identity(2)));
}

TEST(RewriteTest, BoundariesArePreserved) {
  for (const Circuit& c : test::circuit_sample(10, 3, 15, 8)) {
    Diagram d = simple_form(translate(c));
    for (const Rule* r : default_ruleset().all()) {
      auto ms = find_matches(*r, d);
      if (ms.empty()) continue;
      Diagram out = apply_match(d, *r, ms.front());
      EXPECT_EQ(out.signature(), d.signature());
      EXPECT_TRUE(out.is_valid());
    }
  }
}

TEST(RewriteTest, StaleMatchIsRejected) {
  Diagram d = translate(Circuit{1, {g1(GateType::Z), g1(GateType::Z)}});
  Match m = find_matches(z_pi_rule(), d).front();
  Diagram other = translate(Circuit{1, {g1(GateType::S)}});
  EXPECT_THROW(apply_match(other, z_pi_rule(), m), StaleMatchError);
}

TEST(RewriteTest, RewriteFirstUsesListOrder) {
  Diagram d = line_diagram({VertexKind::z(Phase::quarter()), VertexKind::z(Phase::quarter())});
  ProofTrace trace(d);
  auto out = rewrite_first({identity_rule(), fuse_quarters_rule()}, d, &trace);
  ASSERT_TRUE(out.has_value());
  ASSERT_EQ(trace.size(), 1u);
  EXPECT_EQ(trace.steps()[0].name, "Fuse11");
  EXPECT_FALSE(rewrite_first({identity_rule()}, d, nullptr).has_value());
}

TEST(RewriteTest, AlwaysRulesFixCC1Members) {
  for (const CC1Entry& e : cc1_table().entries()) {
    EXPECT_FALSE(rewrite_first(default_ruleset().always, e.diagram, nullptr).has_value())
        << e.name;
  }
}

TEST(RewriteTest, RewriteMetric) {
  Metric count = [](const Diagram& x) { return static_cast<std::int64_t>(x.num_vertices()); };
  Diagram d = line_diagram({VertexKind::z(), VertexKind::x(Phase::half())});
  auto out = rewrite_metric({identity_rule()}, d, count, nullptr);
  ASSERT_TRUE(out.has_value());
  EXPECT_EQ(out->num_interior(), 1u);

  Metric inverted = [&](const Diagram& x) { return -count(x); };
  EXPECT_FALSE(rewrite_metric({identity_rule()}, d, inverted, nullptr).has_value());
}

TEST(RewriteTest, TargetedPauliCommute) {
  const Rule& r = default_ruleset().library.at("GreenPiCommute:1");
  VertexId anchor = 0;
  for (VertexId v : r.lhs.interior_ids()) {
    if (is_pauli_vertex(r.lhs, v)) anchor = v;
  }
  Diagram d = line_diagram({VertexKind::x(Phase::quarter()), VertexKind::z(Phase::half())});
  TargetFn first_pauli = [](const Diagram& x) -> std::optional<VertexId> {
    PathCover pc = find_path_cover(x);
    for (VertexId v : pc.paths[0]) {
      if (is_pauli_vertex(x, v)) return v;
    }
    return std::nullopt;
  };
  ProofTrace trace(d);
  auto out = rewrite_targeted(r, anchor, d, first_pauli, &trace);
  ASSERT_TRUE(out.has_value());
  EXPECT_EQ(trace.size(), 1u);
  PathCover pc = find_path_cover(*out);
  EXPECT_TRUE(is_pauli_vertex(*out, pc.paths[0][1]));
  EXPECT_TRUE(test::same_map(d, *out));

  TargetFn none = [](const Diagram&) { return std::nullopt; };
  EXPECT_FALSE(rewrite_targeted(r, anchor, d, none, &trace).has_value());
  TargetFn wrong = [](const Diagram& x) { return std::optional<VertexId>(x.interior_ids()[0]); };
  EXPECT_FALSE(rewrite_targeted(r, anchor, d, wrong, &trace).has_value());
  EXPECT_EQ(trace.size(), 1u);
  EXPECT_THROW(rewrite_targeted(r, r.lhs.inputs()[0], d, first_pauli, nullptr), TargetKindError);
}

TEST(RewriteTest, ReduceChainOfIdentities) {
  Diagram d = line_diagram(std::vector<VertexKind>(5, VertexKind::z()));
  Strategy s = [](const Diagram& x, ProofTrace* t) { return rewrite_first({identity_rule()}, x, t); };
  ProofTrace trace(d);
  ReduceResult r = reduce(s, d, &trace);
  EXPECT_TRUE(iso_equal(r.diagram, Diagram::identity()));
  EXPECT_EQ(r.steps, 5u);
  EXPECT_TRUE(r.fixpoint);
  ReduceResult again = reduce(s, r.diagram, nullptr);
  EXPECT_EQ(again.steps, 0u);
  EXPECT_TRUE(again.fixpoint);
  ReduceResult capped = reduce(s, d, nullptr, 2);
  EXPECT_EQ(capped.steps, 2u);
  EXPECT_FALSE(capped.fixpoint);
}

TEST(RewriteTest, ReduceFourSGates) {
  Diagram d = translate(Circuit{1, std::vector<Gate>(4, g1(GateType::S))});
  Strategy s = [](const Diagram& x, ProofTrace* t) -> std::optional<Diagram> {
    if (auto next = rewrite_first(default_ruleset().always, x, t)) return next;
    Diagram tidy = traced_fixpoint(x, t);
    if (tidy == x) return std::nullopt;
    return tidy;
  };
  ProofTrace trace(d);
  ReduceResult r = reduce(s, d, &trace);
  EXPECT_TRUE(iso_equal(r.diagram, Diagram::identity()));
  EXPECT_TRUE(iso_equal(replay(trace, default_ruleset().library), r.diagram));
}

TEST(ReplayTest, EmptyTraceGivesInitial) {
  Diagram d = translate(random_clifford_circuit(2, 10, 1));
  ProofTrace trace(d);
  EXPECT_EQ(replay(trace, {}), d);
}

TEST(ReplayTest, OptimiserTraceReplays) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    OptimiseResult res = optimise(random_clifford_circuit(2, 20, s));
    Diagram again = replay(res.trace, default_ruleset().library);
    EXPECT_TRUE(iso_equal(again, res.trace.final_diagram()));
    EXPECT_TRUE(iso_equal(again, res.diagram));
  }
}

TEST(ReplayTest, RenamedRuleDiverges) {
  OptimiseResult res = optimise(random_clifford_circuit(2, 20, 4));
  nlohmann::json j = res.trace.to_json();
  bool renamed = false;
  for (auto& step : j["steps"]) {
    if (step["kind"] == std::string(to_string(StepKind::AxiomaticRewrite))) {
      step["name"] = "NoSuchRule";
      renamed = true;
      break;
    }
  }
  ASSERT_TRUE(renamed);
  EXPECT_THROW(replay(ProofTrace::from_json(j), default_ruleset().library), ReplayDivergence);
}

TEST(ReplayTest, TamperedPassDiverges) {
  Diagram d = translate(Circuit{1, std::vector<Gate>(4, g1(GateType::S))});
  ProofTrace trace(d);
  traced_fixpoint(d, &trace);
  ASSERT_GT(trace.size(), 0u);
  nlohmann::json j = trace.to_json();
  j["steps"][0]["affected"].push_back(999);
  EXPECT_THROW(replay(ProofTrace::from_json(j), {}), ReplayDivergence);
}

TEST(RewriteProperty, EveryApplicationIsSound) {
  for (const Circuit& c : test::circuit_sample(12, 3, 20, 77)) {
    Diagram d = simple_form(translate(c));
    ScalarFreeMatrix before = interpret(d);
    for (const Rule* r : default_ruleset().all()) {
      for (const Match& m : find_matches(*r, d)) {
        Diagram out = apply_match(d, *r, m);
        EXPECT_TRUE(scalar_free_equal(before, interpret(out))) << r->name;
      }
    }
  }
}

}  // namespace
}  // namespace zxcliff
