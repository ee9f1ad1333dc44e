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

#include <algorithm>
#include <random>

#include "test_util.hpp"
#include "zxcliff/errors.hpp"
#include "zxcliff/normal_forms.hpp"
#include "zxcliff/passes.hpp"

namespace zxcliff {
namespace {

Gate g1(GateType t) { return Gate::single(t, 0); }
Diagram line(std::vector<VertexKind> k) { return line_diagram(k); }

using Fn = Diagram (*)(const Diagram&, Affected);

TEST(PassesTest, FuseAddsPhases) {
  Diagram d = fuse_spiders(line({VertexKind::z(Phase::quarter()), VertexKind::z(Phase::quarter())}));
  ASSERT_EQ(d.num_interior(), 1u);
  EXPECT_EQ(d.kind(d.interior_ids()[0]), VertexKind::z(Phase::half()));
  Diagram mixed = line({VertexKind::z(), VertexKind::x()});
  EXPECT_EQ(fuse_spiders(mixed), mixed);
}

TEST(PassesTest, FourSGatesVanish) {
  Circuit c{1, std::vector<Gate>(4, g1(GateType::S))};
  Diagram fused = fuse_spiders(translate(c));
  ASSERT_EQ(fused.num_interior(), 1u);
  EXPECT_EQ(fused.kind(fused.interior_ids()[0]), VertexKind::z());
  EXPECT_EQ(remove_identities(fused).num_interior(), 0u);
}

TEST(PassesTest, RemoveIdentity) {
  Diagram d = remove_identities(line({VertexKind::z()}));
  EXPECT_TRUE(iso_equal(d, Diagram::identity()));
  Diagram keep = line({VertexKind::z(Phase::quarter())});
  EXPECT_EQ(remove_identities(keep), keep);
}

TEST(PassesTest, RemoveSelfLoopKeepsPhase) {
  Diagram d = line({VertexKind::z(Phase::quarter())});
  VertexId v = d.interior_ids()[0];
  d.add_edge(v, v);
  Diagram out = remove_self_loops(d);
  EXPECT_EQ(out.self_loops(v), 0u);
  EXPECT_EQ(out.phase(v), Phase::quarter());
  EXPECT_TRUE(test::same_map(d, out));
}

TEST(PassesTest, HopfRemovesPairs) {
  for (std::size_t edges : {2u, 3u}) {
    Diagram d = line({VertexKind::z(), VertexKind::x()});
    auto ids = d.interior_ids();
    for (std::size_t i = 1; i < edges; ++i) d.add_edge(ids[0], ids[1]);
    Diagram out = hopf_reduce(d);
    EXPECT_EQ(out.edge_multiplicity(ids[0], ids[1]), edges % 2);
    EXPECT_TRUE(test::same_map(d, out));
  }
}

TEST(PassesTest, HEulerExpand) {
  Diagram h = translate(Circuit{1, {g1(GateType::H)}});
  Diagram e = h_euler_expand(h);
  EXPECT_EQ(e.num_interior(), 3u);
  EXPECT_TRUE(test::same_map(h, e));
  Diagram plain = translate(Circuit{1, {g1(GateType::S)}});
  EXPECT_EQ(h_euler_expand(plain), plain);
  Diagram hh = translate(Circuit{1, {g1(GateType::H), g1(GateType::H)}});
  EXPECT_TRUE(scalar_free_equal(interpret(simple_form(hh)), ScalarFreeMatrix::identity(1)));
}

TEST(PassesTest, ColourChange) {
  Diagram d = line({VertexKind::x(Phase::quarter())});
  VertexId v = d.interior_ids()[0];
  Diagram c = colour_change_vertex(d, v);
  EXPECT_EQ(c.kind(v), VertexKind::z(Phase::quarter()));
  EXPECT_EQ(c.num_interior(), 3u);
  EXPECT_TRUE(test::same_map(d, c));
  EXPECT_TRUE(iso_equal(colour_change_vertex(c, v), d));

  Diagram lone;
  VertexId s = lone.add_vertex(VertexKind::z(Phase::half()));
  EXPECT_EQ(colour_change_vertex(lone, s).kind(s), VertexKind::x(Phase::half()));

  Diagram h = translate(Circuit{1, {g1(GateType::H)}});
  EXPECT_THROW(colour_change_vertex(h, h.interior_ids()[0]), TargetKindError);
}

TEST(PassesTest, PiCopyThroughCnotControl) {
  Diagram d = simple_form(translate(Circuit{2, {Gate::single(GateType::X, 0), Gate::cnot(0, 1)}}));
  VertexId pauli = d.neighbours(d.inputs()[0]).front();
  VertexId z = 0;
  for (VertexId n : d.neighbours(pauli)) {
    if (!d.kind(n).is_boundary()) z = n;
  }
  std::vector<VertexId> touched;
  Diagram out = pi_copy(d, pauli, z, &touched);
  EXPECT_FALSE(touched.empty());
  EXPECT_TRUE(test::same_map(d, out));
  EXPECT_EQ(run_pass(PassKind::PiCopy, d, {pauli, z}), out);
}

TEST(PassesTest, PassNamesRoundTrip) {
  for (PassKind k : {PassKind::FuseSpiders, PassKind::RemoveIdentities, PassKind::RemoveSelfLoops,
                     PassKind::HopfReduce, PassKind::HEulerExpand, PassKind::ColourChangeVertex,
                     PassKind::PiCopy}) {
    EXPECT_EQ(pass_from_name(pass_name(k)), k);
  }
  EXPECT_FALSE(pass_from_name("nope").has_value());
}

TEST(PassesTest, SimpleFormOfCnotPair) {
  Circuit c{2, {Gate::cnot(0, 1), Gate::cnot(0, 1)}};
  Diagram s = simple_form(translate(c));
  EXPECT_TRUE(iso_equal(s, Diagram::identity(2)));
}

TEST(PassesTest, CC1MembersAreSimple) {
  for (const CC1Entry& e : cc1_table().entries()) {
    EXPECT_TRUE(is_simple(e.diagram)) << e.name;
    EXPECT_TRUE(iso_equal(simple_form(e.diagram), e.diagram)) << e.name;
  }
}

TEST(PassesProperty, PassesPreserveSemantics) {
  std::mt19937_64 rng(31);
  constexpr Fn kAll[] = {&fuse_spiders, &remove_identities, &remove_self_loops, &hopf_reduce,
                         &h_euler_expand};
  for (int i = 0; i < 60; ++i) {
    Diagram d = test::random_graph(1 + i % 3, 4, 3, rng);
    for (Fn f : kAll) {
      Diagram out = f(d, nullptr);
      EXPECT_TRUE(out.is_valid());
      EXPECT_TRUE(test::same_map(d, out));
    }
    for (VertexId v : d.interior_ids()) {
      EXPECT_TRUE(test::same_map(d, colour_change_vertex(d, v)));
    }
  }
}

TEST(PassesProperty, SimpleFormIsSimpleAndIdempotent) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 60; ++i) {
    Diagram d = test::random_graph(1 + i % 3, 5, 3, rng);
    Diagram s = simple_form(d);
    EXPECT_TRUE(is_simple(s));
    EXPECT_EQ(simple_form(s), s);
    EXPECT_TRUE(test::same_map(d, s));
  }
  for (const Circuit& c : test::circuit_sample(40, 4, 30, 6)) {
    Diagram s = simple_form(translate(c));
    EXPECT_TRUE(is_simple(s));
    EXPECT_TRUE(scalar_free_equal(interpret(s), gate_matrix_product(c)));
  }
}

TEST(PassesProperty, FixpointIsConfluentUnderShuffledOrder) {
  std::mt19937_64 rng(51);
  std::vector<Fn> order = {&fuse_spiders, &remove_self_loops, &hopf_reduce, &remove_identities};
  for (int i = 0; i < 60; ++i) {
    Diagram d = test::random_graph(1 + i % 3, 5, 2, rng);
    Diagram reference = structural_fixpoint(d);
    std::shuffle(order.begin(), order.end(), rng);
    Diagram cur = d;
    for (bool changed = true; changed;) {
      changed = false;
      for (Fn f : order) {
        Diagram next = f(cur, nullptr);
        if (!(next == cur)) {
          changed = true;
          cur = std::move(next);
        }
      }
    }
    EXPECT_TRUE(iso_equal(cur, reference)) << "seed index " << i;
  }
}

}  // namespace
}  // namespace zxcliff
