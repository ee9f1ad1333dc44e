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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "zxcliff/bench.hpp"
#include "zxcliff/errors.hpp"
#include "zxcliff/flow.hpp"
#include "zxcliff/normal_forms.hpp"
#include "zxcliff/optimiser.hpp"
#include "zxcliff/passes.hpp"
#include "zxcliff/ruleset.hpp"

namespace zxcliff {
namespace {

constexpr double kTol = 1e-9;

// Wall-clock limits in seconds.
constexpr double kLimitSoundness = 10;
constexpr double kLimitCC1 = 5;
constexpr double kLimitCC2 = 60;
constexpr double kLimitOneQubit = 300;
constexpr double kLimitTwoQubit = 300;
constexpr double kLimitTable = 600;
constexpr double kLimitExtraction = 120;

constexpr std::size_t kWords = 15625;
constexpr std::size_t kTwoQubitRuns = 500;
constexpr std::size_t kTableCount = 50;
constexpr std::size_t kExtractionRuns = 200;

// Table bounds: mean output size at width 1, mean ratio at widths 2 and 3.
constexpr double kWidth1MeanOut = 3.0;
constexpr double kWidth2Ratio = 0.45;
constexpr double kWidth3Ratio = 0.55;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void report(int n, const char* title, double limit, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& ex) {
    o.fail(std::string("exception: ") + ex.what());
  }
  const double secs = seconds_since(t0);
  if (limit > 0 && secs > limit) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "over the %.0f s limit", limit);
    o.fail(buf);
  }
  if (!o.pass) ++failures;
  std::printf("%s %d %-34s %7.2f s  %s\n", o.pass ? "PASS" : "FAIL", n, title, secs,
              o.detail.c_str());
  std::fflush(stdout);
}

bool same(const ScalarFreeMatrix& a, const ScalarFreeMatrix& b) {
  return scalar_free_equal(a, b, kTol);
}

// Every optimiser run of criteria 4-6, kept for criterion 8.
struct RunRecord {
  Circuit circuit;
  OptimiserConfig cfg;
  std::string trace;
  Diagram final_diagram;
};
std::vector<RunRecord> runs;

OptimiseResult run_and_keep(const Circuit& c, const OptimiserConfig& cfg) {
  OptimiseResult r = optimise(c, cfg);
  runs.push_back({c, cfg, r.trace.dump(), r.diagram});
  return r;
}

Diagram random_graph(std::size_t wires, std::mt19937_64& rng) {
  Diagram d;
  std::vector<VertexId> inner;
  std::vector<VertexId> ins;
  for (std::size_t w = 0; w < wires; ++w) ins.push_back(d.add_input());
  std::uniform_int_distribution<int> coin(0, 2), quarter(0, 3), count(2, 5);
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Phase p(quarter(rng));
    const int c = coin(rng);
    inner.push_back(d.add_vertex(c == 0 ? VertexKind::z(p) : VertexKind::x(p)));
  }
  std::uniform_int_distribution<std::size_t> pick(0, inner.size() - 1);
  for (std::size_t i = 1; i < inner.size(); ++i) d.add_edge(inner[i - 1], inner[i]);
  for (VertexId b : ins) d.add_edge(b, inner[pick(rng)]);
  for (std::size_t w = 0; w < wires; ++w) d.add_edge(inner[pick(rng)], d.add_output());
  for (int i = 0; i < 3; ++i) d.add_edge(inner[pick(rng)], inner[pick(rng)]);
  return d;
}

Outcome soundness() {
  Outcome o;
  const Ruleset& rs = default_ruleset();
  std::size_t checked = 0;
  for (const Rule* r : rs.all()) {
    if (!same(interpret(r->lhs), interpret(r->rhs))) o.fail("rule " + r->name);
    if (r->lhs.num_inputs() + 1 <= 3 && r->lhs.num_outputs() + 1 <= 3) {
      const Diagram wire = Diagram::identity();
      if (!same(interpret(tensor(r->lhs, wire)), interpret(tensor(r->rhs, wire))) ||
          !same(interpret(tensor(wire, r->lhs)), interpret(tensor(wire, r->rhs)))) {
        o.fail("embedded rule " + r->name);
      }
    }
    ++checked;
  }

  using Fn = Diagram (*)(const Diagram&, Affected);
  constexpr std::pair<const char*, Fn> kPasses[] = {
      {"fuse", &fuse_spiders},       {"identity", &remove_identities},
      {"anti-loop", &remove_self_loops}, {"hopf", &hopf_reduce},
      {"h-euler", &h_euler_expand}};
  std::mt19937_64 rng(1);
  std::vector<Diagram> corpus;
  for (int i = 0; i < 150; ++i) corpus.push_back(random_graph(1 + i % 3, rng));
  for (std::uint64_t s = 0; s < 50; ++s) {
    corpus.push_back(translate(random_clifford_circuit(1 + s % 3, 12, s)));
  }
  std::size_t applications = 0;
  for (const Diagram& d : corpus) {
    const ScalarFreeMatrix m = interpret(d);
    for (const auto& [name, fn] : kPasses) {
      if (!same(m, interpret(fn(d, nullptr)))) o.fail(std::string("pass ") + name);
      ++applications;
    }
    for (VertexId v : d.interior_ids()) {
      if (!d.kind(v).is_spider()) continue;
      if (!same(m, interpret(colour_change_vertex(d, v)))) o.fail("pass colour change");
      ++applications;
      if (d.degree(v) != 2 || !d.phase(v).is_pauli() || d.self_loops(v) > 0) continue;
      for (VertexId u : d.neighbours(v)) {
        if (u == v || !d.kind(u).is_spider() || d.type(u) == d.type(v)) continue;
        if (d.edge_multiplicity(u, v) != 1 || d.self_loops(u) > 0) continue;
        if (!same(m, interpret(pi_copy(d, v, u)))) o.fail("pass pi copy");
        ++applications;
      }
    }
  }
  o.detail = std::to_string(checked) + " rules, " + std::to_string(applications) +
             " pass applications" + (o.pass ? "" : "; first failure: " + o.detail);
  return o;
}

Outcome cc1() {
  Outcome o;
  const CC1Table& t = cc1_table();
  if (t.size() != 24) o.fail("table has " + std::to_string(t.size()) + " forms");
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (same(t.entries()[i].matrix, t.entries()[j].matrix)) {
        o.fail(t.entries()[i].name + " equals " + t.entries()[j].name);
      }
    }
  }
  std::string why;
  if (!cc1_minimality_check(&why)) o.fail("minimality: " + why);
  if (o.pass) o.detail = "24 forms, pairwise distinct, minimal";
  return o;
}

Outcome cc2() {
  Outcome o;
  const CC2Family& f = cc2_family();
  std::set<std::string> keys;
  for (const CC2Member& m : f.members()) keys.insert(matrix_key(interpret(m.diagram)));
  if (f.size() != 11520) o.fail("family has " + std::to_string(f.size()) + " members");
  if (keys.size() != 11520) o.fail(std::to_string(keys.size()) + " distinct keys");
  if (o.pass) o.detail = "11520 members, 11520 distinct keys";
  return o;
}

Outcome one_qubit() {
  Outcome o;
  constexpr GateType kGen[] = {GateType::S, GateType::V, GateType::Z, GateType::X, GateType::H};
  std::size_t in_cc1 = 0;
  for (std::size_t w = 0; w < kWords; ++w) {
    Circuit c{1, {}};
    for (std::size_t k = 0, x = w; k < 6; ++k, x /= 5) {
      c.gates.push_back(Gate::single(kGen[x % 5], 0));
    }
    OptimiseResult r = run_and_keep(c, {});
    const ScalarFreeMatrix want = gate_matrix_product(c);
    if (!same(want, interpret(r.diagram)) || !same(want, gate_matrix_product(r.circuit))) {
      o.fail("semantics changed for " + serialize_circuit(c));
    }
    if (cc1_table().contains(r.diagram)) {
      ++in_cc1;
    } else {
      o.fail("not in CC1: word " + std::to_string(w));
    }
  }
  o.detail = std::to_string(in_cc1) + "/" + std::to_string(kWords) + " in CC1" +
             (o.pass ? "" : "; " + o.detail);
  return o;
}

Outcome two_qubit() {
  Outcome o;
  std::size_t members = 0, grew = 0, broken = 0;
  for (std::uint64_t s = 0; s < kTwoQubitRuns; ++s) {
    const Circuit c = random_clifford_circuit(2, 20, s);
    const ScalarFreeMatrix want = gate_matrix_product(c);
    for (bool fallback : {true, false}) {
      OptimiserConfig cfg;
      cfg.semantic_fallback = fallback;
      OptimiseResult r = run_and_keep(c, cfg);
      if (!same(want, interpret(r.diagram)) || !same(want, gate_matrix_product(r.circuit))) {
        ++broken;
      }
      if (fallback) {
        members += cc2_contains(r.diagram);
      } else if (r.stats.output_size > r.stats.simple_size) {
        ++grew;
      }
    }
  }
  if (broken) o.fail(std::to_string(broken) + " runs changed semantics");
  if (members != kTwoQubitRuns) o.fail("only " + std::to_string(members) + " in CC2");
  if (grew) o.fail(std::to_string(grew) + " runs grew without fallback");
  if (o.pass) {
    o.detail = std::to_string(members) + "/500 in CC2; fallback off: semantics kept, no growth";
  }
  return o;
}

Outcome table() {
  Outcome o;
  char buf[256];
  std::string detail;
  for (std::size_t width : {1, 2, 3}) {
    BenchConfig cfg;
    cfg.width = width;
    cfg.depth = 20;
    cfg.count = kTableCount;
    cfg.seed = 0;
    BenchReport rep = bench(cfg);
    for (std::size_t i = 0; i < cfg.count; ++i) {
      run_and_keep(random_clifford_circuit(width, cfg.depth, cfg.seed + i), cfg.optimiser);
    }
    if (!rep.all_verified()) o.fail("width " + std::to_string(width) + " not all verified");
    if (width == 1) {
      std::size_t in_cc1 = 0;
      for (const BenchRun& r : rep.runs) in_cc1 += r.in_normal_form;
      if (rep.mean_out > kWidth1MeanOut) o.fail("width 1 mean output too large");
      if (in_cc1 != cfg.count) o.fail("width 1 output outside CC1");
      std::snprintf(buf, sizeof buf, "w1 out %.2f", rep.mean_out);
    } else {
      const double bound = width == 2 ? kWidth2Ratio : kWidth3Ratio;
      if (rep.ratio > bound) o.fail("width " + std::to_string(width) + " ratio too large");
      std::snprintf(buf, sizeof buf, "; w%zu ratio %.3f", width, rep.ratio);
    }
    detail += buf;
  }
  o.detail = detail + (o.pass ? "" : "; " + o.detail);
  return o;
}

Outcome extraction() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> width(1, 4), depth(1, 30);
  for (std::size_t i = 0; i < kExtractionRuns; ++i) {
    const Circuit c = random_clifford_circuit(width(rng), depth(rng), rng());
    const Diagram d = simple_form(translate(c));
    const PathCover pc = find_path_cover(d);
    if (auto why = check_flow(d, pc.flow)) o.fail("flow: " + *why);
    std::set<VertexId> seen;
    for (const auto& path : pc.paths) {
      for (std::size_t k = 0; k < path.size(); ++k) {
        if (!seen.insert(path[k]).second) o.fail("paths overlap");
        if (k > 0 && d.edge_multiplicity(path[k - 1], path[k]) == 0) o.fail("path not a walk");
      }
    }
    if (seen.size() != d.num_vertices()) o.fail("paths miss vertices");
    if (!same(gate_matrix_product(c), gate_matrix_product(extract_circuit(d, pc)))) {
      o.fail("extraction changed semantics: " + serialize_circuit(c));
    }
  }
  if (o.pass) o.detail = "200 circuits, flows valid, semantics kept";
  return o;
}

Outcome replays() {
  Outcome o;
  const RuleLibrary& lib = default_ruleset().library;
  std::size_t stable = 0;
  for (const RunRecord& r : runs) {
    const ProofTrace trace = ProofTrace::parse(r.trace);
    if (!iso_equal(replay(trace, lib), r.final_diagram)) {
      o.fail("replay differs for " + serialize_circuit(r.circuit));
    }
    if (optimise(r.circuit, r.cfg).trace.dump() == r.trace) {
      ++stable;
    } else {
      o.fail("trace not byte-stable for " + serialize_circuit(r.circuit));
    }
  }
  o.detail = std::to_string(runs.size()) + " traces replayed, " + std::to_string(stable) +
             " byte-stable" + (o.pass ? "" : "; " + o.detail);
  return o;
}

Outcome negative_control() {
  Outcome o;
  const Rule& r = default_ruleset().library.at("GreenPiCx");
  const Circuit c{2, {Gate::cnot(1, 0), Gate::cnot(0, 1), Gate::single(GateType::Z, 0)}};
  const Diagram d = translate(c);
  std::size_t stranded = 0;
  for (const Match& m : find_matches(r, d)) {
    const Diagram out = apply_match(d, r, m);
    if (try_path_cover(out)) continue;
    ++stranded;
    if (is_circuit_like(out)) o.fail("stranded result accepted as circuit-like");
    if (pauli_metric(out) <= pauli_metric(d)) o.fail("stranded result not penalised");
  }
  if (stranded == 0) o.fail("configuration has no stranding match");
  auto chosen = rewrite_metric({r}, d, &pauli_metric, nullptr);
  if (!chosen || !try_path_cover(*chosen)) o.fail("metric chose the stranding match");
  if (o.pass) o.detail = "stranding match rejected; metric picks the circuit-preserving one";
  return o;
}

}  // namespace
}  // namespace zxcliff

int main() {
  using namespace zxcliff;
  default_ruleset();
  report(1, "rule and pass soundness", kLimitSoundness, soundness);
  report(2, "single-qubit forms", kLimitCC1, cc1);
  report(3, "two-qubit forms", kLimitCC2, cc2);
  report(4, "one-qubit completeness", kLimitOneQubit, one_qubit);
  report(5, "two-qubit completeness", kLimitTwoQubit, two_qubit);
  report(6, "random-circuit table", kLimitTable, table);
  report(7, "extraction round trip", kLimitExtraction, extraction);
  report(8, "proof trace replay", 0, replays);
  report(9, "negative control", 0, negative_control);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
