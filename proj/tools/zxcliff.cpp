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


// zxcliff: command-line front end.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "zxcliff/bench.hpp"
#include "zxcliff/circuit.hpp"
#include "zxcliff/diagram_json.hpp"
#include "zxcliff/errors.hpp"
#include "zxcliff/flow.hpp"
#include "zxcliff/normal_forms.hpp"
#include "zxcliff/optimiser.hpp"
#include "zxcliff/passes.hpp"
#include "zxcliff/rewrite.hpp"
#include "zxcliff/ruleset.hpp"
#include "zxcliff/semantics.hpp"

using namespace zxcliff;
using nlohmann::json;

namespace {

constexpr int kExitNotACircuit = 2;
constexpr int kExitVerification = 3;

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spill(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct Globals {
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  bool json = false;
};

int cmd_optimize(const Globals& g, const std::string& file, const std::string& out,
                 const std::string& trace_file, bool verify, bool no_fallback,
                 std::size_t max_iters) {
  const Circuit c = parse_circuit(slurp(file));
  OptimiserConfig cfg;
  cfg.semantic_fallback = !no_fallback;
  cfg.max_global_iters = max_iters;
  cfg.verify_each_step = verify;
  OptimiseResult res;
  try {
    res = optimise(c, cfg);
  } catch (const NotACircuit& ex) {
    std::cerr << "not a circuit: " << ex.what() << "\n";
    return kExitNotACircuit;
  } catch (const VerificationError& ex) {
    std::cerr << "verification failed: " << ex.what() << "\n";
    return kExitVerification;
  }
  bool ok = true;
  if (verify) {
    ok = c.width > SemanticsOptions{}.max_qubits || verify_circuits(c, res.circuit);
    if (ok) {
      try {
        ok = iso_equal(replay(res.trace, default_ruleset().library), res.diagram);
        if (!ok) std::cerr << "trace replay gave a different diagram\n";
      } catch (const ReplayDivergence& ex) {
        std::cerr << "trace replay failed: " << ex.what() << "\n";
        ok = false;
      }
    }
  }
  spill(out, serialize_circuit(res.circuit));
  if (!trace_file.empty()) spill(trace_file, res.trace.dump() + "\n");
  const auto& s = res.stats;
  if (g.json) {
    json j{{"input_size", s.input_size},   {"simple_size", s.simple_size},
           {"output_size", s.output_size}, {"rewrites", s.rewrites},
           {"trace_steps", s.trace_steps}, {"iterations", s.iterations},
           {"budget_exceeded", s.budget_exceeded}, {"ms", s.millis},
           {"verified", verify ? json(ok) : json(nullptr)}};
    std::cerr << j.dump() << "\n";
  } else {
    std::cerr << "size " << s.input_size << " -> " << s.output_size << ", " << s.rewrites
              << " rewrites, " << s.millis << " ms" << (verify ? (ok ? ", verified" : ", FAILED") : "")
              << "\n";
  }
  return ok ? 0 : kExitVerification;
}

int cmd_verify(const Globals& g, const std::string& a, const std::string& b) {
  const bool eq = verify_circuits(parse_circuit(slurp(a)), parse_circuit(slurp(b)));
  if (g.json) {
    std::cout << json{{"equal", eq}}.dump() << "\n";
  } else {
    std::cout << (eq ? "true" : "false") << "\n";
  }
  return eq ? 0 : 1;
}

int cmd_bench(const Globals& g, BenchConfig cfg, const std::string& csv, bool strict) {
  cfg.seed = g.seed;
  cfg.jobs = g.jobs;
  const BenchReport rep = bench(cfg);
  if (g.json) {
    json runs = json::array();
    for (const BenchRun& r : rep.runs) {
      runs.push_back({{"seed", r.seed}, {"in", r.input_size}, {"out", r.output_size},
                      {"rewrites", r.rewrites}, {"ms", r.millis}, {"verified", r.verified},
                      {"error", r.error}});
    }
    std::cout << json{{"width", cfg.width}, {"depth", cfg.depth}, {"count", cfg.count},
                      {"seed", cfg.seed}, {"mean_in", rep.mean_in}, {"mean_out", rep.mean_out},
                      {"ratio", rep.ratio}, {"steps", rep.mean_steps},
                      {"ms_mean", rep.ms_mean}, {"ms_sigma", rep.ms_sigma},
                      {"verified", rep.verified}, {"runs", runs}}
                     .dump()
              << "\n";
  } else {
    std::cout << rep.table();
    std::cout << "times in milliseconds; steps are rule applications\n";
  }
  if (!csv.empty()) {
    spill(csv, BenchReport::csv_header() + "\n" + rep.csv_row() + "\n");
  }
  std::size_t errors = 0;
  for (const BenchRun& r : rep.runs) {
    if (!r.error.empty()) {
      ++errors;
      std::cerr << "seed " << r.seed << ": " << r.error << "\n";
    }
  }
  if (cfg.width <= 4 && !rep.all_verified()) return kExitVerification;
  if (cfg.replay) {
    for (const BenchRun& r : rep.runs) {
      if (!r.replayed) return kExitVerification;
    }
  }
  return (strict && errors) ? 1 : 0;
}

int cmd_rules_check(const Globals& g, const std::string& dir) {
  const Ruleset rs = load_ruleset(dir);
  struct Row {
    std::size_t count = 0, reducing = 0;
  };
  std::map<std::string, std::map<std::string, Row>> table;
  auto add = [&](const std::string& group, const std::vector<Rule>& rules) {
    for (const Rule& r : rules) {
      check_rule_sound(r);
      Row& row = table[group][std::string(rule_family(r.name))];
      ++row.count;
      if (reduction_weight(r.rhs) < reduction_weight(r.lhs)) ++row.reducing;
    }
  };
  add("init", rs.init);
  add("always", rs.always);
  add("euler", rs.euler);
  add("pauli_commute", rs.pauli_commute);
  add("cnot_commute", rs.cnot_commute);
  add("c2", rs.c2);
  if (g.json) {
    json j = json::object();
    for (const auto& [group, fams] : table) {
      for (const auto& [fam, row] : fams) {
        j[group][fam] = {{"rules", row.count}, {"sound", row.count}, {"reducing", row.reducing}};
      }
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("%-14s %-18s %6s %6s %9s\n", "group", "family", "rules", "sound", "reducing");
    for (const auto& [group, fams] : table) {
      for (const auto& [fam, row] : fams) {
        std::printf("%-14s %-18s %6zu %6zu %9zu\n", group.c_str(), fam.c_str(), row.count,
                    row.count, row.reducing);
      }
    }
    std::printf("%zu rules, all sound\n", rs.size());
  }
  return 0;
}

int cmd_extract(const std::string& file, bool require_flow, const std::string& out) {
  const Diagram d = parse_diagram(slurp(file));
  auto pc = is_simple(d) ? try_path_cover(d) : std::nullopt;
  if (!pc) {
    std::cerr << "diagram is not circuit-like\n";
    return require_flow ? kExitNotACircuit : 0;
  }
  spill(out, serialize_circuit(extract_circuit(d, *pc)));
  return 0;
}

int cmd_translate(const std::string& file, bool simple, const std::string& out) {
  Diagram d = translate(parse_circuit(slurp(file)));
  if (simple) d = simple_form(d);
  spill(out, dump_diagram(d) + "\n");
  return 0;
}

int cmd_nf_dump() {
  json cc1 = json::array();
  for (const CC1Entry& e : cc1_table().entries()) {
    cc1.push_back({{"name", e.name}, {"key", matrix_key(e.matrix)},
                   {"size", circuit_size(e.diagram)}, {"diagram", diagram_to_json(e.diagram)}});
  }
  std::map<std::string, std::size_t> shapes;
  std::size_t max_size = 0;
  for (const CC2Member& m : cc2_family().members()) {
    ++shapes[std::string(to_string(m.shape))];
    max_size = std::max(max_size, circuit_size(m.diagram));
  }
  json j{{"cc1", cc1},
         {"cc2", {{"members", cc2_family().size()},
                  {"distinct_keys", cc2_family().distinct_keys()},
                  {"shapes", shapes},
                  {"max_size", max_size}}}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford circuit optimiser based on ZX-diagram rewriting"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "base seed for random circuits");
  app.add_option("--jobs", g.jobs, "worker threads (0: all cores)");
  app.add_flag("--json", g.json, "machine-readable output");

  std::string file, file_b, out, trace_file, dir = default_ruleset_dir().string(), csv;
  bool verify = false, no_fallback = false, require_flow = false, simple = false,
       strict = false;
  std::size_t max_iters = OptimiserConfig{}.max_global_iters;
  BenchConfig bcfg;

  auto* opt = app.add_subcommand("optimize", "optimise a circuit file");
  opt->add_option("circuit", file, "circuit file, - for stdin")->required();
  opt->add_option("--out", out, "output circuit file");
  opt->add_option("--trace", trace_file, "write the proof trace here");
  opt->add_flag("--verify", verify, "check every step and the final semantics");
  opt->add_flag("--no-fallback", no_fallback, "disable the CC2 whole-diagram replacement");
  opt->add_option("--max-iters", max_iters, "global iteration cap")->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verify", "compare two circuits up to a global scalar");
  ver->add_option("a", file, "first circuit")->required();
  ver->add_option("b", file_b, "second circuit")->required();

  auto* ben = app.add_subcommand("bench", "optimise random circuits and report sizes");
  ben->add_option("--width", bcfg.width)->check(CLI::PositiveNumber);
  ben->add_option("--depth", bcfg.depth)->check(CLI::PositiveNumber);
  ben->add_option("--count", bcfg.count)->check(CLI::PositiveNumber);
  ben->add_option("--csv", csv, "write the CSV row here");
  ben->add_flag("--replay", bcfg.replay, "replay every proof trace");
  ben->add_flag("--strict", strict, "fail on any optimiser error");

  auto* rules = app.add_subcommand("rules", "ruleset utilities");
  rules->require_subcommand(1);
  auto* check = rules->add_subcommand("check", "soundness audit");
  check->add_option("--dir", dir, "ruleset directory");

  auto* ext = app.add_subcommand("extract", "read a circuit off a diagram");
  ext->add_option("diagram", file, "diagram JSON file")->required();
  ext->add_flag("--require-flow", require_flow, "fail when the diagram is not circuit-like");
  ext->add_option("--out", out);

  auto* tr = app.add_subcommand("translate", "circuit to diagram JSON");
  tr->add_option("circuit", file)->required();
  tr->add_flag("--simple", simple, "apply the simple form");
  tr->add_option("--out", out);

  auto* nf = app.add_subcommand("nf", "normal form tables");
  nf->require_subcommand(1);
  auto* dump = nf->add_subcommand("dump", "CC1 table and CC2 statistics as JSON");

  CLI11_PARSE(app, argc, argv);
  try {
    if (opt->parsed()) {
      return cmd_optimize(g, file, out, trace_file, verify, no_fallback, max_iters);
    }
    if (ver->parsed()) return cmd_verify(g, file, file_b);
    if (ben->parsed()) return cmd_bench(g, bcfg, csv, strict);
    if (check->parsed()) return cmd_rules_check(g, dir);
    if (ext->parsed()) return cmd_extract(file, require_flow, out);
    if (tr->parsed()) return cmd_translate(file, simple, out);
    if (dump->parsed()) return cmd_nf_dump();
  } catch (const UnsoundRuleError& ex) {
    std::cerr << "unsound rule: " << ex.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
