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


// Writes the shipped ruleset. Right-hand sides of the line rules are CC1
// members and those of the two-qubit block rules are CC2 members; only
// replacements with a strictly smaller reduction_weight are kept.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zxcliff/circuit.hpp"
#include "zxcliff/diagram_json.hpp"
#include "zxcliff/normal_forms.hpp"
#include "zxcliff/passes.hpp"
#include "zxcliff/ruleset.hpp"
#include "zxcliff/semantics.hpp"

namespace fs = std::filesystem;
using namespace zxcliff;

namespace {

VertexKind zk(int k) { return VertexKind::z(Phase(k)); }
VertexKind xk(int k) { return VertexKind::x(Phase(k)); }

std::string digits(std::initializer_list<int> ks) {
  std::string s;
  for (int k : ks) s += static_cast<char>('0' + ((k % 4) + 4) % 4);
  return s;
}

class Writer {
 public:
  explicit Writer(fs::path root) : root_(std::move(root)) {}

  void group(const std::string& g) {
    dir_ = root_ / g;
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    index_ = 0;
    seen_.clear();
  }

  void add(const std::string& name, const Diagram& lhs, const Diagram& rhs) {
    if (!seen_.insert(dump_diagram(lhs)).second) return;
    Rule r = make_rule(name, lhs, rhs);
    check_rule_sound(r);
    char prefix[16];
    std::snprintf(prefix, sizeof prefix, "%04zu-", index_++);
    std::string file = prefix + name;
    for (char& c : file) {
      if (c == ':') c = '-';
    }
    write_rule_file(dir_ / (file + ".json"), r);
    ++total_;
  }

  std::size_t total() const { return total_; }

 private:
  fs::path root_, dir_;
  std::size_t index_ = 0, total_ = 0;
  std::set<std::string> seen_;
};

Diagram cc1_form(const Diagram& d) { return cc1_table().lookup(interpret(d)).diagram; }

/**
 * Smallest known circuit-like form of each two-qubit Clifford: the CC2
 * members and their adjoints, each with either wire order on either side.
 */
class SmallForms {
 public:
  SmallForms() {
    Eigen::MatrixXcd swap = Eigen::MatrixXcd::Zero(4, 4);
    swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
    const ScalarFreeMatrix sigma(swap);
    for (const CC2Member& m : cc2_family().members()) {
      const ScalarFreeMatrix u = interpret(m.diagram);
      consider(m.diagram, u, sigma);
      consider(adjoint(m.diagram), u.adjoint(), sigma);
    }
  }

  const Diagram& lookup(const ScalarFreeMatrix& u) const { return best_.at(matrix_key(u)); }

 private:
  void consider(const Diagram& d, const ScalarFreeMatrix& u, const ScalarFreeMatrix& sigma) {
    for (int flip = 0; flip < 4; ++flip) {
      Diagram v = d;
      ScalarFreeMatrix w = u;
      if (flip & 1) {
        v.set_inputs({d.inputs()[1], d.inputs()[0]});
        w = w * sigma;
      }
      if (flip & 2) {
        v.set_outputs({d.outputs()[1], d.outputs()[0]});
        w = sigma * w;
      }
      auto [it, fresh] = best_.try_emplace(matrix_key(w), v);
      if (!fresh && reduction_weight(v) < reduction_weight(it->second)) it->second = v;
    }
  }

  std::map<std::string, Diagram> best_;
};

const SmallForms& small_forms() {
  static const SmallForms forms;
  return forms;
}

/// Phase `k` of the given colour as gates on `wire`.
void phase_gates(std::vector<Gate>& gs, GateType t, std::size_t wire, int k) {
  for (int i = 0; i < ((k % 4) + 4) % 4; ++i) gs.push_back(Gate::single(t, wire));
}

Diagram block(const std::vector<Gate>& gs) { return simple_form(translate(Circuit{2, gs})); }

/// Adds `name` when the smallest known form of `lhs` is strictly smaller.
void add_block(Writer& w, const std::string& name, const Diagram& lhs,
               std::size_t expected_interior) {
  if (lhs.num_interior() != expected_interior || !is_simple(lhs)) return;
  const Diagram& rhs = small_forms().lookup(interpret(lhs));
  if (reduction_weight(rhs) < reduction_weight(lhs)) w.add(name, lhs, rhs);
}

/// One spider of colour `t` with a pi spider of the other colour on its
/// last wire leg; `cross` extra legs end on outputs.
Rule pi_through(const std::string& name, VertexType t, int a, std::size_t cross) {
  const VertexType p = opposite_colour(t);
  auto build = [&](bool pushed) {
    Diagram d;
    VertexId in = d.add_input();
    VertexId v = d.add_vertex({t, Phase(pushed ? -a : a)});
    VertexId pi = d.add_vertex({p, Phase::half()});
    VertexId out = d.add_output();
    if (pushed) {
      d.add_edge(in, pi);
      d.add_edge(pi, v);
      d.add_edge(v, out);
    } else {
      d.add_edge(in, v);
      d.add_edge(v, pi);
      d.add_edge(pi, out);
    }
    for (std::size_t i = 0; i < cross; ++i) {
      VertexId o = d.add_output();
      if (pushed) {
        VertexId c = d.add_vertex({p, Phase::half()});
        d.add_edge(v, c);
        d.add_edge(c, o);
      } else {
        d.add_edge(v, o);
      }
    }
    return d;
  };
  return make_rule(name, build(false), build(true));
}

void write_init(Writer& w) {
  w.group("init");
  w.add("GreenMinus", line_diagram({zk(3)}), line_diagram({zk(2), zk(1)}));
  w.add("RedMinus", line_diagram({xk(3)}), line_diagram({xk(2), xk(1)}));
  w.add("AlwaysH", line_diagram({VertexKind::h()}), line_diagram({zk(1), xk(1), zk(1)}));
}

void write_always(Writer& w) {
  w.group("always");
  for (int a = 1; a < 4; ++a) {
    for (int b = 1; b < 4; ++b) {
      Diagram rhs = (b == a) ? line_diagram({zk(2)}) : line_diagram({zk(2), xk(b - a)});
      w.add("GreenPi:" + digits({a, b}), line_diagram({xk(a), zk(2), xk(b)}), rhs);
    }
  }
  for (int a = 1; a < 4; ++a) {
    w.add("GreenPi2:" + digits({a}), line_diagram({zk(2), xk(a), zk(2)}),
          line_diagram({xk(-a)}));
  }
  for (int a = 1; a < 4; a += 2) {
    for (int b = 1; b < 4; b += 2) {
      for (int c = 1; c < 4; c += 2) {
        for (int d = 1; d < 4; d += 2) {
          Diagram lhs = line_diagram({zk(a), xk(b), zk(c), xk(d)});
          w.add("GreenPlus:" + digits({a, b, c, d}), lhs, cc1_form(lhs));
        }
      }
    }
  }
  for (int a = 1; a < 4; ++a) {
    for (int b = 1; b < 4; ++b) {
      Diagram rhs = (b == a) ? line_diagram({xk(2)}) : line_diagram({xk(2), zk(b - a)});
      w.add("RedPi:" + digits({a, b}), line_diagram({zk(a), xk(2), zk(b)}), rhs);
    }
  }
  for (int a = 1; a < 4; ++a) {
    w.add("RedPi2:" + digits({a}), line_diagram({xk(2), zk(a), xk(2)}),
          line_diagram({zk(-a)}));
  }
  // remaining alternating chains of three and four vertices
  for (int len = 3; len <= 4; ++len) {
    for (int code = 0; code < (len == 3 ? 27 : 81); ++code) {
      std::vector<VertexKind> ks;
      std::string tag;
      bool odd = true;
      for (int i = 0, c = code; i < len; ++i, c /= 3) {
        const int k = c % 3 + 1;
        odd = odd && (k % 2 == 1);
        ks.push_back(i % 2 == 0 ? zk(k) : xk(k));
        tag += static_cast<char>('0' + k);
      }
      if (len == 4 && odd) continue;
      Diagram lhs = line_diagram(ks);
      Diagram rhs = cc1_form(lhs);
      if (reduction_weight(rhs) < reduction_weight(lhs)) w.add("Euler:" + tag, lhs, rhs);
    }
  }
  for (int a = 1; a < 4; a += 2) {
    for (int b = 1; b < 4; b += 2) {
      for (int c = 1; c < 4; c += 2) {
        for (int d = 1; d < 4; d += 2) {
          Diagram lhs = line_diagram({xk(a), zk(b), xk(c), zk(d)});
          w.add("RedPlus:" + digits({a, b, c, d}), lhs, cc1_form(lhs));
        }
      }
    }
  }

  // two CNOTs on the same ordered pair with one gate between them
  for (int gate = 1; gate < 4; ++gate) {
    const std::string family = gate == 2 ? "Cx" : "C22Plus1Bit";
    for (int p0 = 0; p0 < 4; ++p0) {
      for (int p1 = 0; p1 < 4; ++p1) {
        for (int t = 0; t < 4; ++t) {
          std::vector<Gate> gs;
          phase_gates(gs, GateType::S, 0, p0);
          phase_gates(gs, GateType::V, 1, t);
          gs.push_back(Gate::cnot(0, 1));
          phase_gates(gs, GateType::V, 0, gate);
          gs.push_back(Gate::cnot(0, 1));
          phase_gates(gs, GateType::S, 0, p1);
          add_block(w, family + ":c" + digits({gate, p0, p1, t}), block(gs), 4);

          std::vector<Gate> hs;
          phase_gates(hs, GateType::S, 0, t);
          phase_gates(hs, GateType::V, 1, p0);
          hs.push_back(Gate::cnot(0, 1));
          phase_gates(hs, GateType::S, 1, gate);
          hs.push_back(Gate::cnot(0, 1));
          phase_gates(hs, GateType::V, 1, p1);
          add_block(w, family + ":t" + digits({gate, p0, p1, t}), block(hs), 4);
        }
      }
    }
  }

  // two CNOTs on the same ordered pair with a gate between them on each wire
  for (int a = 1; a < 4; ++a) {
    for (int b = 1; b < 4; ++b) {
      for (int code = 0; code < 256; ++code) {
        const int p0 = code & 3, p1 = (code >> 2) & 3, q0 = (code >> 4) & 3, q1 = code >> 6;
        std::vector<Gate> gs;
        phase_gates(gs, GateType::S, 0, p0);
        phase_gates(gs, GateType::V, 1, q0);
        gs.push_back(Gate::cnot(0, 1));
        phase_gates(gs, GateType::V, 0, a);
        phase_gates(gs, GateType::S, 1, b);
        gs.push_back(Gate::cnot(0, 1));
        phase_gates(gs, GateType::S, 0, p1);
        phase_gates(gs, GateType::V, 1, q1);
        add_block(w, "C22Plus2Bit:" + digits({a, b, p0, p1, q0, q1}), block(gs), 6);
      }
    }
  }

  // CNOT followed by the reversed CNOT
  for (int code = 0; code < 256; ++code) {
    const int p = code & 3, q = (code >> 2) & 3, r = (code >> 4) & 3, s = code >> 6;
    std::vector<Gate> gs;
    phase_gates(gs, GateType::S, 0, p);
    phase_gates(gs, GateType::V, 1, r);
    gs.push_back(Gate::cnot(0, 1));
    gs.push_back(Gate::cnot(1, 0));
    phase_gates(gs, GateType::V, 0, q);
    phase_gates(gs, GateType::S, 1, s);
    const int green = (p != 0) + (s != 0), red = (q != 0) + (r != 0);
    std::string family = "C2Plus2Bit";
    if (green + red == 0) {
      family = "CxSw";
    } else if (green + red == 1) {
      family = green ? "C2GreenPlus1Bit" : "C2RedPlus1Bit";
    }
    add_block(w, family + ":" + digits({p, q, r, s}), block(gs), 4);
  }
}

void write_euler(Writer& w) {
  w.group("euler");
  for (int a = 1; a < 4; a += 2) {
    for (int b = 1; b < 4; b += 2) {
      for (int c = 1; c < 4; c += 2) {
        Diagram lhs = line_diagram({zk(a), xk(b), zk(c)});
        const ScalarFreeMatrix m = interpret(lhs);
        bool done = false;
        for (int d = 1; d < 4 && !done; d += 2) {
          for (int e = 1; e < 4 && !done; e += 2) {
            for (int f = 1; f < 4 && !done; f += 2) {
              Diagram rhs = line_diagram({xk(d), zk(e), xk(f)});
              if (scalar_free_equal(m, interpret(rhs))) {
                w.add("H:" + digits({a, b, c, d, e, f}), lhs, rhs);
                done = true;
              }
            }
          }
        }
      }
    }
  }
}

void write_pauli(Writer& w) {
  w.group("pauli_commute");
  for (int a = 1; a < 4; a += 2) {
    w.add("GreenPiCommute:" + digits({a}), line_diagram({xk(a), zk(2)}),
          line_diagram({zk(2), xk(-a)}));
  }
  for (int a = 1; a < 4; a += 2) {
    w.add("RedPiCommute:" + digits({a}), line_diagram({zk(a), xk(2)}),
          line_diagram({xk(2), zk(-a)}));
  }
  for (int a = 0; a < 4; ++a) {
    Rule r = pi_through("GreenCommute:" + digits({a}), VertexType::X, a, 1);
    w.add(r.name, r.lhs, r.rhs);
  }
  for (int a = 0; a < 4; ++a) {
    Rule r = pi_through("RedCommute:" + digits({a}), VertexType::Z, a, 1);
    w.add(r.name, r.lhs, r.rhs);
  }
}

void write_cnot(Writer& w) {
  w.group("cnot_commute");
  for (int a = 0; a < 4; ++a) {
    for (int c = 0; c < 4; ++c) {
      std::vector<Gate> l, r;
      phase_gates(l, GateType::S, 0, c);
      phase_gates(l, GateType::V, 1, a);
      l.push_back(Gate::cnot(0, 1));
      l.push_back(Gate::single(GateType::Z, 1));
      r.push_back(Gate::single(GateType::Z, 1));
      phase_gates(r, GateType::V, 1, -a);
      phase_gates(r, GateType::S, 0, c + 2);
      r.push_back(Gate::cnot(0, 1));
      w.add("GreenCxCommute:" + digits({a, c}), block(l), block(r));
    }
  }
  w.add("GreenPiCx",
        translate(Circuit{2, {Gate::cnot(0, 1), Gate::single(GateType::Z, 0)}}),
        translate(Circuit{2, {Gate::single(GateType::Z, 0), Gate::cnot(0, 1)}}));
  w.add("RedPiCx",
        translate(Circuit{2, {Gate::cnot(0, 1), Gate::single(GateType::X, 1)}}),
        translate(Circuit{2, {Gate::single(GateType::X, 1), Gate::cnot(0, 1)}}));
  for (int a = 0; a < 4; ++a) {
    for (int c = 0; c < 4; ++c) {
      std::vector<Gate> l, r;
      phase_gates(l, GateType::S, 0, a);
      phase_gates(l, GateType::V, 1, c);
      l.push_back(Gate::cnot(0, 1));
      l.push_back(Gate::single(GateType::X, 0));
      r.push_back(Gate::single(GateType::X, 0));
      phase_gates(r, GateType::S, 0, -a);
      phase_gates(r, GateType::V, 1, c + 2);
      r.push_back(Gate::cnot(0, 1));
      w.add("RedCxCommute:" + digits({a, c}), block(l), block(r));
    }
  }
}

void write_c2(Writer& w) {
  w.group("c2");
  for (int a = 0; a < 4; ++a) {
    Rule r = pi_through("C2RedCxCommute:" + digits({a}), VertexType::Z, a, 2);
    w.add(r.name, r.lhs, r.rhs);
  }
  for (int a = 0; a < 4; ++a) {
    Rule r = pi_through("C2GreenCxCommute:" + digits({a}), VertexType::X, a, 2);
    w.add(r.name, r.lhs, r.rhs);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Writes the zxcliff ruleset"};
  std::string out = "rules/v1";
  app.add_option("dir", out, "output directory");
  CLI11_PARSE(app, argc, argv);
  Writer w(out);
  write_init(w);
  write_always(w);
  write_euler(w);
  write_pauli(w);
  write_cnot(w);
  write_c2(w);
  std::cout << "wrote " << w.total() << " rules to " << out << "\n";
  return 0;
}
