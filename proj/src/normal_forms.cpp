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

#include "zxcliff/normal_forms.hpp"

#include <cmath>
#include <cstdio>
#include <map>

#include "zxcliff/circuit.hpp"
#include "zxcliff/errors.hpp"
#include "zxcliff/passes.hpp"

namespace zxcliff {

namespace {

double round12(double x) {
  double r = std::round(x * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;
}

VertexKind parse_token(const std::string& t) {
  const VertexType type = t[0] == 'g' ? VertexType::Z : VertexType::X;
  const std::string sign = t.substr(1);
  int q = 0;
  if (sign == "pp") q = 1;
  if (sign == "pi") q = 2;
  if (sign == "mm") q = 3;
  return {type, Phase(q)};
}

std::vector<VertexKind> parse_word(const std::string& word) {
  std::vector<VertexKind> kinds;
  std::size_t start = 0;
  while (start < word.size()) {
    std::size_t space = word.find(' ', start);
    if (space == std::string::npos) space = word.size();
    kinds.push_back(parse_token(word.substr(start, space - start)));
    start = space + 1;
  }
  return kinds;
}

/// Forms named by colour (g, r) and phase (pp, pi, mm) in path order.
const std::vector<std::string>& cc1_words() {
  static const std::vector<std::string> words = {
      "",
      "gpp", "gpi", "gmm", "rpp", "rpi", "rmm",
      "gpi rpi", "gpi rmm", "gpi rpp", "rpi gmm", "rpi gpp",
      "gmm rmm", "gmm rpp", "gpp rmm", "gpp rpp",
      "rmm gmm", "rmm gpp", "rpp gmm", "rpp gpp",
      "gpp rpp gpp", "gpp rpp gmm", "gpp rmm gpp", "gpp rmm gmm",
  };
  return words;
}

Diagram swap_diagram() {
  Circuit c;
  c.width = 2;
  c.gates = {Gate::swap(0, 1)};
  return translate(c);
}

Diagram cnot_diagram() {
  Circuit c;
  c.width = 2;
  c.gates = {Gate::cnot(0, 1)};
  return translate(c);
}

}  // namespace

std::string matrix_key(const ScalarFreeMatrix& m) {
  const auto& a = m.matrix();
  double max = 0.0;
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) max = std::max(max, std::abs(a(r, c)));
  }
  if (max < kDefaultTolerance) return "zero";
  Complex pivot{};
  for (Eigen::Index r = 0; r < a.rows() && pivot == Complex{}; ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      if (std::abs(a(r, c)) >= max - 1e-9) {
        pivot = a(r, c);
        break;
      }
    }
  }
  std::string key = std::to_string(a.rows()) + "x" + std::to_string(a.cols());
  char buf[64];
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      const Complex z = a(r, c) / pivot;
      std::snprintf(buf, sizeof buf, ";%.12f,%.12f", round12(z.real()), round12(z.imag()));
      key += buf;
    }
  }
  return key;
}

Diagram line_diagram(const std::vector<VertexKind>& kinds) {
  Diagram d;
  VertexId prev = d.add_input();
  for (const VertexKind& k : kinds) {
    VertexId v = d.add_vertex(k);
    d.add_edge(prev, v);
    prev = v;
  }
  VertexId out = d.add_output();
  d.add_edge(prev, out);
  return d;
}

CC1Table::CC1Table() {
  for (const std::string& word : cc1_words()) {
    Diagram d = line_diagram(parse_word(word));
    ScalarFreeMatrix m = interpret(d);
    const std::string key = matrix_key(m);
    if (!by_key_.emplace(key, entries_.size()).second) {
      throw ZXCliffError("single-qubit table has a repeated form: " + word);
    }
    entries_.push_back({word.empty() ? "id" : word, std::move(d), std::move(m)});
  }
  if (entries_.size() != 24) throw ZXCliffError("single-qubit table must have 24 forms");
}

std::optional<std::size_t> CC1Table::index_of(const ScalarFreeMatrix& m) const {
  if (m.rows() != 2 || m.cols() != 2) return std::nullopt;
  auto it = by_key_.find(matrix_key(m));
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

const CC1Entry& CC1Table::lookup(const ScalarFreeMatrix& m) const {
  auto i = index_of(m);
  if (!i) throw NotAClifford("not a single-qubit Clifford");
  return entries_[*i];
}

bool CC1Table::contains(const Diagram& d) const {
  if (d.num_inputs() != 1 || d.num_outputs() != 1) return false;
  auto i = index_of(interpret(d));
  return i && iso_equal(d, entries_[*i].diagram);
}

const CC1Table& cc1_table() {
  static const CC1Table table;
  return table;
}

bool cc1_minimality_check(std::string* report) {
  std::vector<VertexKind> alphabet;
  for (int q = 0; q < 4; ++q) alphabet.push_back(VertexKind::z(Phase(q)));
  for (int q = 0; q < 4; ++q) alphabet.push_back(VertexKind::x(Phase(q)));

  // smallest vertex count seen per semantic class
  std::map<std::string, std::size_t> smallest;
  std::vector<std::vector<VertexKind>> layer{{}};
  for (std::size_t len = 0; len <= 3; ++len) {
    std::vector<std::vector<VertexKind>> next;
    for (const auto& word : layer) {
      const std::string key = matrix_key(interpret(line_diagram(word)));
      smallest.try_emplace(key, len);
      if (len < 3) {
        for (const VertexKind& k : alphabet) {
          next.push_back(word);
          next.back().push_back(k);
        }
      }
    }
    layer = std::move(next);
  }
  bool ok = true;
  for (const CC1Entry& e : cc1_table().entries()) {
    const std::size_t own = e.diagram.num_interior();
    const std::size_t best = smallest.at(matrix_key(e.matrix));
    if (best < own) {
      ok = false;
      if (report) {
        *report += e.name + ": " + std::to_string(own) + " vertices, " +
                   std::to_string(best) + " suffice\n";
      }
    }
  }
  return ok;
}

std::string_view to_string(CC2Shape s) {
  switch (s) {
    case CC2Shape::Local:
      return "local";
    case CC2Shape::Swapped:
      return "swapped";
    case CC2Shape::Cnot:
      return "cnot";
    case CC2Shape::CnotSwapped:
      return "cnot-swapped";
  }
  return "?";
}

CC2Family::CC2Family() {
  const auto& cc1 = cc1_table().entries();
  const Diagram swap = swap_diagram();
  const Diagram cnot = cnot_diagram();
  const std::vector<Diagram> a_params = {
      line_diagram({}), line_diagram({VertexKind::x(Phase(1))}),
      line_diagram({VertexKind::x(Phase(1)), VertexKind::z(Phase(1))})};
  const std::vector<Diagram> b_params = {
      line_diagram({}), line_diagram({VertexKind::z(Phase(1))}),
      line_diagram({VertexKind::z(Phase(1)), VertexKind::x(Phase(1))})};

  auto add = [&](CC2Shape shape, std::size_t i, std::size_t j, std::size_t a,
                 std::size_t b, const Diagram& composite) {
    CC2Member m{shape, i, j, a, b, simple_form(composite)};
    const std::string key = matrix_key(interpret(m.diagram));
    by_key_.emplace(key, members_.size());
    members_.push_back(std::move(m));
  };

  for (std::size_t i = 0; i < cc1.size(); ++i) {
    for (std::size_t j = 0; j < cc1.size(); ++j) {
      const Diagram local = tensor(cc1[i].diagram, cc1[j].diagram);
      add(CC2Shape::Local, i, j, 0, 0, local);
      add(CC2Shape::Swapped, i, j, 0, 0, compose(swap, local));
      const Diagram with_cnot = compose(local, cnot);
      const Diagram with_cnot_swap = compose(with_cnot, swap);
      for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
          add(CC2Shape::Cnot, i, j, a, b,
              compose(with_cnot, tensor(a_params[a], b_params[b])));
          add(CC2Shape::CnotSwapped, i, j, a, b,
              compose(with_cnot_swap, tensor(b_params[b], a_params[a])));
        }
      }
    }
  }
  if (members_.size() != 11520) {
    throw ZXCliffError("two-qubit family has " + std::to_string(members_.size()) +
                       " members");
  }
}

std::optional<std::size_t> CC2Family::index_of(const ScalarFreeMatrix& u) const {
  if (u.rows() != 4 || u.cols() != 4) return std::nullopt;
  auto it = by_key_.find(matrix_key(u));
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

const CC2Member& CC2Family::lookup(const ScalarFreeMatrix& u) const {
  auto i = index_of(u);
  if (!i) throw NotAClifford("not a two-qubit Clifford");
  return members_[*i];
}

const CC2Family& cc2_family() {
  static const CC2Family family;
  return family;
}

const Diagram& cc2_lookup(const ScalarFreeMatrix& u) {
  return cc2_family().lookup(u).diagram;
}

bool cc2_contains(const Diagram& d) {
  if (d.num_inputs() != 2 || d.num_outputs() != 2) return false;
  auto i = cc2_family().index_of(interpret(d));
  return i && iso_equal(d, cc2_family().members()[*i].diagram);
}

}  // namespace zxcliff
