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

#include "zxcliff/circuit.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>

#include "zxcliff/errors.hpp"

namespace zxcliff {

namespace {

constexpr std::array<std::string_view, 8> kGateNames = {
    "S", "V", "Z", "X", "H", "CNOT", "TONC", "SWAP"};

Eigen::Matrix2cd single_qubit_matrix(GateType t) {
  const Complex i{0.0, 1.0};
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd m;
  switch (t) {
    case GateType::S:
      m << 1.0, 0.0, 0.0, i;
      break;
    case GateType::V:
      m << 0.5 * (1.0 + i), 0.5 * (1.0 - i), 0.5 * (1.0 - i), 0.5 * (1.0 + i);
      break;
    case GateType::Z:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
    case GateType::X:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case GateType::H:
      m << r, r, r, -r;
      break;
    default:
      throw InvalidGateError("not a single-qubit gate");
  }
  return m;
}

/// Bit of qubit q in a basis index of an n-qubit register.
std::size_t qubit_bit(std::size_t n, std::size_t q) { return std::size_t{1} << (n - 1 - q); }

Eigen::MatrixXcd embed(const Gate& g, std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  if (!g.is_two_qubit()) {
    const Eigen::Matrix2cd u = single_qubit_matrix(g.type);
    const std::size_t bit = qubit_bit(n, g.a);
    for (std::size_t col = 0; col < dim; ++col) {
      const std::size_t in = (col & bit) ? 1 : 0;
      for (std::size_t out = 0; out < 2; ++out) {
        const std::size_t row = out ? (col | bit) : (col & ~bit);
        m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) +=
            u(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(in));
      }
    }
    return m;
  }
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t row = col;
    const std::size_t ba = qubit_bit(n, g.a);
    const std::size_t bb = qubit_bit(n, g.b);
    switch (g.type) {
      case GateType::CNOT:
        if (col & ba) row ^= bb;
        break;
      case GateType::TONC:
        if (col & bb) row ^= ba;
        break;
      case GateType::SWAP:
        if (((col & ba) != 0) != ((col & bb) != 0)) row ^= ba | bb;
        break;
      default:
        break;
    }
    m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = 1.0;
  }
  return m;
}

std::size_t parse_index(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw CircuitParseError(line, "expected a non-negative integer, got '" +
                                      std::string(token) + "'");
  }
  return value;
}

}  // namespace

bool Gate::is_two_qubit() const {
  return type == GateType::CNOT || type == GateType::TONC || type == GateType::SWAP;
}

std::string_view gate_name(GateType t) { return kGateNames[static_cast<std::size_t>(t)]; }

void Circuit::validate() const {
  if (width == 0) throw InvalidGateError("circuit width must be positive");
  for (const Gate& g : gates) {
    if (g.a >= width || (g.is_two_qubit() && g.b >= width)) {
      throw InvalidGateError(std::string(gate_name(g.type)) + ": wire out of range");
    }
    if (g.is_two_qubit() && g.a == g.b) {
      throw InvalidGateError(std::string(gate_name(g.type)) + ": wires must differ");
    }
  }
}

ScalarFreeMatrix gate_matrix_product(const Circuit& c, const SemanticsOptions& opts) {
  c.validate();
  if (c.width > opts.max_qubits) {
    throw SemanticsSizeError("circuit width " + std::to_string(c.width) +
                             " exceeds bound " + std::to_string(opts.max_qubits));
  }
  Eigen::MatrixXcd m = ScalarFreeMatrix::identity(c.width).matrix();
  for (const Gate& g : c.gates) m = embed(g, c.width) * m;
  return ScalarFreeMatrix(std::move(m));
}

Diagram translate(const Circuit& c) {
  c.validate();
  Diagram d;
  std::vector<VertexId> frontier;
  for (std::size_t q = 0; q < c.width; ++q) frontier.push_back(d.add_input());

  auto extend = [&](std::size_t wire, VertexKind kind) {
    VertexId v = d.add_vertex(kind);
    d.add_edge(frontier[wire], v);
    frontier[wire] = v;
    return v;
  };

  for (const Gate& g : c.gates) {
    switch (g.type) {
      case GateType::S:
        extend(g.a, VertexKind::z(Phase(1)));
        break;
      case GateType::Z:
        extend(g.a, VertexKind::z(Phase(2)));
        break;
      case GateType::V:
        extend(g.a, VertexKind::x(Phase(1)));
        break;
      case GateType::X:
        extend(g.a, VertexKind::x(Phase(2)));
        break;
      case GateType::H:
        extend(g.a, VertexKind::h());
        break;
      case GateType::CNOT: {
        VertexId ctrl = extend(g.a, VertexKind::z());
        VertexId targ = extend(g.b, VertexKind::x());
        d.add_edge(ctrl, targ);
        break;
      }
      case GateType::TONC: {
        VertexId ctrl = extend(g.b, VertexKind::z());
        VertexId targ = extend(g.a, VertexKind::x());
        d.add_edge(ctrl, targ);
        break;
      }
      case GateType::SWAP:
        std::swap(frontier[g.a], frontier[g.b]);
        break;
    }
  }
  for (std::size_t q = 0; q < c.width; ++q) {
    VertexId out = d.add_output();
    d.add_edge(frontier[q], out);
  }
  return d;
}

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  bool have_header = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (!have_header) {
      if (tok[0] != "qubits" || tok.size() != 2) {
        throw CircuitParseError(line_no, "expected 'qubits <n>'");
      }
      c.width = parse_index(tok[1], line_no);
      if (c.width == 0) throw CircuitParseError(line_no, "width must be positive");
      have_header = true;
      continue;
    }

    auto it = std::find(kGateNames.begin(), kGateNames.end(), tok[0]);
    if (it == kGateNames.end()) {
      throw CircuitParseError(line_no, "unknown gate '" + tok[0] + "'");
    }
    Gate g;
    g.type = static_cast<GateType>(it - kGateNames.begin());
    const std::size_t arity = g.is_two_qubit() ? 2 : 1;
    if (tok.size() != arity + 1) {
      throw CircuitParseError(line_no, tok[0] + " takes " + std::to_string(arity) +
                                           " wire argument(s)");
    }
    g.a = parse_index(tok[1], line_no);
    if (arity == 2) g.b = parse_index(tok[2], line_no);
    if (g.a >= c.width || (arity == 2 && g.b >= c.width)) {
      throw CircuitParseError(line_no, "wire out of range");
    }
    if (arity == 2 && g.a == g.b) {
      throw CircuitParseError(line_no, "two-qubit gate on a single wire");
    }
    c.gates.push_back(g);
  }
  if (!have_header) throw CircuitParseError(line_no, "missing 'qubits <n>' header");
  return c;
}

std::string serialize_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.width << "\n";
  for (const Gate& g : c.gates) {
    out << gate_name(g.type) << " " << g.a;
    if (g.is_two_qubit()) out << " " << g.b;
    out << "\n";
  }
  return out.str();
}

Circuit random_clifford_circuit(std::size_t width, std::size_t depth,
                                std::uint64_t seed) {
  if (width == 0) throw InvalidGateError("width must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> single(0, 4);
  std::uniform_int_distribution<std::size_t> wire(0, width - 1);
  Circuit c;
  c.width = width;
  for (std::size_t layer = 0; layer < depth; ++layer) {
    if (width >= 2 && coin(rng) == 1) {
      const std::size_t control = wire(rng);
      std::size_t target = std::uniform_int_distribution<std::size_t>(0, width - 2)(rng);
      if (target >= control) ++target;
      c.gates.push_back(Gate::cnot(control, target));
    } else {
      const auto t = static_cast<GateType>(single(rng));
      c.gates.push_back(Gate::single(t, wire(rng)));
    }
  }
  return c;
}

std::size_t circuit_size(const Diagram& d) {
  std::size_t n = 0;
  for (VertexId v : d.interior_ids()) {
    const VertexKind& k = d.kind(v);
    if (k.is_spider() && k.phase.is_zero() && d.degree(v) == 2) continue;
    ++n;
  }
  return n;
}

bool check_translation_soundness(const Circuit& c, double tol,
                                 const SemanticsOptions& opts) {
  return scalar_free_equal(gate_matrix_product(c, opts), interpret(translate(c), opts),
                           tol);
}

}  // namespace zxcliff
