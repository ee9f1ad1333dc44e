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

#include "zxcliff/semantics.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

#include "zxcliff/errors.hpp"

namespace zxcliff {

ScalarFreeMatrix ScalarFreeMatrix::identity(std::size_t qubits) {
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  return ScalarFreeMatrix(Eigen::MatrixXcd::Identity(dim, dim));
}

ScalarFreeMatrix ScalarFreeMatrix::operator*(const ScalarFreeMatrix& other) const {
  if (cols() != other.rows()) throw ShapeError("matrix product shape mismatch");
  return ScalarFreeMatrix(m_ * other.m_);
}

ScalarFreeMatrix ScalarFreeMatrix::kron(const ScalarFreeMatrix& other) const {
  return ScalarFreeMatrix(Eigen::kroneckerProduct(m_, other.m_).eval());
}

ScalarFreeMatrix ScalarFreeMatrix::adjoint() const {
  return ScalarFreeMatrix(m_.adjoint());
}

std::string ScalarFreeMatrix::to_string() const {
  std::ostringstream out;
  for (Eigen::Index r = 0; r < rows(); ++r) {
    for (Eigen::Index c = 0; c < cols(); ++c) {
      out << (c ? " " : "") << m_(r, c).real() << (m_(r, c).imag() < 0 ? "" : "+")
          << m_(r, c).imag() << "i";
    }
    out << "\n";
  }
  return out.str();
}

bool scalar_free_equal(const ScalarFreeMatrix& a, const ScalarFreeMatrix& b,
                       double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("scalar_free_equal: dimension mismatch");
  }
  const auto& ma = a.matrix();
  const auto& mb = b.matrix();
  if (ma.size() == 0) return true;
  Eigen::Index r = 0, c = 0;
  const double amax = ma.cwiseAbs().maxCoeff(&r, &c);
  const double bmax = mb.cwiseAbs().maxCoeff();
  if (amax < tol) return bmax < tol;
  const Complex z = mb(r, c) / ma(r, c);
  if (std::abs(z) < tol) return false;
  const double err = (mb - z * ma).cwiseAbs().maxCoeff();
  return err <= tol * std::max(1.0, bmax);
}

namespace {

/// Dense tensor; label i owns bit (rank - 1 - i) of the flat index.
struct Tensor {
  std::vector<int> labels;
  std::vector<Complex> data;

  std::size_t rank() const { return labels.size(); }
};

std::size_t bit_of(std::size_t index, std::size_t rank, std::size_t pos) {
  return (index >> (rank - 1 - pos)) & 1U;
}

void normalise(Tensor& t) {
  double m = 0.0;
  for (const Complex& x : t.data) m = std::max(m, std::abs(x));
  if (m > 0.0) {
    for (Complex& x : t.data) x /= m;
  }
}

/// Sums over repeated labels within one tensor (self-loops).
Tensor trace_repeats(const Tensor& t) {
  std::map<int, std::vector<std::size_t>> where;
  for (std::size_t i = 0; i < t.rank(); ++i) where[t.labels[i]].push_back(i);
  bool any = false;
  for (const auto& [l, pos] : where) {
    if (pos.size() > 2) throw InvalidDiagramError("label used more than twice");
    any |= pos.size() == 2;
  }
  if (!any) return t;

  Tensor out;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < t.rank(); ++i) {
    if (where[t.labels[i]].size() == 1) {
      keep.push_back(i);
      out.labels.push_back(t.labels[i]);
    }
  }
  out.data.assign(std::size_t{1} << out.rank(), Complex{});
  for (std::size_t idx = 0; idx < t.data.size(); ++idx) {
    bool diagonal = true;
    for (const auto& [l, pos] : where) {
      if (pos.size() == 2 &&
          bit_of(idx, t.rank(), pos[0]) != bit_of(idx, t.rank(), pos[1])) {
        diagonal = false;
        break;
      }
    }
    if (!diagonal) continue;
    std::size_t o = 0;
    for (std::size_t k : keep) o = (o << 1) | bit_of(idx, t.rank(), k);
    out.data[o] += t.data[idx];
  }
  return out;
}

Tensor contract(const Tensor& a, const Tensor& b) {
  std::vector<std::size_t> a_free, a_shared, b_free, b_shared;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    auto it = std::find(b.labels.begin(), b.labels.end(), a.labels[i]);
    if (it == b.labels.end()) {
      a_free.push_back(i);
    } else {
      a_shared.push_back(i);
      b_shared.push_back(static_cast<std::size_t>(it - b.labels.begin()));
    }
  }
  for (std::size_t i = 0; i < b.rank(); ++i) {
    if (std::find(a.labels.begin(), a.labels.end(), b.labels[i]) == a.labels.end()) {
      b_free.push_back(i);
    }
  }
  Tensor out;
  for (std::size_t i : a_free) out.labels.push_back(a.labels[i]);
  for (std::size_t i : b_free) out.labels.push_back(b.labels[i]);
  const std::size_t nf = out.rank();
  const std::size_t ns = a_shared.size();
  out.data.assign(std::size_t{1} << nf, Complex{});

  auto scatter = [](std::size_t bits, std::size_t width,
                    const std::vector<std::size_t>& positions, std::size_t rank) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < positions.size(); ++k) {
      std::size_t bit = (bits >> (width - 1 - k)) & 1U;
      idx |= bit << (rank - 1 - positions[k]);
    }
    return idx;
  };

  const std::size_t na = a_free.size();
  const std::size_t nb = b_free.size();
  for (std::size_t fa = 0; fa < (std::size_t{1} << na); ++fa) {
    const std::size_t base_a = scatter(fa, na, a_free, a.rank());
    for (std::size_t fb = 0; fb < (std::size_t{1} << nb); ++fb) {
      const std::size_t base_b = scatter(fb, nb, b_free, b.rank());
      Complex sum{};
      for (std::size_t s = 0; s < (std::size_t{1} << ns); ++s) {
        const Complex x = a.data[base_a | scatter(s, ns, a_shared, a.rank())];
        if (x == Complex{}) continue;
        sum += x * b.data[base_b | scatter(s, ns, b_shared, b.rank())];
      }
      out.data[(fa << nb) | fb] = sum;
    }
  }
  normalise(out);
  return out;
}

Tensor spider_tensor(const VertexKind& k, std::vector<int> labels) {
  Tensor t;
  t.labels = std::move(labels);
  const std::size_t n = t.rank();
  t.data.assign(std::size_t{1} << n, Complex{});
  static const std::array<Complex, 4> kPowersOfI = {
      Complex{1, 0}, Complex{0, 1}, Complex{-1, 0}, Complex{0, -1}};
  const Complex phase_factor =
      kPowersOfI[static_cast<std::size_t>(k.phase.quarter_turns())];
  switch (k.type) {
    case VertexType::Z:
      t.data[0] += 1.0;
      t.data[t.data.size() - 1] += phase_factor;
      break;
    case VertexType::X:
      for (std::size_t i = 0; i < t.data.size(); ++i) {
        const double sign = (std::popcount(i) % 2 == 0) ? 1.0 : -1.0;
        t.data[i] = 1.0 + phase_factor * sign;
      }
      break;
    case VertexType::H:
      if (n != 2) throw InvalidDiagramError("H vertex must have degree 2");
      t.data = {1.0, 1.0, 1.0, -1.0};
      break;
    case VertexType::Boundary:
      t.data = {1.0, 0.0, 0.0, 1.0};
      break;
  }
  return trace_repeats(t);
}

}  // namespace

ScalarFreeMatrix interpret(const Diagram& d, const SemanticsOptions& opts) {
  d.validate();
  const std::size_t nin = d.num_inputs();
  const std::size_t nout = d.num_outputs();
  if (std::max(nin, nout) > opts.max_qubits) {
    throw SemanticsSizeError("diagram has " + std::to_string(std::max(nin, nout)) +
                             " wires; bound is " + std::to_string(opts.max_qubits));
  }

  // Edge labels are 0..E-1; boundary open labels follow.
  std::map<VertexId, std::vector<int>> legs;
  int next_label = 0;
  for (const auto& [a, b] : d.edges()) {
    legs[a].push_back(next_label);
    legs[b].push_back(next_label);
    ++next_label;
  }
  std::map<VertexId, int> open_label;
  std::vector<Tensor> tensors;
  for (VertexId v : d.vertex_ids()) {
    const VertexKind& k = d.kind(v);
    if (k.is_boundary()) {
      open_label[v] = next_label;
      tensors.push_back(spider_tensor(k, {next_label, legs[v].at(0)}));
      ++next_label;
    } else {
      tensors.push_back(spider_tensor(k, legs[v]));
    }
  }

  while (tensors.size() > 1) {
    std::size_t best_i = 0, best_j = 1;
    std::size_t best_cost = SIZE_MAX;
    bool best_shares = false;
    for (std::size_t i = 0; i < tensors.size(); ++i) {
      for (std::size_t j = i + 1; j < tensors.size(); ++j) {
        std::size_t shared = 0;
        for (int l : tensors[i].labels) {
          shared += std::count(tensors[j].labels.begin(), tensors[j].labels.end(), l);
        }
        const bool shares = shared > 0;
        const std::size_t cost = tensors[i].rank() + tensors[j].rank() - 2 * shared;
        if ((shares && !best_shares) || (shares == best_shares && cost < best_cost)) {
          best_i = i;
          best_j = j;
          best_cost = cost;
          best_shares = shares;
        }
      }
    }
    Tensor merged = contract(tensors[best_i], tensors[best_j]);
    tensors.erase(tensors.begin() + static_cast<std::ptrdiff_t>(best_j));
    tensors[best_i] = std::move(merged);
  }

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(Eigen::Index{1} << nout,
                                              Eigen::Index{1} << nin);
  if (tensors.empty()) {
    m(0, 0) = 1.0;
    return ScalarFreeMatrix(std::move(m));
  }
  const Tensor& t = tensors.front();
  std::vector<std::size_t> pos_of_label(static_cast<std::size_t>(next_label), 0);
  for (std::size_t i = 0; i < t.rank(); ++i) {
    pos_of_label[static_cast<std::size_t>(t.labels[i])] = i;
  }
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      std::size_t idx = 0;
      for (std::size_t q = 0; q < nout; ++q) {
        const std::size_t bit = (static_cast<std::size_t>(r) >> (nout - 1 - q)) & 1U;
        const int l = open_label[d.outputs()[q]];
        idx |= bit << (t.rank() - 1 - pos_of_label[static_cast<std::size_t>(l)]);
      }
      for (std::size_t q = 0; q < nin; ++q) {
        const std::size_t bit = (static_cast<std::size_t>(c) >> (nin - 1 - q)) & 1U;
        const int l = open_label[d.inputs()[q]];
        idx |= bit << (t.rank() - 1 - pos_of_label[static_cast<std::size_t>(l)]);
      }
      m(r, c) = t.data[idx];
    }
  }
  return ScalarFreeMatrix(std::move(m));
}

}  // namespace zxcliff
