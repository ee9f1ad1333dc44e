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

#pragma once

#include <complex>
#include <cstddef>
#include <string>

#include <Eigen/Dense>

#include "zxcliff/diagram.hpp"

namespace zxcliff {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;

/**
 * A dense complex matrix regarded up to a nonzero global scalar.
 *
 * Rows index outputs and columns index inputs; qubit 0 is the most
 * significant bit of either index.
 */
class ScalarFreeMatrix {
 public:
  ScalarFreeMatrix() = default;
  explicit ScalarFreeMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {}

  static ScalarFreeMatrix identity(std::size_t qubits);

  Eigen::Index rows() const { return m_.rows(); }
  Eigen::Index cols() const { return m_.cols(); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  Complex operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

  /** Matrix product `this * other` (apply `other` first). */
  ScalarFreeMatrix operator*(const ScalarFreeMatrix& other) const;
  ScalarFreeMatrix kron(const ScalarFreeMatrix& other) const;
  ScalarFreeMatrix adjoint() const;

  /// Row-major "re+imi" listing, for debugging.
  std::string to_string() const;

 private:
  Eigen::MatrixXcd m_;
};

/**
 * True iff b = z a for some nonzero z, to within tol * max(1, |b|_inf).
 *
 * z is read off at the largest-magnitude entry of a. Two (near-)zero
 * matrices are equal; zero and nonzero are not.
 */
bool scalar_free_equal(const ScalarFreeMatrix& a, const ScalarFreeMatrix& b,
                       double tol = kDefaultTolerance);

struct SemanticsOptions {
  /// Upper bound on max(num_inputs, num_outputs).
  std::size_t max_qubits = 8;
};

/**
 * Contracts the diagram as a tensor network.
 *
 * Z(a) spiders are the GHZ-like copy tensors with e^{ia} on the all-ones
 * entry, X spiders their Hadamard conjugates and H boxes the Hadamard
 * matrix. Scalars are dropped freely.
 */
ScalarFreeMatrix interpret(const Diagram& d, const SemanticsOptions& opts = {});

}  // namespace zxcliff
