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

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "zxcliff/diagram.hpp"
#include "zxcliff/semantics.hpp"

namespace zxcliff {

/**
 * Canonical text key of a matrix up to scalar: divide by the first entry of
 * largest magnitude and round to 12 decimals.
 */
std::string matrix_key(const ScalarFreeMatrix& m);

/** input - kinds[0] - ... - kinds[k-1] - output. */
Diagram line_diagram(const std::vector<VertexKind>& kinds);

struct CC1Entry {
  std::string name;
  Diagram diagram;
  ScalarFreeMatrix matrix;
};

/** The 24 minimal single-qubit forms. */
class CC1Table {
 public:
  CC1Table();

  const std::vector<CC1Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  /** Throws NotAClifford when `m` is not a single-qubit Clifford. */
  const CC1Entry& lookup(const ScalarFreeMatrix& m) const;
  std::optional<std::size_t> index_of(const ScalarFreeMatrix& m) const;
  /** `d` is iso_equal to one of the entries. */
  bool contains(const Diagram& d) const;

 private:
  std::vector<CC1Entry> entries_;
  std::unordered_map<std::string, std::size_t> by_key_;
};

const CC1Table& cc1_table();

/**
 * Compares every entry against all line diagrams of at most three vertices
 * drawn from Z(k) and X(k). Returns false, with a note in `report`, if
 * any entry has a smaller equivalent.
 */
bool cc1_minimality_check(std::string* report = nullptr);

enum class CC2Shape { Local, Swapped, Cnot, CnotSwapped };

struct CC2Member {
  CC2Shape shape = CC2Shape::Local;
  std::size_t c1 = 0, c2 = 0;  ///< CC1 indices on wires 0 and 1
  std::size_t a = 0, b = 0;    ///< trailing parameters, 0..2
  Diagram diagram;
};

/** The 11520 minimal two-qubit forms. */
class CC2Family {
 public:
  CC2Family();

  const std::vector<CC2Member>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  std::size_t distinct_keys() const { return by_key_.size(); }
  const CC2Member& lookup(const ScalarFreeMatrix& u) const;
  std::optional<std::size_t> index_of(const ScalarFreeMatrix& u) const;

 private:
  std::vector<CC2Member> members_;
  std::unordered_map<std::string, std::size_t> by_key_;
};

const CC2Family& cc2_family();

/** The member with the given semantics; throws NotAClifford. */
const Diagram& cc2_lookup(const ScalarFreeMatrix& u);

/** Two-wire diagram iso_equal to the member sharing its semantics. */
bool cc2_contains(const Diagram& d);

std::string_view to_string(CC2Shape s);

}  // namespace zxcliff
