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

#include <compare>
#include <cstdint>
#include <numbers>

namespace zxcliff {

/**
 * A stabilizer phase k * pi/2, stored as the number of quarter turns
 * modulo 4.
 */
class Phase {
 public:
  constexpr Phase() = default;
  constexpr explicit Phase(int quarter_turns)
      : quarter_turns_(static_cast<std::uint8_t>(((quarter_turns % 4) + 4) % 4)) {}

  static constexpr Phase zero() { return Phase(0); }
  static constexpr Phase quarter() { return Phase(1); }
  static constexpr Phase half() { return Phase(2); }
  static constexpr Phase three_quarters() { return Phase(3); }

  constexpr int quarter_turns() const { return quarter_turns_; }
  constexpr bool is_zero() const { return quarter_turns_ == 0; }
  /// A Pauli phase (pi).
  constexpr bool is_pauli() const { return quarter_turns_ == 2; }
  /// +-pi/2, the phases that are neither trivial nor Pauli.
  constexpr bool is_proper() const { return (quarter_turns_ & 1) != 0; }

  double radians() const { return quarter_turns_ * std::numbers::pi / 2.0; }

  constexpr Phase operator+(Phase other) const {
    return Phase(quarter_turns_ + other.quarter_turns_);
  }
  constexpr Phase operator-() const { return Phase(4 - quarter_turns_); }
  constexpr Phase operator-(Phase other) const { return *this + (-other); }
  constexpr Phase& operator+=(Phase other) { return *this = *this + other; }

  constexpr auto operator<=>(const Phase&) const = default;

 private:
  std::uint8_t quarter_turns_ = 0;
};

}  // namespace zxcliff
