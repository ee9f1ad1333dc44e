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

#include <stdexcept>
#include <string>

namespace zxcliff {

/** Base class of every error raised by the library. */
class ZXCliffError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDiagramError : public ZXCliffError {
 public:
  using ZXCliffError::ZXCliffError;
};

class CompositionArityError : public ZXCliffError {
 public:
  using ZXCliffError::ZXCliffError;
};

class SemanticsSizeError : public ZXCliffError {
 public:
  using ZXCliffError::ZXCliffError;
};

class ShapeError : public ZXCliffError {
 public:
  using ZXCliffError::ZXCliffError;
};

class CircuitParseError : public ZXCliffError {
 public:
  CircuitParseError(std::size_t line, const std::string& what)
      : ZXCliffError("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class InvalidGateError : public ZXCliffError {
 public:
  using ZXCliffError::ZXCliffError;
};

class StaleMatchError : public ZXCliffError {
 public:
  using ZXCliffError::ZXCliffError;
};

class ReplayDivergence : public ZXCliffError {
 public:
  using ZXCliffError::ZXCliffError;
};

class UnsoundRuleError : public ZXCliffError {
 public:
  explicit UnsoundRuleError(const std::string& rule, const std::string& reason = "is unsound")
      : ZXCliffError("rule '" + rule + "' " + reason), rule_(rule) {}
  const std::string& rule_name() const { return rule_; }

 private:
  std::string rule_;
};

class RuleFormatError : public ZXCliffError {
 public:
  using ZXCliffError::ZXCliffError;
};

class TargetKindError : public ZXCliffError {
 public:
  using ZXCliffError::ZXCliffError;
};

class NotACircuit : public ZXCliffError {
 public:
  using ZXCliffError::ZXCliffError;
};

class NotALineGraph : public ZXCliffError {
 public:
  using ZXCliffError::ZXCliffError;
};

class CrossEdgeColourError : public ZXCliffError {
 public:
  using ZXCliffError::ZXCliffError;
};

class NotAClifford : public ZXCliffError {
 public:
  using ZXCliffError::ZXCliffError;
};

/** An optimiser self-check failed: lost circuit shape or changed semantics. */
class VerificationError : public ZXCliffError {
 public:
  using ZXCliffError::ZXCliffError;
};

}  // namespace zxcliff
