// Copyright 2026 The eamtp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace eamtp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller supplied a value outside the operation's domain.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Operand shapes do not agree (matrix product, partial trace, ...).
class DimensionMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Raised when a matrix (usually a Kraus operator) has no inverse.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A post-selected branch has probability below the zero-branch threshold.
class ZeroProbabilityBranch : public Error {
 public:
  ZeroProbabilityBranch(const std::string& label, double probability)
      : Error("branch '" + label + "' has probability " + std::to_string(probability)),
        label_(label),
        probability_(probability) {}

  const std::string& label() const { return label_; }
  double probability() const { return probability_; }

 private:
  std::string label_;
  double probability_;
};

}  // namespace eamtp
