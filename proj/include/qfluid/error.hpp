// Copyright 2026 The qfluid Authors
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
/**
 * @file
 * Exception types raised by the qfluid library.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace qfluid {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A requested allocation exceeds the configured memory guard.
class ResourceLimitError : public Error {
  public:
    using Error::Error;
};

/// A state or field with zero norm was supplied where a normalizable one is
/// required.
class DegenerateStateError : public Error {
  public:
    using Error::Error;
};

/// Array sizes or qubit counts do not match.
class ShapeError : public Error {
  public:
    using Error::Error;
};

/// Qubit or basis index out of range, or coincident qubits on a two-qubit
/// gate.
class IndexError : public Error {
  public:
    using Error::Error;
};

/// Circuit qubit layouts do not line up when chaining circuits.
class LayoutError : public Error {
  public:
    using Error::Error;
};

/// Non-finite input or a numerical consistency check failed.
class NumericError : public Error {
  public:
    using Error::Error;
};

/// Pearson correlation requested for a constant array.
class UndefinedCorrelationError : public Error {
  public:
    using Error::Error;
};

/// Two curves cross more than once.
class AmbiguityError : public Error {
  public:
    using Error::Error;
};

/// Invalid parameter value. `field()` names the offending parameter.
class ConfigError : public Error {
  public:
    ConfigError(std::string field, const std::string &what)
        : Error(field + ": " + what), field_(std::move(field)) {}
    [[nodiscard]] const std::string &field() const noexcept { return field_; }

  private:
    std::string field_;
};

} // namespace qfluid
