// Copyright 2026 The tlhad Authors
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
#include <stdexcept>
#include <string>

namespace tlhad {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible with the requested operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A pivot fell below the relative singularity threshold.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the operation's domain (non-coprime order,
/// even F4 index, zero parameter, non-finite entry, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Serialized input is malformed or inconsistent.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// An entrywise reciprocal hit a zero entry.
class ZeroEntryError : public Error {
 public:
  ZeroEntryError(std::size_t row, std::size_t col)
      : Error("zero entry at (" + std::to_string(row) + ", " +
              std::to_string(col) + ")"),
        row_(row),
        col_(col) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

}  // namespace tlhad
