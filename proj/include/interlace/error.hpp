// Copyright 2026 The Interlace Authors.
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

namespace interlace {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A committee refers to a candidate outside the election.
class InvalidCommitteeError : public Error {
 public:
  using Error::Error;
};

/// The instance is too small for the requested construction (e.g. a pair
/// instance of a single voter).
class DegenerateInstanceError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured evaluation limit.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// A certificate or order does not witness the claimed domain.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an algorithm does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A malformed argument (non-permutation, alpha out of range, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Malformed election file. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace interlace
