// Copyright 2026 The Authors.
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

namespace wsmc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a precondition on an argument is violated.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A solution references a set index outside the instance.
class InvalidSolutionError : public Error {
 public:
  using Error::Error;
};

/// Malformed tabular or JSON input. The message names the row and column.
class IngestError : public Error {
 public:
  using Error::Error;
};

/// A solver could not finish (iteration cap, size guard, numerical trouble).
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace wsmc
