// Copyright 2026 The tom Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tom {

// Base class of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IllTyped : Error {
  using Error::Error;
};

struct TypeMismatch : Error {
  using Error::Error;
};

// A term handed to an operation that requires beta-normal eta-long input
// was not in that form.
struct NotNormal : Error {
  using Error::Error;
};

struct InvalidOccurrence : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct NotThirdOrder : Error {
  using Error::Error;
};

struct RhsNotGround : Error {
  using Error::Error;
};

struct InvalidSubstitution : Error {
  using Error::Error;
};

struct NotASolution : Error {
  using Error::Error;
};

struct NotAccessible : Error {
  using Error::Error;
};

// Raised when a property that the depth-bound argument guarantees is
// observed to fail. Seeing one means there is a bug somewhere.
struct InvariantViolation : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(int line, int column, std::string expected, std::string detail)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": expected " + expected +
              (detail.empty() ? "" : " (" + detail + ")")),
        line(line),
        column(column),
        expected(std::move(expected)) {}

  int line;
  int column;
  std::string expected;
};

}  // namespace tom
