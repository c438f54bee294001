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

#ifndef SIGNED_TORIC_ERRORS_H_
#define SIGNED_TORIC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace signed_toric {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(Format(message, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string Format(const std::string& message, int line, int column) {
    if (line <= 0) return message;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + message;
  }

  int line_;
  int column_;
};

// Well-formed input that violates a precondition of an operation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed the configured cap.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Indicates a bug.
class InvariantFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace signed_toric

#endif  // SIGNED_TORIC_ERRORS_H_
