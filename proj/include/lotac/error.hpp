// Copyright 2026 The lotac Authors
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
#include <string_view>

namespace lotac {

enum class ErrorKind {
  kSyntax,
  kIndexOutOfRange,
  kForeignGenerator,
  kInvalidPresentation,
  kNotDecomposable,
  kChainMismatch,
  kSelfReference,
  kNegativeExponent,
  kInvalidArgument,
  kMove,
  kSchema,
  kOverflow,
  kCompile,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSyntax: return "SyntaxError";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kForeignGenerator: return "ForeignGenerator";
    case ErrorKind::kInvalidPresentation: return "InvalidPresentation";
    case ErrorKind::kNotDecomposable: return "NotDecomposable";
    case ErrorKind::kChainMismatch: return "ChainMismatch";
    case ErrorKind::kSelfReference: return "SelfReference";
    case ErrorKind::kNegativeExponent: return "NegativeExponent";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kMove: return "MoveError";
    case ErrorKind::kSchema: return "SchemaError";
    case ErrorKind::kOverflow: return "Overflow";
    case ErrorKind::kCompile: return "CompileError";
  }
  return "Error";
}

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Malformed word text; `position` is a byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorKind::kSyntax,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Malformed certificate document; `location` is a JSON pointer.
class SchemaError : public Error {
 public:
  SchemaError(std::string location, const std::string& what)
      : Error(ErrorKind::kSchema, what + " at " + location),
        location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

}  // namespace lotac
