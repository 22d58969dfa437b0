// Copyright 2026 The qnil Authors
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
#include <vector>

namespace qnil {

enum class ErrorKind {
    kParse,
    kArity,
    kUniverse,
    kSector,
    kParity,
    kBody,
    kNotInvertible,
    kShape,
    kIndex,
    kSplit,
    kRange,
    kInvalidArgument,
};

/// Machine-readable name reported by the CLI, e.g. "NotInvertibleError".
const char *error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);
    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

/// Syntax error in a state expression. Line and column are 1-based.
class ParseError : public Error {
   public:
    ParseError(int line, int column, std::vector<std::string> expected, const std::string &detail);
    int line() const noexcept {
        return line_;
    }
    int column() const noexcept {
        return column_;
    }
    const std::vector<std::string> &expected() const noexcept {
        return expected_;
    }

   private:
    int line_;
    int column_;
    std::vector<std::string> expected_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string &message);

}  // namespace qnil
