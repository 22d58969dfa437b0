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

#include "qnil/errors.hpp"

namespace qnil {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kParse:
            return "ParseError";
        case ErrorKind::kArity:
            return "ArityError";
        case ErrorKind::kUniverse:
            return "UniverseError";
        case ErrorKind::kSector:
            return "SectorError";
        case ErrorKind::kParity:
            return "ParityError";
        case ErrorKind::kBody:
            return "BodyError";
        case ErrorKind::kNotInvertible:
            return "NotInvertibleError";
        case ErrorKind::kShape:
            return "ShapeError";
        case ErrorKind::kIndex:
            return "IndexError";
        case ErrorKind::kSplit:
            return "SplitError";
        case ErrorKind::kRange:
            return "RangeError";
        case ErrorKind::kInvalidArgument:
            return "InvalidArgumentError";
    }
    return "UnknownError";
}

Error::Error(ErrorKind kind, const std::string &message) : std::runtime_error(message), kind_(kind) {
}

static std::string describe_parse_error(
    int line, int column, const std::vector<std::string> &expected, const std::string &detail) {
    std::string out = std::to_string(line) + ":" + std::to_string(column) + ": " + detail;
    if (!expected.empty()) {
        out += "; expected one of:";
        for (const auto &e : expected) {
            out += " " + e;
        }
    }
    return out;
}

ParseError::ParseError(int line, int column, std::vector<std::string> expected, const std::string &detail)
    : Error(ErrorKind::kParse, describe_parse_error(line, column, expected, detail)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {
}

void fail(ErrorKind kind, const std::string &message) {
    throw Error(kind, message);
}

}  // namespace qnil
