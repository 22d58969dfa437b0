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

#include <memory>
#include <string>
#include <string_view>

namespace qnil::expr {

/// Nested parentheses and unary minus beyond this depth are rejected.
inline constexpr int kMaxNesting = 200;
/// Longer inputs are rejected; it bounds the depth of left-associated chains.
inline constexpr int kMaxTokens = 20000;

struct Position {
    int line = 1;
    int column = 1;
};

enum class NodeKind {
    kNumber,     // nonnegative decimal literal
    kImaginary,  // i
    kSqrt,       // sqrt(decimal)
    kKet,        // |01.>, |B>, |F2>
    kGenerator,  // e3, x1, xb1, t2
    kAdd,
    kSub,
    kMul,
    kDiv,  // rhs is always a number node
    kNeg,
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    NodeKind kind;
    double value = 0;  // literal for kNumber, radicand for kSqrt
    std::string text;  // ket label without delimiters, or generator name
    NodePtr lhs;       // also the operand of kNeg
    NodePtr rhs;
    Position pos;
};

/// Parsed state definition.
struct StateExpr {
    NodePtr root;
};

/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor | '/' number)*
///   factor := number | ket | gen | '(' expr ')' | '-' factor
///   number := decimal | 'i' | 'sqrt' '(' decimal ')'
/// Whitespace is insignificant and '#' starts a comment running to the end of
/// the line. Throws ParseError with the 1-based line:column of the offending
/// token, or ArityError when kets of different length or kind are mixed.
StateExpr parse(std::string_view text);

/// Fully parenthesized canonical text; parse(print(e)) is structurally equal
/// to e.
std::string print(const StateExpr &e);

/// Structural equality, ignoring source positions.
bool same_structure(const Node *a, const Node *b);

}  // namespace qnil::expr
