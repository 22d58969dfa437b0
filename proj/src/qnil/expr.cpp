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

#include "qnil/expr.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <vector>

#include "qnil/errors.hpp"

namespace qnil::expr {

namespace {

enum class Tok { kNumber, kIdent, kKet, kPlus, kMinus, kStar, kSlash, kLParen, kRParen, kEnd, kUnknown };

struct Token {
    Tok kind;
    std::string text;
    Position pos;
};

const char *token_description(Tok kind) {
    switch (kind) {
        case Tok::kNumber:
            return "number";
        case Tok::kIdent:
            return "identifier";
        case Tok::kKet:
            return "ket";
        case Tok::kPlus:
            return "'+'";
        case Tok::kMinus:
            return "'-'";
        case Tok::kStar:
            return "'*'";
        case Tok::kSlash:
            return "'/'";
        case Tok::kLParen:
            return "'('";
        case Tok::kRParen:
            return "')'";
        case Tok::kEnd:
            return "end of input";
        case Tok::kUnknown:
            return "character";
    }
    return "?";
}

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

bool is_alpha(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

class Lexer {
   public:
    explicit Lexer(std::string_view text) : text_(text) {
    }

    Token next() {
        skip_blank();
        Position start = pos_;
        if (at_end()) {
            return {Tok::kEnd, "", start};
        }
        char c = peek();
        if (is_digit(c) || (c == '.' && offset_ + 1 < text_.size() && is_digit(text_[offset_ + 1]))) {
            std::string s;
            while (!at_end() && is_digit(peek())) {
                s += take();
            }
            if (!at_end() && peek() == '.') {
                s += take();
                while (!at_end() && is_digit(peek())) {
                    s += take();
                }
            }
            return {Tok::kNumber, s, start};
        }
        if (is_alpha(c)) {
            std::string s;
            while (!at_end() && (is_alpha(peek()) || is_digit(peek()))) {
                s += take();
            }
            return {Tok::kIdent, s, start};
        }
        if (c == '|') {
            take();
            return lex_ket(start);
        }
        take();
        switch (c) {
            case '+':
                return {Tok::kPlus, "+", start};
            case '-':
                return {Tok::kMinus, "-", start};
            case '*':
                return {Tok::kStar, "*", start};
            case '/':
                return {Tok::kSlash, "/", start};
            case '(':
                return {Tok::kLParen, "(", start};
            case ')':
                return {Tok::kRParen, ")", start};
            default:
                break;
        }
        // Swallow the rest of a multibyte UTF-8 sequence so it reports once.
        std::string s(1, c);
        while (!at_end() && (static_cast<unsigned char>(peek()) & 0xC0) == 0x80) {
            s += take();
        }
        return {Tok::kUnknown, s, start};
    }

   private:
    Token lex_ket(Position start) {
        std::string label;
        while (!at_end() && peek() != '>') {
            char c = peek();
            bool allowed = c == '0' || c == '1' || c == '.' || c == 'B' || c == 'F' || is_digit(c);
            if (!allowed) {
                std::vector<std::string> expected = {"'0'", "'1'", "'.'", "'B'", "'F'", "'>'"};
                throw ParseError(pos_.line, pos_.column, expected, "invalid character inside ket");
            }
            label += take();
        }
        if (at_end()) {
            throw ParseError(pos_.line, pos_.column, {"'>'"}, "unterminated ket");
        }
        take();
        bool digit_ket = !label.empty() && std::all_of(label.begin(), label.end(), [](char c) {
            return c == '0' || c == '1' || c == '.';
        });
        bool sector_ket = !label.empty() && (label[0] == 'B' || label[0] == 'F') &&
                          std::all_of(label.begin() + 1, label.end(), is_digit) &&
                          (label.size() == 2 || label.size() == 1 || label[1] != '0');
        if (!digit_ket && !sector_ket) {
            throw ParseError(start.line, start.column, {},
                             "malformed ket '|" + label + ">' (use |0>, |1>, |.> strings or |B>, |F>, |B2>)");
        }
        if (sector_ket && label.size() > 6) {
            throw ParseError(start.line, start.column, {}, "sector ket label too long");
        }
        return {Tok::kKet, label, start};
    }

    bool at_end() const {
        return offset_ >= text_.size();
    }
    char peek() const {
        return text_[offset_];
    }
    char take() {
        char c = text_[offset_++];
        if (c == '\n') {
            pos_.line++;
            pos_.column = 1;
        } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
            pos_.column++;
        }
        return c;
    }
    void skip_blank() {
        while (!at_end()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
                take();
            } else if (c == '#') {
                while (!at_end() && peek() != '\n') {
                    take();
                }
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    size_t offset_ = 0;
    Position pos_;
};

NodePtr make(NodeKind kind, Position pos, double value = 0, std::string text = {}, NodePtr lhs = nullptr,
             NodePtr rhs = nullptr) {
    return std::make_shared<const Node>(Node{kind, value, std::move(text), std::move(lhs), std::move(rhs), pos});
}

// Accepts e<k>, x<k>, xb<k>, t<k> with 1 <= k <= 64 and no leading zero.
bool is_generator_name(const std::string &s) {
    size_t prefix = 0;
    if (s.starts_with("xb")) {
        prefix = 2;
    } else if (s.starts_with("e") || s.starts_with("x") || s.starts_with("t")) {
        prefix = 1;
    } else {
        return false;
    }
    std::string_view digits(s.data() + prefix, s.size() - prefix);
    if (digits.empty() || digits.size() > 2 || digits[0] == '0' || !std::all_of(digits.begin(), digits.end(), is_digit)) {
        return false;
    }
    int k = 0;
    std::from_chars(digits.data(), digits.data() + digits.size(), k);
    return k >= 1 && k <= 64;
}

class Parser {
   public:
    explicit Parser(std::string_view text) : lexer_(text) {
        cur_ = lexer_.next();
    }

    StateExpr parse_all() {
        NodePtr root = parse_expr();
        expect_end();
        return {root};
    }

   private:
    bool check(Tok kind) {
        expected_.push_back(token_description(kind));
        return cur_.kind == kind;
    }

    Token advance() {
        if (++tokens_ > kMaxTokens) {
            throw ParseError(cur_.pos.line, cur_.pos.column, {},
                             "expression longer than " + std::to_string(kMaxTokens) + " tokens");
        }
        Token t = cur_;
        cur_ = lexer_.next();
        expected_.clear();
        return t;
    }

    [[noreturn]] void error(const std::string &detail) {
        std::vector<std::string> expected;
        for (const auto &e : expected_) {
            if (std::find(expected.begin(), expected.end(), e) == expected.end()) {
                expected.push_back(e);
            }
        }
        throw ParseError(cur_.pos.line, cur_.pos.column, expected, detail);
    }

    [[noreturn]] void unexpected() {
        if (cur_.kind == Tok::kEnd) {
            error("unexpected end of input");
        }
        error("unexpected " + std::string(token_description(cur_.kind)) + " '" + cur_.text + "'");
    }

    void expect_end() {
        if (!check(Tok::kEnd)) {
            // Operators that would have continued the expression.
            for (Tok t : {Tok::kPlus, Tok::kMinus, Tok::kStar, Tok::kSlash}) {
                check(t);
            }
            unexpected();
        }
    }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        while (true) {
            if (check(Tok::kPlus)) {
                Position p = advance().pos;
                lhs = make(NodeKind::kAdd, p, 0, {}, lhs, parse_term());
            } else if (check(Tok::kMinus)) {
                Position p = advance().pos;
                lhs = make(NodeKind::kSub, p, 0, {}, lhs, parse_term());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_factor();
        while (true) {
            if (check(Tok::kStar)) {
                Position p = advance().pos;
                lhs = make(NodeKind::kMul, p, 0, {}, lhs, parse_factor());
            } else if (check(Tok::kSlash)) {
                Position p = advance().pos;
                NodePtr rhs = parse_number();
                if (rhs == nullptr) {
                    unexpected();
                }
                lhs = make(NodeKind::kDiv, p, 0, {}, lhs, rhs);
            } else {
                return lhs;
            }
        }
    }

    // decimal | 'i' | 'sqrt' '(' decimal ')'; nullptr when the current token
    // does not start a number.
    NodePtr parse_number() {
        if (check(Tok::kNumber)) {
            Token t = advance();
            return make(NodeKind::kNumber, t.pos, decimal_value(t));
        }
        expected_.push_back("'i'");
        expected_.push_back("'sqrt'");
        if (cur_.kind == Tok::kIdent && cur_.text == "i") {
            return make(NodeKind::kImaginary, advance().pos);
        }
        if (cur_.kind == Tok::kIdent && cur_.text == "sqrt") {
            Position p = advance().pos;
            if (!check(Tok::kLParen)) {
                unexpected();
            }
            advance();
            if (!check(Tok::kNumber)) {
                unexpected();
            }
            double radicand = decimal_value(advance());
            if (!check(Tok::kRParen)) {
                unexpected();
            }
            advance();
            return make(NodeKind::kSqrt, p, radicand);
        }
        return nullptr;
    }

    NodePtr parse_factor() {
        if (NodePtr n = parse_number()) {
            return n;
        }
        if (check(Tok::kKet)) {
            Token t = advance();
            return make(NodeKind::kKet, t.pos, 0, t.text);
        }
        expected_.push_back("generator");
        if (cur_.kind == Tok::kIdent) {
            if (!is_generator_name(cur_.text)) {
                error("unknown identifier '" + cur_.text + "' (generators are e<k>, x<k>, xb<k>, t<k>, 1<=k<=64)");
            }
            Token t = advance();
            return make(NodeKind::kGenerator, t.pos, 0, t.text);
        }
        if (check(Tok::kLParen)) {
            Token open = advance();
            enter(open.pos);
            NodePtr inner = parse_expr();
            if (!check(Tok::kRParen)) {
                unexpected();
            }
            advance();
            depth_--;
            return inner;
        }
        if (check(Tok::kMinus)) {
            Token minus = advance();
            enter(minus.pos);
            NodePtr operand = parse_factor();
            depth_--;
            return make(NodeKind::kNeg, minus.pos, 0, {}, operand);
        }
        unexpected();
    }

    void enter(Position p) {
        if (++depth_ > kMaxNesting) {
            throw ParseError(p.line, p.column, {}, "nesting deeper than " + std::to_string(kMaxNesting));
        }
    }

    static double decimal_value(const Token &t) {
        double v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
            throw ParseError(t.pos.line, t.pos.column, {}, "number '" + t.text + "' out of range");
        }
        return v;
    }

    Lexer lexer_;
    Token cur_;
    std::vector<std::string> expected_;
    int depth_ = 0;
    int tokens_ = 0;
};

void collect_kets(const Node *n, std::vector<const Node *> &out) {
    // Iterative walk: the tree can be deep along left-associated chains.
    std::vector<const Node *> stack = {n};
    while (!stack.empty()) {
        const Node *cur = stack.back();
        stack.pop_back();
        if (cur == nullptr) {
            continue;
        }
        if (cur->kind == NodeKind::kKet) {
            out.push_back(cur);
        }
        stack.push_back(cur->lhs.get());
        stack.push_back(cur->rhs.get());
    }
}

void check_kets(const StateExpr &e) {
    std::vector<const Node *> kets;
    collect_kets(e.root.get(), kets);
    std::sort(kets.begin(), kets.end(), [](const Node *a, const Node *b) {
        return std::pair(a->pos.line, a->pos.column) < std::pair(b->pos.line, b->pos.column);
    });
    const Node *first = nullptr;
    for (const Node *k : kets) {
        bool sector = k->text[0] == 'B' || k->text[0] == 'F';
        if (first == nullptr) {
            first = k;
            continue;
        }
        bool first_sector = first->text[0] == 'B' || first->text[0] == 'F';
        auto where = std::to_string(k->pos.line) + ":" + std::to_string(k->pos.column) + ": ";
        if (sector != first_sector) {
            fail(ErrorKind::kArity, where + "ket |" + k->text + "> mixes squbit sector kets with basis kets");
        }
        if (!sector && k->text.size() != first->text.size()) {
            fail(ErrorKind::kArity, where + "ket |" + k->text + "> has arity " + std::to_string(k->text.size()) +
                                        ", expected " + std::to_string(first->text.size()));
        }
    }
}

std::string format_decimal(double v) {
    char buf[512];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed);
    if (ec != std::errc()) {
        return "0";
    }
    return std::string(buf, ptr);
}

void print_node(const Node *n, std::string &out) {
    switch (n->kind) {
        case NodeKind::kNumber:
            out += format_decimal(n->value);
            return;
        case NodeKind::kImaginary:
            out += "i";
            return;
        case NodeKind::kSqrt:
            out += "sqrt(" + format_decimal(n->value) + ")";
            return;
        case NodeKind::kKet:
            out += "|" + n->text + ">";
            return;
        case NodeKind::kGenerator:
            out += n->text;
            return;
        case NodeKind::kNeg:
            out += "-";
            print_node(n->lhs.get(), out);
            return;
        case NodeKind::kAdd:
        case NodeKind::kSub:
        case NodeKind::kMul:
        case NodeKind::kDiv: {
            const char *op = n->kind == NodeKind::kAdd   ? " + "
                             : n->kind == NodeKind::kSub ? " - "
                             : n->kind == NodeKind::kMul ? " * "
                                                         : " / ";
            out += "(";
            print_node(n->lhs.get(), out);
            out += op;
            print_node(n->rhs.get(), out);
            out += ")";
            return;
        }
    }
}

}  // namespace

StateExpr parse(std::string_view text) {
    Parser parser(text);
    StateExpr e = parser.parse_all();
    check_kets(e);
    return e;
}

std::string print(const StateExpr &e) {
    std::string out;
    print_node(e.root.get(), out);
    return out;
}

bool same_structure(const Node *a, const Node *b) {
    if (a == nullptr || b == nullptr) {
        return a == b;
    }
    return a->kind == b->kind && a->value == b->value && a->text == b->text &&
           same_structure(a->lhs.get(), b->lhs.get()) && same_structure(a->rhs.get(), b->rhs.get());
}

}  // namespace qnil::expr
