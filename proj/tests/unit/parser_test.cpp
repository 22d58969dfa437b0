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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qnil/errors.hpp"
#include "qnil/expr.hpp"
#include "qnil/state.hpp"

namespace qnil {
namespace {

using expr::NodeKind;

template <typename F>
ErrorKind kind_of(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::kInvalidArgument;
}

ParseError parse_error(std::string_view text) {
    try {
        expr::parse(text);
    } catch (const ParseError &e) {
        return e;
    }
    ADD_FAILURE() << "parsed: " << text;
    return ParseError(0, 0, {}, "");
}

bool contains(const std::vector<std::string> &v, const std::string &s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

TEST(Parse, Precedence) {
    auto e = expr::parse("1 + 2*|0> - 3");
    ASSERT_EQ(e.root->kind, NodeKind::kSub);
    EXPECT_EQ(e.root->lhs->kind, NodeKind::kAdd);
    EXPECT_EQ(e.root->lhs->rhs->kind, NodeKind::kMul);
    EXPECT_EQ(expr::print(e), "((1 + (2 * |0>)) - 3)");
}

TEST(Parse, NumberForms) {
    auto e = expr::parse("-sqrt(2) * i / 4");
    EXPECT_EQ(e.root->kind, NodeKind::kDiv);
    EXPECT_EQ(e.root->lhs->kind, NodeKind::kMul);
    EXPECT_EQ(e.root->lhs->lhs->kind, NodeKind::kNeg);
    EXPECT_EQ(e.root->lhs->lhs->lhs->kind, NodeKind::kSqrt);
    EXPECT_EQ(e.root->lhs->lhs->lhs->value, 2.0);
    EXPECT_EQ(e.root->lhs->rhs->kind, NodeKind::kImaginary);
    EXPECT_EQ(expr::parse("0.125").root->value, 0.125);
    EXPECT_EQ(expr::parse("0.001").root->value, 0.001);
    // no exponent notation: 1e1 would read as 1 followed by generator e1
    EXPECT_EQ(parse_error("1e1").column(), 2);
}

TEST(Parse, KetAndGeneratorTokens) {
    EXPECT_EQ(expr::parse("|0.1>").root->text, "0.1");
    EXPECT_EQ(expr::parse("|B>").root->text, "B");
    EXPECT_EQ(expr::parse("|F12>").root->text, "F12");
    EXPECT_EQ(expr::parse("xb3").root->kind, NodeKind::kGenerator);
    EXPECT_EQ(expr::parse("xb3").root->text, "xb3");
    EXPECT_EQ(expr::parse("t64").root->text, "t64");
    EXPECT_EQ(parse_error("e0").column(), 1);
    EXPECT_EQ(parse_error("x65").column(), 1);
    EXPECT_EQ(parse_error("e01").column(), 1);
    EXPECT_EQ(parse_error("|F01>").column(), 1);
}

TEST(Parse, WhitespaceAndCommentsAreInsignificant) {
    auto a = expr::parse("(1/sqrt(2))*(|00>+|11>)");
    auto b = expr::parse("  ( 1 / sqrt ( 2 ) )\n*\t( |00> # comment\n + |11> ) # tail");
    EXPECT_TRUE(expr::same_structure(a.root.get(), b.root.get()));
}

TEST(Parse, StrayBracketReportsColumn) {
    auto e = parse_error("|0>>");
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 4);
    EXPECT_TRUE(contains(e.expected(), "end of input"));
}

TEST(Parse, ExpectedSetsAndPositions) {
    auto e = parse_error("1 +");
    EXPECT_EQ(e.column(), 4);
    EXPECT_TRUE(contains(e.expected(), "number"));
    EXPECT_TRUE(contains(e.expected(), "ket"));
    EXPECT_TRUE(contains(e.expected(), "'('"));

    auto multiline = parse_error("# header\n|00> +\n  * |11>");
    EXPECT_EQ(multiline.line(), 3);
    EXPECT_EQ(multiline.column(), 3);

    auto unclosed = parse_error("(1 + |0>");
    EXPECT_TRUE(contains(unclosed.expected(), "')'"));

    auto div = parse_error("|0> / |1>");
    EXPECT_EQ(div.column(), 7);
    EXPECT_TRUE(contains(div.expected(), "number"));
}

TEST(Parse, ColumnsCountCodepoints) {
    auto e = parse_error("# \xc3\xa9\xc3\xa9\n|0> + \xc3\xa9");
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 7);
    auto f = parse_error("|0> \xe2\x80\xa2 |1>");
    EXPECT_EQ(f.column(), 5);
}

TEST(Parse, EmptyInput) {
    auto e = parse_error("  # only a comment\n");
    EXPECT_EQ(e.line(), 2);
    EXPECT_TRUE(contains(e.expected(), "number"));
}

TEST(Parse, MixedKetArity) {
    EXPECT_EQ(kind_of([] { expr::parse("|0> + |00>"); }), ErrorKind::kArity);
    EXPECT_EQ(kind_of([] { expr::parse("|00> + |B>"); }), ErrorKind::kArity);
    EXPECT_NO_THROW(expr::parse("|B> + |F1>"));
}

TEST(Parse, NestingAndLengthLimits) {
    std::string deep(expr::kMaxNesting + 5, '(');
    deep += "1";
    deep += std::string(expr::kMaxNesting + 5, ')');
    EXPECT_EQ(kind_of([&] { expr::parse(deep); }), ErrorKind::kParse);
    std::string negs(expr::kMaxNesting + 5, '-');
    EXPECT_EQ(kind_of([&] { expr::parse(negs + "1"); }), ErrorKind::kParse);
    std::string ok(expr::kMaxNesting - 1, '(');
    ok += "1" + std::string(expr::kMaxNesting - 1, ')');
    EXPECT_NO_THROW(expr::parse(ok));
    std::string longsum = "1";
    for (int k = 0; k < expr::kMaxTokens; k++) {
        longsum += "+1";
    }
    EXPECT_EQ(kind_of([&] { expr::parse(longsum); }), ErrorKind::kParse);
}

TEST(Print, RoundTripIsIdempotent) {
    const char *inputs[] = {
        "(1/sqrt(2))*(|00> + |11>)",
        "(1/sqrt(3))*(|00> + |11> + i*|..>)",
        "-(-|0> * -2) / 0.5 - i",
        "0.6*|B> + 0.8*i*t1*|F>",
        "|01> + |0.>*x2 + |.1>*x1 - |..>*x1*x2",
        "0.000000000001 * e1 * xb2",
        "0.1 + 123456789.125",
    };
    for (const char *text : inputs) {
        auto first = expr::parse(text);
        std::string printed = expr::print(first);
        auto second = expr::parse(printed);
        EXPECT_TRUE(expr::same_structure(first.root.get(), second.root.get())) << text << " -> " << printed;
        EXPECT_EQ(expr::print(second), printed);
    }
}

TEST(Evaluate, GhzAmplitudes) {
    State s = parse_state("(1/sqrt(2))*(|00> + |11>)");
    ASSERT_EQ(std::string(state_kind(s)), "qubit");
    auto amps = std::get<eta::EtaState>(s).to_amplitudes();
    ASSERT_EQ(amps.size(), 4u);
    EXPECT_NEAR(amps[0].real(), std::sqrt(0.5), 1e-15);
    EXPECT_EQ(amps[1], Complex(0.0));
    EXPECT_EQ(amps[2], Complex(0.0));
    EXPECT_NEAR(amps[3].real(), std::sqrt(0.5), 1e-15);
}

TEST(Evaluate, LeftmostQubitIsMostSignificant) {
    auto amps = std::get<eta::EtaState>(parse_state("|100> + 2*|001>")).to_amplitudes();
    EXPECT_EQ(amps[4], Complex(1.0));
    EXPECT_EQ(amps[1], Complex(2.0));
}

TEST(Evaluate, SuperqubitExample) {
    State s = parse_state("(1/sqrt(3))*(|00> + |11> + i*|..>)");
    ASSERT_EQ(std::string(state_kind(s)), "superqubit2");
    const auto &t = std::get<super::TwoSuperQubitState>(s);
    double r = 1 / std::sqrt(3.0);
    EXPECT_NEAR(std::abs(body(t.at(0, 0)) - r), 0, 1e-15);
    EXPECT_NEAR(std::abs(body(t.at(1, 1)) - r), 0, 1e-15);
    EXPECT_NEAR(std::abs(body(t.at(2, 2)) - Complex(0, r)), 0, 1e-15);
    EXPECT_TRUE(t.at(0, 1).is_zero());
}

TEST(Evaluate, OddCoefficientMovesPastOddKet) {
    const super::TwoSuperQubitState right = std::get<super::TwoSuperQubitState>(parse_state("|0.>*x1"));
    const super::TwoSuperQubitState left = std::get<super::TwoSuperQubitState>(parse_state("x1*|0.>"));
    EXPECT_TRUE(max_abs_difference(right.at(0, 2), -left.at(0, 2)) == 0);
    const super::TwoSuperQubitState even_ket = std::get<super::TwoSuperQubitState>(parse_state("x1*x2*|00> + |..>"));
    EXPECT_FALSE(even_ket.at(0, 0).is_zero());
}

TEST(Evaluate, OneSuperqubit) {
    State s = parse_state("(1/sqrt(2))*(|0> + i*|1>) + |.>*x1");
    ASSERT_EQ(std::string(state_kind(s)), "superqubit");
    const auto &q = std::get<super::SuperQubitState>(s);
    EXPECT_EQ(q[super::kDot].terms().size(), 1u);
}

TEST(Evaluate, Squbit) {
    State s = parse_state("0.5*|B> + 0.5*t1*|F> + 0.5*t2*|F> + 0.5*t1*t2*|B1>");
    ASSERT_EQ(std::string(state_kind(s)), "squbit");
    const auto &q = std::get<squbit::SqubitState>(s);
    EXPECT_EQ(q.n(), 2);
    EXPECT_EQ(q.coefficient(squbit::Slot{0b11, 1}), Complex(0.5));
    EXPECT_NEAR(squbit::bracket_norm(q), 1.0, 1e-15);
    // t2 t1 = -t1 t2
    const squbit::SqubitState r = std::get<squbit::SqubitState>(parse_state("t2*t1*|B>"));
    EXPECT_EQ(r.coefficient(squbit::Slot{0b11, 0}), Complex(-1.0));
}

TEST(Evaluate, ElementsAndEtaFunctions) {
    EXPECT_EQ(std::string(state_kind(parse_state("(1 + e1*e2)/sqrt(2)"))), "qubit");
    EXPECT_EQ(std::string(state_kind(parse_state("x1*xb1"))), "element");
    EXPECT_EQ(std::string(state_kind(parse_state("6"))), "element");
}

TEST(Evaluate, Errors) {
    EXPECT_EQ(kind_of([] { parse_state("1 + |0>"); }), ErrorKind::kArity);
    EXPECT_EQ(kind_of([] { parse_state("|0>*|1>"); }), ErrorKind::kArity);
    EXPECT_EQ(kind_of([] { parse_state("|000>*x1"); }), ErrorKind::kArity);
    EXPECT_EQ(kind_of([] { parse_state("t1*|B>"); }), ErrorKind::kSector);
    EXPECT_EQ(kind_of([] { parse_state("t1*t2*|F>"); }), ErrorKind::kSector);
    EXPECT_EQ(kind_of([] { parse_state("e1*|B>"); }), ErrorKind::kShape);
    EXPECT_EQ(kind_of([] { parse_state("t1*|0>"); }), ErrorKind::kShape);
    EXPECT_EQ(kind_of([] { parse_state("e1*|01>"); }), ErrorKind::kShape);
    EXPECT_EQ(kind_of([] { parse_state("|0>/0"); }), ErrorKind::kRange);
    EXPECT_EQ(kind_of([] { parse_state("|0.>"); }), ErrorKind::kParity);
    EXPECT_EQ(kind_of([] { parse_state("|.>*e1"); }), ErrorKind::kParity);
    EXPECT_EQ(kind_of([] { parse_state("t13*|F>"); }), ErrorKind::kRange);
}

TEST(Fixtures, AllParseAndRoundTrip) {
    namespace fs = std::filesystem;
    int seen = 0;
    for (const auto &entry : fs::directory_iterator(QNIL_FIXTURE_DIR)) {
        if (entry.path().extension() != ".qs") {
            continue;
        }
        std::ifstream in(entry.path());
        std::stringstream ss;
        ss << in.rdbuf();
        std::string text = ss.str();
        auto first = expr::parse(text);
        auto second = expr::parse(expr::print(first));
        EXPECT_TRUE(expr::same_structure(first.root.get(), second.root.get())) << entry.path();
        EXPECT_NO_THROW(parse_state(text)) << entry.path();
        seen++;
    }
    EXPECT_GE(seen, 10);
}

}  // namespace
}  // namespace qnil
