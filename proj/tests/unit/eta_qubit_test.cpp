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

#include "qnil/errors.hpp"
#include "qnil/eta_qubit.hpp"
#include "support/oracles.hpp"

namespace qnil::eta {
namespace {

using testing::near;
using testing::Rng;

const double kSqrtHalf = std::sqrt(0.5);

std::vector<Complex> random_amplitudes(Rng &rng, int n, bool normalize = true) {
    std::vector<Complex> a(size_t{1} << n);
    double norm = 0;
    for (auto &c : a) {
        c = testing::random_complex(rng);
        norm += std::norm(c);
    }
    if (normalize) {
        for (auto &c : a) {
            c /= std::sqrt(norm);
        }
    }
    return a;
}

// Amplitude vector of |a> (x) |b>, leftmost qubit most significant.
std::vector<Complex> kron(const std::vector<Complex> &a, const std::vector<Complex> &b) {
    std::vector<Complex> out;
    for (Complex x : a) {
        for (Complex y : b) {
            out.push_back(x * y);
        }
    }
    return out;
}

// All 2x2 minors of the 2^k x 2^(n-k) reshape vanish.
bool rank_one_oracle(const std::vector<Complex> &amps, int rows_bits, int n, double tol) {
    size_t rows = size_t{1} << rows_bits;
    size_t cols = size_t{1} << (n - rows_bits);
    double scale = 0;
    for (Complex c : amps) {
        scale = std::max(scale, std::abs(c));
    }
    for (size_t r1 = 0; r1 < rows; r1++) {
        for (size_t r2 = r1 + 1; r2 < rows; r2++) {
            for (size_t c1 = 0; c1 < cols; c1++) {
                for (size_t c2 = c1 + 1; c2 < cols; c2++) {
                    Complex minor = amps[r1 * cols + c1] * amps[r2 * cols + c2] -
                                    amps[r1 * cols + c2] * amps[r2 * cols + c1];
                    if (std::abs(minor) > tol * std::max(1.0, scale * scale)) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

TEST(FromAmplitudes, TwoQubitLayout) {
    std::vector<Complex> a = {1.0, 2.0, 3.0, 4.0};  // |00>, |01>, |10>, |11>
    EtaState s = EtaState::from_amplitudes(a, 2);
    EXPECT_EQ(s.coefficient(0b00), Complex(1.0));
    EXPECT_EQ(s.coefficient(0b10), Complex(2.0));  // |01> -> eta_2
    EXPECT_EQ(s.coefficient(0b01), Complex(3.0));  // |10> -> eta_1
    EXPECT_EQ(s.coefficient(0b11), Complex(4.0));
}

TEST(FromAmplitudes, BasisVectorIsConstant) {
    std::vector<Complex> a(8);
    a[0] = 1.0;
    EtaState s = EtaState::from_amplitudes(a, 3);
    EXPECT_EQ(s.function().terms().size(), 1u);
    EXPECT_EQ(body(s.function()), Complex(1.0));
}

TEST(FromAmplitudes, LengthMismatchIsShapeError) {
    std::vector<Complex> a(3);
    EXPECT_THROW(EtaState::from_amplitudes(a, 2), Error);
    try {
        EtaState::from_amplitudes(a, 2);
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::kShape);
    }
}

TEST(FromAmplitudes, RoundTrip) {
    Rng rng(21);
    for (int n = 1; n <= 6; n++) {
        auto a = random_amplitudes(rng, n, false);
        auto back = EtaState::from_amplitudes(a, n).to_amplitudes();
        ASSERT_EQ(back.size(), a.size());
        for (size_t k = 0; k < a.size(); k++) {
            EXPECT_EQ(back[k], a[k]);
        }
    }
}

TEST(FromFunction, RejectsOddUniverse) {
    auto u = testing::make_universe(1, 1);
    EXPECT_THROW(EtaState::from_function(Multivector::scalar(u, 1.0)), Error);
}

TEST(ScalarProduct, ExamplesAndHermitianOracle) {
    std::vector<Complex> w = {0, kSqrtHalf, kSqrtHalf, 0};
    std::vector<Complex> ghz = {kSqrtHalf, 0, 0, kSqrtHalf};
    auto sw = EtaState::from_amplitudes(w, 2);
    auto sg = EtaState::from_amplitudes(ghz, 2);
    EXPECT_NEAR(scalar_product(sw, sw).real(), 1.0, 1e-15);
    EXPECT_EQ(scalar_product(sg, sw), Complex(0.0));

    Rng rng(22);
    for (int trial = 0; trial < 100; trial++) {
        auto a = random_amplitudes(rng, 3, false);
        auto b = random_amplitudes(rng, 3, false);
        Complex expected = 0;
        for (size_t k = 0; k < a.size(); k++) {
            expected += std::conj(a[k]) * b[k];
        }
        Complex got = scalar_product(EtaState::from_amplitudes(a, 3), EtaState::from_amplitudes(b, 3));
        ASSERT_TRUE(near(got, expected, 1e-12));
        Complex self = scalar_product(EtaState::from_amplitudes(a, 3), EtaState::from_amplitudes(a, 3));
        ASSERT_GT(self.real(), 0.0);
        ASSERT_EQ(self.imag(), 0.0);
    }
    std::vector<Complex> zero(4);
    auto z = EtaState::from_amplitudes(zero, 2);
    EXPECT_EQ(scalar_product(z, z), Complex(0.0));
}

TEST(ScalarProduct, SizeMismatch) {
    std::vector<Complex> a2(4, 0.5);
    std::vector<Complex> a3(8, 0.5);
    EXPECT_THROW(scalar_product(EtaState::from_amplitudes(a2, 2), EtaState::from_amplitudes(a3, 3)), Error);
}

TEST(Wronskian, WernerAndGhz) {
    std::vector<Complex> w = {0, kSqrtHalf, kSqrtHalf, 0};
    std::vector<Complex> ghz = {kSqrtHalf, 0, 0, kSqrtHalf};
    auto ww = wronskian(EtaState::from_amplitudes(w, 2), 1, 2);
    auto wg = wronskian(EtaState::from_amplitudes(ghz, 2), 1, 2);
    EXPECT_NEAR(body(ww.value).real(), -0.5, 1e-12);
    EXPECT_NEAR(body(wg.value).real(), 0.5, 1e-12);
    EXPECT_TRUE(soul(ww.value).is_zero());
    EXPECT_EQ(ww.i, 1);
    EXPECT_EQ(ww.j, 2);
}

TEST(Wronskian, TwoQubitClosedForm) {
    Rng rng(23);
    for (int trial = 0; trial < 200; trial++) {
        auto a = random_amplitudes(rng, 2, false);
        // F0 F12 - F1 F2 with F1 the |10> and F2 the |01> amplitude
        Complex expected = a[0] * a[3] - a[2] * a[1];
        auto w = wronskian(EtaState::from_amplitudes(a, 2), 1, 2);
        ASSERT_TRUE(near(body(w.value), expected, 1e-12));
        ASSERT_TRUE(soul(w.value).is_zero());
    }
}

TEST(Wronskian, VanishesOnProductsForLargerStates) {
    Rng rng(24);
    for (int trial = 0; trial < 50; trial++) {
        // qubit 1 alone times a random 2-qubit state on qubits 2, 3
        auto left = random_amplitudes(rng, 1);
        auto right = random_amplitudes(rng, 2);
        auto s = EtaState::from_amplitudes(kron(left, right), 3);
        ASSERT_LE(max_abs_difference(wronskian(s, 1, 2).value, Multivector(s.function().universe())), 1e-12);
        ASSERT_LE(max_abs_difference(wronskian(s, 1, 3).value, Multivector(s.function().universe())), 1e-12);
    }
}

TEST(Wronskian, DependsOnSpectatorEta) {
    // GHZ on three qubits: w12 = -eta3 * (...) is not a pure number
    std::vector<Complex> a(8);
    a[0] = kSqrtHalf;
    a[7] = kSqrtHalf;
    auto w = wronskian(EtaState::from_amplitudes(a, 3), 1, 2);
    EXPECT_FALSE(soul(w.value).is_zero());
}

TEST(Wronskian, IndexErrors) {
    std::vector<Complex> a(4, 0.5);
    auto s = EtaState::from_amplitudes(a, 2);
    for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 1}, std::pair{1, 3}}) {
        try {
            wronskian(s, i, j);
            ADD_FAILURE() << i << "," << j;
        } catch (const Error &e) {
            EXPECT_EQ(e.kind(), ErrorKind::kIndex);
        }
    }
}

TEST(TwoTangle, ValuesAndShape) {
    std::vector<Complex> w = {0, kSqrtHalf, kSqrtHalf, 0};
    std::vector<Complex> ghz = {kSqrtHalf, 0, 0, kSqrtHalf};
    std::vector<Complex> zero_zero = {1, 0, 0, 0};
    EXPECT_NEAR(two_tangle(EtaState::from_amplitudes(w, 2)), 1.0, 1e-12);
    EXPECT_NEAR(two_tangle(EtaState::from_amplitudes(ghz, 2)), 1.0, 1e-12);
    EXPECT_EQ(two_tangle(EtaState::from_amplitudes(zero_zero, 2)), 0.0);
    std::vector<Complex> three(8, 0.25);
    try {
        two_tangle(EtaState::from_amplitudes(three, 3));
        ADD_FAILURE();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::kShape);
    }
}

TEST(TwoTangle, BoundedForNormalizedStates) {
    Rng rng(25);
    for (int trial = 0; trial < 1000; trial++) {
        double t = two_tangle(EtaState::from_amplitudes(random_amplitudes(rng, 2), 2));
        ASSERT_GE(t, 0.0);
        ASSERT_LE(t, 1.0 + 1e-12);
    }
}

TEST(TwoTangle, InvariantUnderUnimodularLocalMaps) {
    Rng rng(26);
    for (int trial = 0; trial < 200; trial++) {
        auto a = random_amplitudes(rng, 2);
        // local maps with |det| = 1 on each qubit: A = [[p, q], [r, s]] scaled
        auto unimodular = [&]() {
            std::array<Complex, 4> m;
            Complex det;
            do {
                for (auto &x : m) {
                    x = testing::random_complex(rng);
                }
                det = m[0] * m[3] - m[1] * m[2];
            } while (std::abs(det) < 0.1);
            Complex scale = 1.0 / std::sqrt(det);
            double phase = std::uniform_real_distribution<double>(0, 6.28)(rng);
            scale *= std::polar(1.0, phase / 2);  // |det| stays 1
            for (auto &x : m) {
                x *= scale;
            }
            return m;
        };
        auto A = unimodular();
        auto B = unimodular();
        std::vector<Complex> b(4);
        for (int j = 0; j < 2; j++) {
            for (int k = 0; k < 2; k++) {
                for (int p = 0; p < 2; p++) {
                    for (int q = 0; q < 2; q++) {
                        b[static_cast<size_t>(2 * j + k)] +=
                            A[static_cast<size_t>(2 * j + p)] * B[static_cast<size_t>(2 * k + q)] *
                            a[static_cast<size_t>(2 * p + q)];
                    }
                }
            }
        }
        double before = two_tangle(EtaState::from_amplitudes(a, 2));
        double after = two_tangle(EtaState::from_amplitudes(b, 2));
        ASSERT_NEAR(before, after, 1e-9);
    }
}

TEST(Factor, GhzIsEntangled) {
    std::vector<Complex> ghz = {kSqrtHalf, 0, 0, kSqrtHalf};
    std::vector<int> left = {1};
    auto s = EtaState::from_amplitudes(ghz, 2);
    EXPECT_FALSE(is_factorable(s, left));
    EXPECT_FALSE(factor(s, left).has_value());
}

TEST(Factor, ProductOfBinomials) {
    std::vector<Complex> a = {0.5, 0.5, 0.5, 0.5};  // (1+eta1)(1+eta2)/2
    std::vector<int> left = {1};
    auto s = EtaState::from_amplitudes(a, 2);
    EXPECT_TRUE(is_factorable(s, left));
    auto f = factor(s, left);
    ASSERT_TRUE(f.has_value());
    EXPECT_TRUE(near(f->first.function() * f->second.function(), s.function(), 1e-10));
}

TEST(Factor, BasisStateGivesUnitFactors) {
    std::vector<Complex> a = {1, 0, 0, 0};
    std::vector<int> left = {1};
    auto f = factor(EtaState::from_amplitudes(a, 2), left);
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(body(f->first.function()), Complex(1.0));
    EXPECT_EQ(body(f->second.function()), Complex(1.0));
    EXPECT_EQ(f->first.function().terms().size(), 1u);
    EXPECT_EQ(f->second.function().terms().size(), 1u);
}

TEST(Factor, RandomThreeQubitProducts) {
    Rng rng(27);
    std::vector<int> left = {1};
    for (int trial = 0; trial < 200; trial++) {
        auto g = random_amplitudes(rng, 1);
        auto h = random_amplitudes(rng, 2);
        auto s = EtaState::from_amplitudes(kron(g, h), 3);
        ASSERT_TRUE(is_factorable(s, left));
        auto f = factor(s, left);
        ASSERT_TRUE(f.has_value());
        ASSERT_TRUE(near(f->first.function() * f->second.function(), s.function(), 1e-10));
        // normalization convention: unit norm, first nonzero coefficient real positive
        Complex first = 0;
        for (const auto &[m, c] : f->first.function().terms()) {
            first = c;
            break;
        }
        ASSERT_NEAR(first.imag(), 0.0, 1e-12);
        ASSERT_GT(first.real(), 0.0);
        ASSERT_NEAR(scalar_product(f->first, f->first).real(), 1.0, 1e-10);
    }
}

TEST(Factor, NonContiguousSplit) {
    Rng rng(28);
    // qubit 2 factors out of a state entangled between qubits 1 and 3
    std::vector<Complex> ghz13 = {kSqrtHalf, 0, 0, kSqrtHalf};
    auto q2 = random_amplitudes(rng, 1);
    std::vector<Complex> a(8);
    for (int b1 = 0; b1 < 2; b1++) {
        for (int b2 = 0; b2 < 2; b2++) {
            for (int b3 = 0; b3 < 2; b3++) {
                a[static_cast<size_t>(4 * b1 + 2 * b2 + b3)] =
                    ghz13[static_cast<size_t>(2 * b1 + b3)] * q2[static_cast<size_t>(b2)];
            }
        }
    }
    auto s = EtaState::from_amplitudes(a, 3);
    std::vector<int> two = {2};
    std::vector<int> one = {1};
    std::vector<int> one_three = {1, 3};
    EXPECT_TRUE(is_factorable(s, two));
    EXPECT_TRUE(is_factorable(s, one_three));
    EXPECT_FALSE(is_factorable(s, one));
    auto f = factor(s, two);
    ASSERT_TRUE(f.has_value());
    EXPECT_TRUE(near(f->first.function() * f->second.function(), s.function(), 1e-10));
}

TEST(Factor, SplitErrors) {
    std::vector<Complex> a(4, 0.5);
    auto s = EtaState::from_amplitudes(a, 2);
    std::vector<int> empty;
    std::vector<int> all = {1, 2};
    std::vector<int> dup = {1, 1};
    std::vector<int> out_of_range = {3};
    for (const auto *split : {&empty, &all, &dup}) {
        try {
            is_factorable(s, *split);
            ADD_FAILURE();
        } catch (const Error &e) {
            EXPECT_EQ(e.kind(), ErrorKind::kSplit);
        }
    }
    try {
        is_factorable(s, out_of_range);
        ADD_FAILURE();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::kIndex);
    }
}

TEST(Factor, ZeroStateIsTriviallyFactorable) {
    std::vector<Complex> a(4);
    std::vector<int> left = {1};
    auto f = factor(EtaState::from_amplitudes(a, 2), left);
    ASSERT_TRUE(f.has_value());
    EXPECT_TRUE(f->second.function().is_zero());
}

TEST(Factor, AgreesWithRankOneOracleOnThreeQubits) {
    Rng rng(29);
    std::vector<int> left = {1, 2};
    int factorable = 0;
    for (int trial = 0; trial < 300; trial++) {
        std::vector<Complex> a = trial % 2 == 0 ? kron(random_amplitudes(rng, 2), random_amplitudes(rng, 1))
                                                : random_amplitudes(rng, 3);
        auto s = EtaState::from_amplitudes(a, 3);
        bool oracle = rank_one_oracle(a, 2, 3, 1e-9);
        ASSERT_EQ(is_factorable(s, left), oracle);
        ASSERT_EQ(factor(s, left).has_value(), oracle);
        factorable += oracle ? 1 : 0;
    }
    EXPECT_EQ(factorable, 150);
}

}  // namespace
}  // namespace qnil::eta
