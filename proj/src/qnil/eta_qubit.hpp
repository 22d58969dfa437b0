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

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qnil/algebra.hpp"

namespace qnil::eta {

/// Dense operations (amplitude vectors, coefficient reshapes) are limited to
/// this many qubits.
inline constexpr int kMaxDenseQubits = 20;

/// Default threshold for deciding that a Wronskian or rank-1 residual is zero.
inline constexpr double kFactorTolerance = 1e-9;

/// Universe of n commuting nilpotents named e1..en.
UniversePtr eta_universe(int n, double zero_tolerance = kDefaultZeroTolerance);

/// An n-qubit pure state written as a function of eta_1..eta_n with complex
/// coefficients. Qubit k (1-based, leftmost in a ket) is generator k-1.
class EtaState {
   public:
    /// Amplitudes in binary-basis order |0..0>, ..., |1..1>, leftmost qubit
    /// being the most significant bit.
    static EtaState from_amplitudes(std::span<const Complex> amplitudes, int n,
                                    double zero_tolerance = kDefaultZeroTolerance);
    /// Wraps an eta-function. Its universe must hold only even generators.
    static EtaState from_function(Multivector f);

    int n() const {
        return n_;
    }
    const Multivector &function() const {
        return f_;
    }
    std::vector<Complex> to_amplitudes() const;
    /// Coefficient of prod_{k in qubits} eta_k, qubits given as a bitmask
    /// over generator indices.
    Complex coefficient(Monomial qubits) const {
        return f_.coefficient(qubits);
    }

   private:
    EtaState(int n, Multivector f) : n_(n), f_(std::move(f)) {
    }

    int n_;
    Multivector f_;
};

/// Sum over multi-indices of conj(F_I) G_I.
Complex scalar_product(const EtaState &f, const EtaState &g);

struct WronskianResult {
    Multivector value;
    int i;
    int j;
};

/// F * d_i d_j F - d_i F * d_j F for 1-based qubit indices i != j.
WronskianResult wronskian(const EtaState &f, int i, int j);

/// 4 |w12|^2 for a two-qubit state; lies in [0, 1] when normalized.
double two_tangle(const EtaState &f);

/// True iff F = G(left) * H(rest). `left` lists 1-based qubit indices.
bool is_factorable(const EtaState &f, std::span<const int> left, double tolerance = kFactorTolerance);

/// Constructive factorization. Factors live in the same universe as F, G is
/// unit-norm with its first nonzero coefficient real positive.
std::optional<std::pair<EtaState, EtaState>> factor(
    const EtaState &f, std::span<const int> left, double tolerance = kFactorTolerance);

}  // namespace qnil::eta
