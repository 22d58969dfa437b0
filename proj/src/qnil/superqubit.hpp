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

#include <array>

#include "qnil/algebra.hpp"

namespace qnil::super {

/// Basis labels of a (2|1) superqubit. kDot is the odd ket |•>.
enum Level : int { k0 = 0, k1 = 1, kDot = 2 };

inline constexpr bool is_odd_level(int level) {
    return level == kDot;
}

/// Coefficients of |0>, |1>, |•> in the right-module convention
/// |psi> = sum_X |X> psi_X, with no parity constraint.
class Supervector {
   public:
    Supervector(Multivector psi0, Multivector psi1, Multivector psi_dot);

    const Multivector &operator[](int level) const {
        return amp_[static_cast<size_t>(level)];
    }
    const UniversePtr &universe() const {
        return amp_[0].universe();
    }
    /// Even when psi_k are even and psi_dot odd, odd for the reverse,
    /// inhomogeneous otherwise.
    Parity parity() const;

   private:
    std::array<Multivector, 3> amp_;
};

/// A physical (even) one-superqubit state: psi_0, psi_1 even, psi_dot odd.
class SuperQubitState {
   public:
    /// Throws ParityError when the amplitude parities are wrong.
    SuperQubitState(Multivector psi0, Multivector psi1, Multivector psi_dot);

    const Multivector &operator[](int level) const {
        return vec_[level];
    }
    const Supervector &vector() const {
        return vec_;
    }
    const UniversePtr &universe() const {
        return vec_.universe();
    }

   private:
    Supervector vec_;
};

using SuperMatrix = std::array<std::array<Multivector, 3>, 3>;

/// Two-superqubit state as the (2|1)x(2|1) supermatrix psi_XY.
class TwoSuperQubitState {
   public:
    /// Throws ParityError unless psi_jk, psi_•• are even and psi_j•, psi_•k odd.
    explicit TwoSuperQubitState(SuperMatrix m);

    const Multivector &at(int x, int y) const {
        return m_[static_cast<size_t>(x)][static_cast<size_t>(y)];
    }
    const SuperMatrix &matrix() const {
        return m_;
    }
    const UniversePtr &universe() const {
        return m_[0][0].universe();
    }

   private:
    SuperMatrix m_;
};

/// Block metric diag(epsilon, 1) used in the supertrace form of sdet.
struct OspMetric {
    std::array<std::array<Complex, 3>, 3> e{};

    static OspMetric standard();
};

/// <psi, phi> = sum_k psi_k^# phi_k - (-1)^{|psi|} psi_•^# phi_• for
/// homogeneous supervectors.
Multivector q_scalar_product(const Supervector &psi, const Supervector &phi);

/// <psi, psi> = delta^{ij} psi_i^# psi_j - psi_•^# psi_•.
Multivector q_scalar_square(const SuperQubitState &psi);

SuperQubitState normalize_superqubit(const SuperQubitState &psi);

/// Graded tensor product; psi_XY = (-1)^{|a_X||Y|} a_X b_Y.
TwoSuperQubitState tensor(const SuperQubitState &a, const SuperQubitState &b);

/// det(psi_jk - psi_j• psi_••^-1 psi_•k) psi_••^-1. Throws NotInvertibleError
/// when psi_•• has no body.
Multivector berezinian(const TwoSuperQubitState &s);

/// (psi00 psi11 - psi01 psi10 + psi0• psi1• + psi•0 psi•1) - psi••^2 / 2.
Multivector sdet_closed(const TwoSuperQubitState &s);

/// str((psi E)^ST E psi) / 2.
Multivector sdet_via_str(const TwoSuperQubitState &s, const OspMetric &metric = OspMetric::standard());

/// 4 sdet (sdet)^#.
Multivector super_two_tangle(const TwoSuperQubitState &s);

/// [[A, B], [C, D]]^ST = [[A^T, C^T], [-B^T, D^T]] with the odd row/column last.
SuperMatrix supertranspose(const SuperMatrix &m);
Multivector supertrace(const SuperMatrix &m);
SuperMatrix multiply(const SuperMatrix &a, const SuperMatrix &b);
SuperMatrix from_metric(const UniversePtr &universe, const OspMetric &metric);

}  // namespace qnil::super
