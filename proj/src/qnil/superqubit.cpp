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

#include "qnil/superqubit.hpp"

#include <cmath>

#include "qnil/errors.hpp"

namespace qnil::super {

namespace {

void require_parity(const Multivector &m, Parity p, const char *what) {
    if (!m.has_parity(p)) {
        fail(ErrorKind::kParity,
             std::string(what) + " must be " + parity_name(p) + ", got " + parity_name(m.parity()));
    }
}

Multivector zero_like(const UniversePtr &u) {
    return Multivector(u);
}

}  // namespace

Supervector::Supervector(Multivector psi0, Multivector psi1, Multivector psi_dot)
    : amp_{std::move(psi0), std::move(psi1), std::move(psi_dot)} {
    require_same_universe(amp_[0], amp_[1]);
    require_same_universe(amp_[0], amp_[2]);
}

Parity Supervector::parity() const {
    auto fits = [&](Parity even_part, Parity odd_part) {
        return amp_[0].has_parity(even_part) && amp_[1].has_parity(even_part) && amp_[2].has_parity(odd_part);
    };
    if (fits(Parity::kEven, Parity::kOdd)) {
        return Parity::kEven;
    }
    if (fits(Parity::kOdd, Parity::kEven)) {
        return Parity::kOdd;
    }
    return Parity::kInhomogeneous;
}

SuperQubitState::SuperQubitState(Multivector psi0, Multivector psi1, Multivector psi_dot)
    : vec_(std::move(psi0), std::move(psi1), std::move(psi_dot)) {
    require_parity(vec_[k0], Parity::kEven, "psi_0");
    require_parity(vec_[k1], Parity::kEven, "psi_1");
    require_parity(vec_[kDot], Parity::kOdd, "psi_dot");
}

TwoSuperQubitState::TwoSuperQubitState(SuperMatrix m) : m_(std::move(m)) {
    static const char *kNames[3][3] = {
        {"psi_00", "psi_01", "psi_0."},
        {"psi_10", "psi_11", "psi_1."},
        {"psi_.0", "psi_.1", "psi_.."},
    };
    for (int x = 0; x < 3; x++) {
        for (int y = 0; y < 3; y++) {
            require_same_universe(m_[0][0], at(x, y));
            bool odd = is_odd_level(x) != is_odd_level(y);
            require_parity(at(x, y), odd ? Parity::kOdd : Parity::kEven, kNames[x][y]);
        }
    }
}

OspMetric OspMetric::standard() {
    OspMetric m;
    m.e[0][1] = 1.0;
    m.e[1][0] = -1.0;
    m.e[2][2] = 1.0;
    return m;
}

Multivector q_scalar_product(const Supervector &psi, const Supervector &phi) {
    require_same_universe(psi[0], phi[0]);
    Parity p = psi.parity();
    if (p == Parity::kInhomogeneous || phi.parity() == Parity::kInhomogeneous) {
        fail(ErrorKind::kParity, "the Q-scalar product is defined for homogeneous supervectors");
    }
    Multivector result = mul(sharp(psi[k0]), phi[k0]) + mul(sharp(psi[k1]), phi[k1]);
    Multivector odd_part = mul(sharp(psi[kDot]), phi[kDot]);
    if (p == Parity::kEven) {
        result -= odd_part;
    } else {
        result += odd_part;
    }
    return result;
}

Multivector q_scalar_square(const SuperQubitState &psi) {
    return q_scalar_product(psi.vector(), psi.vector());
}

SuperQubitState normalize_superqubit(const SuperQubitState &psi) {
    Multivector even_norm = mul(sharp(psi[k0]), psi[k0]) + mul(sharp(psi[k1]), psi[k1]);
    Complex b = body(even_norm);
    if (!(b.real() > psi.universe()->zero_tolerance())) {
        fail(ErrorKind::kNotInvertible, "the even part of the superqubit has no body and cannot be normalized");
    }
    Multivector inv_sqrt = power(even_norm, -0.5);
    Multivector odd_square = mul(sharp(psi[kDot]), psi[kDot]);
    Multivector correction = Multivector::scalar(psi.universe(), 1.0) + mul(invert(even_norm), odd_square) * 0.5;
    Multivector even_factor = mul(inv_sqrt, correction);
    return SuperQubitState(mul(even_factor, psi[k0]), mul(even_factor, psi[k1]), mul(inv_sqrt, psi[kDot]));
}

TwoSuperQubitState tensor(const SuperQubitState &a, const SuperQubitState &b) {
    require_same_universe(a[k0], b[k0]);
    SuperMatrix m{{
        {zero_like(a.universe()), zero_like(a.universe()), zero_like(a.universe())},
        {zero_like(a.universe()), zero_like(a.universe()), zero_like(a.universe())},
        {zero_like(a.universe()), zero_like(a.universe()), zero_like(a.universe())},
    }};
    for (int x = 0; x < 3; x++) {
        for (int y = 0; y < 3; y++) {
            // |X> a_X |Y> b_Y: a_X passes |Y>, only odd past odd changes sign.
            Multivector entry = mul(a[x], b[y]);
            if (is_odd_level(x) && is_odd_level(y)) {
                entry = -entry;
            }
            m[static_cast<size_t>(x)][static_cast<size_t>(y)] = std::move(entry);
        }
    }
    return TwoSuperQubitState(std::move(m));
}

Multivector berezinian(const TwoSuperQubitState &s) {
    Multivector d_inv = invert(s.at(kDot, kDot));
    Multivector x[2][2] = {
        {zero_like(s.universe()), zero_like(s.universe())},
        {zero_like(s.universe()), zero_like(s.universe())},
    };
    for (int j = 0; j < 2; j++) {
        for (int k = 0; k < 2; k++) {
            x[j][k] = s.at(j, k) - mul(mul(s.at(j, kDot), d_inv), s.at(kDot, k));
        }
    }
    Multivector det = mul(x[0][0], x[1][1]) - mul(x[0][1], x[1][0]);
    return mul(det, d_inv);
}

Multivector sdet_closed(const TwoSuperQubitState &s) {
    Multivector result = mul(s.at(0, 0), s.at(1, 1)) - mul(s.at(0, 1), s.at(1, 0));
    result += mul(s.at(0, kDot), s.at(1, kDot));
    result += mul(s.at(kDot, 0), s.at(kDot, 1));
    result -= mul(s.at(kDot, kDot), s.at(kDot, kDot)) * 0.5;
    return result;
}

SuperMatrix from_metric(const UniversePtr &universe, const OspMetric &metric) {
    SuperMatrix m{{
        {zero_like(universe), zero_like(universe), zero_like(universe)},
        {zero_like(universe), zero_like(universe), zero_like(universe)},
        {zero_like(universe), zero_like(universe), zero_like(universe)},
    }};
    for (size_t x = 0; x < 3; x++) {
        for (size_t y = 0; y < 3; y++) {
            m[x][y] = Multivector::scalar(universe, metric.e[x][y]);
        }
    }
    return m;
}

SuperMatrix multiply(const SuperMatrix &a, const SuperMatrix &b) {
    const UniversePtr &u = a[0][0].universe();
    SuperMatrix out{{
        {zero_like(u), zero_like(u), zero_like(u)},
        {zero_like(u), zero_like(u), zero_like(u)},
        {zero_like(u), zero_like(u), zero_like(u)},
    }};
    for (size_t x = 0; x < 3; x++) {
        for (size_t y = 0; y < 3; y++) {
            for (size_t k = 0; k < 3; k++) {
                out[x][y] += mul(a[x][k], b[k][y]);
            }
        }
    }
    return out;
}

SuperMatrix supertranspose(const SuperMatrix &m) {
    SuperMatrix out = m;
    for (size_t x = 0; x < 3; x++) {
        for (size_t y = 0; y < 3; y++) {
            Multivector entry = m[y][x];
            // Lower-left block of the result comes from the upper-right (B) block.
            if (is_odd_level(static_cast<int>(x)) && !is_odd_level(static_cast<int>(y))) {
                entry = -entry;
            }
            out[x][y] = std::move(entry);
        }
    }
    return out;
}

Multivector supertrace(const SuperMatrix &m) {
    return m[0][0] + m[1][1] - m[2][2];
}

Multivector sdet_via_str(const TwoSuperQubitState &s, const OspMetric &metric) {
    SuperMatrix e = from_metric(s.universe(), metric);
    const SuperMatrix &psi = s.matrix();
    SuperMatrix lhs = supertranspose(multiply(psi, e));
    return supertrace(multiply(multiply(lhs, e), psi)) * 0.5;
}

Multivector super_two_tangle(const TwoSuperQubitState &s) {
    Multivector sdet = sdet_closed(s);
    return mul(sdet, sharp(sdet)) * 4.0;
}

}  // namespace qnil::super
