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

#include "qnil/squbit.hpp"

#include <bit>
#include <cmath>
#include <vector>

#include "qnil/errors.hpp"

namespace qnil::squbit {

namespace {

void check_index(const SqubitState &psi, int i) {
    if (i < 1 || i > psi.n()) {
        fail(ErrorKind::kIndex, "theta index " + std::to_string(i) + " outside 1.." + std::to_string(psi.n()));
    }
}

// theta_1, thetabar_1, theta_2, thetabar_2, ... as conjugate pairs.
UniversePtr theta_universe(int n) {
    std::vector<Generator> gens;
    for (int i = 1; i <= n; i++) {
        std::string t = "t" + std::to_string(i);
        std::string tb = "tb" + std::to_string(i);
        gens.push_back({t, GeneratorParity::kOdd, tb});
        gens.push_back({tb, GeneratorParity::kOdd, t});
    }
    return Universe::create(std::move(gens));
}

size_t theta_index(int i) {
    return static_cast<size_t>(2 * (i - 1));
}

size_t thetabar_index(int i) {
    return static_cast<size_t>(2 * (i - 1) + 1);
}

}  // namespace

Sector Slot::sector() const {
    return (std::popcount(tuple) & 1) ? Sector::kFermionic : Sector::kBosonic;
}

SqubitState::SqubitState(int n, std::map<Slot, Complex> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
    if (n < 1 || n > kMaxAuxiliary) {
        fail(ErrorKind::kRange,
             "auxiliary theta count must be in 1.." + std::to_string(kMaxAuxiliary) + ", got " + std::to_string(n));
    }
    uint32_t allowed = (uint32_t{1} << n) - 1;
    for (const auto &[slot, c] : coeffs_) {
        if (slot.tuple & ~allowed) {
            fail(ErrorKind::kIndex, "coefficient refers to a theta index above " + std::to_string(n));
        }
    }
    std::erase_if(coeffs_, [](const auto &kv) {
        return kv.second == 0.0;
    });
}

Complex SqubitState::coefficient(Slot slot) const {
    auto it = coeffs_.find(slot);
    return it == coeffs_.end() ? Complex(0.0) : it->second;
}

double bracket_norm(const SqubitState &psi) {
    double total = 0;
    for (const auto &[slot, c] : psi.coeffs()) {
        total += std::norm(c);
    }
    return total;
}

double bracket_norm_integral(const SqubitState &psi) {
    int n = psi.n();
    UniversePtr u = theta_universe(n);

    // Ket side c_I theta_I, bra side conj(c_I) thetabar_I reversed. Internal
    // kets are orthonormal, so only matching slots pair up.
    Multivector inner(u);
    std::vector<size_t> ket_factors;
    std::vector<size_t> bra_factors;
    for (const auto &[slot, c] : psi.coeffs()) {
        ket_factors.clear();
        bra_factors.clear();
        for (int i = 1; i <= n; i++) {
            if ((slot.tuple >> (i - 1)) & 1) {
                ket_factors.push_back(theta_index(i));
                bra_factors.insert(bra_factors.begin(), thetabar_index(i));
            }
        }
        Multivector ket = Multivector::monomial(u, ket_factors, c);
        Multivector bra = Multivector::monomial(u, bra_factors, std::conj(c));
        inner += mul(bra, ket);
    }

    Multivector exponent(u);
    for (int i = 1; i <= n; i++) {
        std::vector<size_t> pair = {thetabar_index(i), theta_index(i)};
        exponent += Multivector::monomial(u, pair);
    }
    Multivector integrand = mul(exp_nilpotent(exponent), inner);

    std::vector<size_t> measure;
    for (int i = 1; i <= n; i++) {
        measure.push_back(thetabar_index(i));
        measure.push_back(theta_index(i));
    }
    Complex value = body(berezin(integrand, measure));
    return value.real();
}

SqubitState apply_theta(const SqubitState &psi, int i) {
    check_index(psi, i);
    uint32_t b = uint32_t{1} << (i - 1);
    std::map<Slot, Complex> out;
    for (const auto &[slot, c] : psi.coeffs()) {
        if (slot.tuple & b) {
            continue;
        }
        double sign = (std::popcount(slot.tuple & (b - 1)) & 1) ? -1.0 : 1.0;
        out[Slot{slot.tuple | b, slot.ket}] += sign * c;
    }
    return SqubitState(psi.n(), std::move(out));
}

SqubitState apply_thetabar(const SqubitState &psi, int i) {
    check_index(psi, i);
    uint32_t b = uint32_t{1} << (i - 1);
    std::map<Slot, Complex> out;
    for (const auto &[slot, c] : psi.coeffs()) {
        if (!(slot.tuple & b)) {
            continue;
        }
        double sign = (std::popcount(slot.tuple & (b - 1)) & 1) ? -1.0 : 1.0;
        out[Slot{slot.tuple & ~b, slot.ket}] += sign * c;
    }
    return SqubitState(psi.n(), std::move(out));
}

SectorDimensions sector_dimensions(int n) {
    if (n < 1 || n > 63) {
        fail(ErrorKind::kRange, "sector dimensions need 1 <= N <= 63, got " + std::to_string(n));
    }
    uint64_t half = uint64_t{1} << (n - 1);
    return {half, half};
}

SqubitState embed_superqubit(const super::SuperQubitState &psi) {
    for (int k : {super::k0, super::k1}) {
        if (!soul(psi[k]).is_zero()) {
            fail(ErrorKind::kShape, "embedding needs pure complex even amplitudes");
        }
    }
    const auto &dot = psi[super::kDot];
    Complex f = 0.0;
    if (!dot.is_zero()) {
        if (dot.terms().size() != 1 || std::popcount(dot.terms().begin()->first) != 1) {
            fail(ErrorKind::kShape, "embedding needs an odd amplitude of the form c * xi");
        }
        f = dot.terms().begin()->second;
    }
    std::map<Slot, Complex> coeffs;
    coeffs[Slot{0, 0}] = body(psi[super::k0]);
    coeffs[Slot{0, 1}] = body(psi[super::k1]);
    coeffs[Slot{1, 0}] = f;
    return SqubitState(1, std::move(coeffs));
}

}  // namespace qnil::squbit
