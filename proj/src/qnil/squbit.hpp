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

#include <cstdint>
#include <map>
#include <utility>

#include "qnil/algebra.hpp"
#include "qnil/superqubit.hpp"

namespace qnil::squbit {

inline constexpr int kMaxAuxiliary = 12;

enum class Sector { kBosonic, kFermionic };

/// One coefficient slot: the theta monomial theta_{i1}...theta_{ik} (bit i-1
/// set for theta_i, indices increasing) and the internal ket it multiplies.
/// Even-length tuples attach to bosonic kets |B_n>, odd-length ones to
/// fermionic kets |F_n>; `ket` numbers the internal kets within the sector.
struct Slot {
    uint32_t tuple = 0;
    uint32_t ket = 0;

    Sector sector() const;
    auto operator<=>(const Slot &) const = default;
};

class SqubitState {
   public:
    /// Throws RangeError unless 1 <= n <= kMaxAuxiliary and IndexError when a
    /// slot mentions theta_i with i > n.
    SqubitState(int n, std::map<Slot, Complex> coeffs);

    int n() const {
        return n_;
    }
    const std::map<Slot, Complex> &coeffs() const {
        return coeffs_;
    }
    Complex coefficient(Slot slot) const;

   private:
    int n_;
    std::map<Slot, Complex> coeffs_;
};

/// |b|^2 + sum |f_i|^2 + sum_{i<j} |b_ij|^2 + ...
double bracket_norm(const SqubitState &psi);

/// The same norm obtained by building <psi|psi> over theta/theta-bar
/// Grassmann generators and integrating exp(sum thetabar theta) <psi|psi>
/// against prod dthetabar dtheta.
double bracket_norm_integral(const SqubitState &psi);

/// Creation operator theta_i, with the sign of the occupied indices below i.
SqubitState apply_theta(const SqubitState &psi, int i);
/// Annihilation operator thetabar^i.
SqubitState apply_thetabar(const SqubitState &psi, int i);

struct SectorDimensions {
    uint64_t bosonic;
    uint64_t fermionic;
};

SectorDimensions sector_dimensions(int n);

/// Maps psi_0, psi_1 to bosonic kets |B_0>, |B_1> and c in psi_dot = c xi to
/// f theta_1 |F_0>, with one auxiliary theta.
SqubitState embed_superqubit(const super::SuperQubitState &psi);

}  // namespace qnil::squbit
