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

#include <string>
#include <variant>

#include "qnil/algebra.hpp"
#include "qnil/eta_qubit.hpp"
#include "qnil/expr.hpp"
#include "qnil/squbit.hpp"
#include "qnil/superqubit.hpp"

namespace qnil {

/// Anything a state file can denote. A plain algebra element (including a
/// bare number) is held as a Multivector.
using State =
    std::variant<Multivector, eta::EtaState, super::SuperQubitState, super::TwoSuperQubitState, squbit::SqubitState>;

/// "element", "qubit", "superqubit", "superqubit2" or "squbit".
const char *state_kind(const State &state);

/// Builds the state an expression denotes.
///
/// Generators e<k> are even nilpotents, x<k>/xb<k> conjugate odd pairs and
/// t<k> the squbit auxiliary thetas. The universe always declares e1..e_max
/// and every pair x<k>, xb<k> for k up to the largest index used.
///
/// Kets carry coefficients on the right (|X> psi_X); a coefficient written on
/// the left of an odd ket is moved across it with the Koszul sign.
State evaluate(const expr::StateExpr &e, double zero_tolerance = kDefaultZeroTolerance);

inline State parse_state(std::string_view text, double zero_tolerance = kDefaultZeroTolerance) {
    return evaluate(expr::parse(text), zero_tolerance);
}

}  // namespace qnil
