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

#include "json.hpp"
#include "qnil/algebra.hpp"
#include "qnil/state.hpp"

namespace qnil {

using Json = nlohmann::ordered_json;

/// {"universe":[{"name","parity","pair"?}...],"terms":[{"gens":[...],"re","im"}...]}
Json multivector_to_json(const Multivector &m);
/// Accepts gens in any order and applies the reordering sign. Throws
/// InvalidArgumentError on malformed documents.
Multivector multivector_from_json(const Json &j, double zero_tolerance = kDefaultZeroTolerance);

Json complex_to_json(Complex c);

/// Shapes by kind:
///   qubit       {"type":"qubit","n":n,"function":mv}
///   superqubit  {"type":"superqubit","entries":{"0":mv,"1":mv,".":mv}}
///   superqubit2 {"type":"superqubit2","entries":{"00":mv,...,"..":mv}}
///   squbit      {"type":"squbit","N":n,"coeffs":[{"idx":[i,...],"ket":k,"re","im"}...]}
///   element     {"type":"element","value":mv}
Json state_to_json(const State &s);
State state_from_json(const Json &j, double zero_tolerance = kDefaultZeroTolerance);

}  // namespace qnil
