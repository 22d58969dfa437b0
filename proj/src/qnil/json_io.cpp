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

#include "qnil/json_io.hpp"

#include <bit>

#include "qnil/errors.hpp"

namespace qnil {

namespace {

[[noreturn]] void bad(const std::string &what) {
    fail(ErrorKind::kInvalidArgument, "malformed JSON: " + what);
}

const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        bad(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

double number_field(const Json &j, const char *key) {
    if (!j.contains(key)) {
        return 0.0;
    }
    const Json &v = j.at(key);
    if (!v.is_number()) {
        bad(std::string("field '") + key + "' must be a number");
    }
    return v.get<double>();
}

const char *kTwoLabels[3][3] = {{"00", "01", "0."}, {"10", "11", "1."}, {".0", ".1", ".."}};

}  // namespace

Json complex_to_json(Complex c) {
    return Json{{"re", c.real()}, {"im", c.imag()}};
}

Json multivector_to_json(const Multivector &m) {
    Json universe = Json::array();
    for (const auto &g : m.universe()->generators()) {
        Json jg{{"name", g.name}, {"parity", g.parity == GeneratorParity::kOdd ? "odd" : "even"}};
        if (g.pair.has_value()) {
            jg["pair"] = *g.pair;
        }
        universe.push_back(std::move(jg));
    }
    Json terms = Json::array();
    for (const auto &[mono, c] : m.terms()) {
        Json gens = Json::array();
        for (Monomial r = mono; r != 0; r &= r - 1) {
            gens.push_back(m.universe()->generator(static_cast<size_t>(std::countr_zero(r))).name);
        }
        terms.push_back(Json{{"gens", std::move(gens)}, {"re", c.real()}, {"im", c.imag()}});
    }
    return Json{{"universe", std::move(universe)}, {"terms", std::move(terms)}};
}

Multivector multivector_from_json(const Json &j, double zero_tolerance) {
    const Json &ju = field(j, "universe");
    if (!ju.is_array()) {
        bad("'universe' must be an array");
    }
    std::vector<Generator> gens;
    for (const auto &jg : ju) {
        Generator g;
        const Json &name = field(jg, "name");
        const Json &parity = field(jg, "parity");
        if (!name.is_string() || !parity.is_string()) {
            bad("generator name and parity must be strings");
        }
        g.name = name.get<std::string>();
        std::string p = parity.get<std::string>();
        if (p == "even") {
            g.parity = GeneratorParity::kEven;
        } else if (p == "odd") {
            g.parity = GeneratorParity::kOdd;
        } else {
            bad("parity must be \"even\" or \"odd\"");
        }
        if (jg.contains("pair")) {
            if (!jg.at("pair").is_string()) {
                bad("'pair' must be a string");
            }
            g.pair = jg.at("pair").get<std::string>();
        }
        gens.push_back(std::move(g));
    }
    UniversePtr u = Universe::create(std::move(gens), zero_tolerance);

    const Json &jt = field(j, "terms");
    if (!jt.is_array()) {
        bad("'terms' must be an array");
    }
    Multivector result(u);
    std::vector<size_t> factors;
    for (const auto &term : jt) {
        const Json &jg = field(term, "gens");
        if (!jg.is_array()) {
            bad("'gens' must be an array");
        }
        factors.clear();
        for (const auto &name : jg) {
            if (!name.is_string()) {
                bad("generator names must be strings");
            }
            factors.push_back(u->index_of(name.get<std::string>()));
        }
        Complex c(number_field(term, "re"), number_field(term, "im"));
        result += Multivector::monomial(u, factors, c);
    }
    return result;
}

Json state_to_json(const State &s) {
    return std::visit(
        [](const auto &v) -> Json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Multivector>) {
                return Json{{"type", "element"}, {"value", multivector_to_json(v)}};
            } else if constexpr (std::is_same_v<T, eta::EtaState>) {
                return Json{{"type", "qubit"}, {"n", v.n()}, {"function", multivector_to_json(v.function())}};
            } else if constexpr (std::is_same_v<T, super::SuperQubitState>) {
                Json entries{{"0", multivector_to_json(v[super::k0])},
                             {"1", multivector_to_json(v[super::k1])},
                             {".", multivector_to_json(v[super::kDot])}};
                return Json{{"type", "superqubit"}, {"entries", std::move(entries)}};
            } else if constexpr (std::is_same_v<T, super::TwoSuperQubitState>) {
                Json entries = Json::object();
                for (int x = 0; x < 3; x++) {
                    for (int y = 0; y < 3; y++) {
                        entries[kTwoLabels[x][y]] = multivector_to_json(v.at(x, y));
                    }
                }
                return Json{{"type", "superqubit2"}, {"entries", std::move(entries)}};
            } else {
                Json coeffs = Json::array();
                for (const auto &[slot, c] : v.coeffs()) {
                    Json idx = Json::array();
                    for (int i = 1; i <= v.n(); i++) {
                        if ((slot.tuple >> (i - 1)) & 1) {
                            idx.push_back(i);
                        }
                    }
                    coeffs.push_back(Json{{"idx", std::move(idx)}, {"ket", slot.ket}, {"re", c.real()}, {"im", c.imag()}});
                }
                return Json{{"type", "squbit"}, {"N", v.n()}, {"coeffs", std::move(coeffs)}};
            }
        },
        s);
}

State state_from_json(const Json &j, double zero_tolerance) {
    const Json &jtype = field(j, "type");
    if (!jtype.is_string()) {
        bad("'type' must be a string");
    }
    std::string type = jtype.get<std::string>();
    if (type == "element") {
        return multivector_from_json(field(j, "value"), zero_tolerance);
    }
    if (type == "qubit") {
        return eta::EtaState::from_function(multivector_from_json(field(j, "function"), zero_tolerance));
    }
    if (type == "superqubit" || type == "superqubit2") {
        const Json &entries = field(j, "entries");
        auto entry = [&](const char *label, const UniversePtr *u) -> Multivector {
            if (entries.contains(label)) {
                Multivector m = multivector_from_json(entries.at(label), zero_tolerance);
                if (u != nullptr && !(*u)->same_generators(*m.universe())) {
                    fail(ErrorKind::kUniverse, std::string("entry '") + label + "' uses a different universe");
                }
                return m;
            }
            if (u == nullptr) {
                bad(std::string("missing entry '") + label + "'");
            }
            return Multivector(*u);
        };
        if (type == "superqubit") {
            Multivector psi0 = entry("0", nullptr);
            const UniversePtr &u = psi0.universe();
            return super::SuperQubitState(psi0, entry("1", &u), entry(".", &u));
        }
        Multivector first = entry("00", nullptr);
        UniversePtr u = first.universe();
        super::SuperMatrix m{{
            {Multivector(u), Multivector(u), Multivector(u)},
            {Multivector(u), Multivector(u), Multivector(u)},
            {Multivector(u), Multivector(u), Multivector(u)},
        }};
        for (size_t x = 0; x < 3; x++) {
            for (size_t y = 0; y < 3; y++) {
                m[x][y] = (x == 0 && y == 0) ? first : entry(kTwoLabels[x][y], &u);
            }
        }
        return super::TwoSuperQubitState(std::move(m));
    }
    if (type == "squbit") {
        const Json &jn = field(j, "N");
        if (!jn.is_number_integer()) {
            bad("'N' must be an integer");
        }
        int n = jn.get<int>();
        if (n < 1 || n > squbit::kMaxAuxiliary) {
            fail(ErrorKind::kRange, "auxiliary theta count must be in 1.." + std::to_string(squbit::kMaxAuxiliary));
        }
        std::map<squbit::Slot, Complex> coeffs;
        const Json &jcoeffs = field(j, "coeffs");
        if (!jcoeffs.is_array()) {
            bad("'coeffs' must be an array");
        }
        for (const auto &jc : jcoeffs) {
            squbit::Slot slot;
            int previous = 0;
            const Json &jidx = field(jc, "idx");
            if (!jidx.is_array()) {
                bad("'idx' must be an array");
            }
            for (const auto &ji : jidx) {
                if (!ji.is_number_integer()) {
                    bad("'idx' entries must be integers");
                }
                int i = ji.get<int>();
                if (i <= previous) {
                    bad("'idx' must be strictly increasing and start at 1");
                }
                if (i > n) {
                    fail(ErrorKind::kIndex, "theta index " + std::to_string(i) + " exceeds N=" + std::to_string(n));
                }
                slot.tuple |= uint32_t{1} << (i - 1);
                previous = i;
            }
            if (jc.contains("ket")) {
                if (!jc.at("ket").is_number_unsigned()) {
                    bad("'ket' must be a nonnegative integer");
                }
                slot.ket = jc.at("ket").get<uint32_t>();
            }
            coeffs[slot] += Complex(number_field(jc, "re"), number_field(jc, "im"));
        }
        return squbit::SqubitState(n, std::move(coeffs));
    }
    bad("unknown state type '" + type + "'");
}

}  // namespace qnil
