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

#include "qnil/runner.hpp"

#include <openssl/evp.h>

#include <cmath>

#include "qnil/errors.hpp"

namespace qnil::cli {

namespace {

Multivector number(double tolerance, Complex c) {
    return Multivector::scalar(Universe::create({}, tolerance), c);
}

template <typename T>
const T &expect(const State &state, std::string_view command) {
    if (const T *v = std::get_if<T>(&state)) {
        return *v;
    }
    fail(ErrorKind::kShape,
         "command '" + std::string(command) + "' does not accept a " + state_kind(state) + " state");
}

// Two-qubit states are two-superqubit states with vanishing odd entries.
super::TwoSuperQubitState as_two_superqubits(const State &state, std::string_view command) {
    if (const auto *s = std::get_if<super::TwoSuperQubitState>(&state)) {
        return *s;
    }
    if (const auto *q = std::get_if<eta::EtaState>(&state); q != nullptr && q->n() == 2) {
        const UniversePtr &u = q->function().universe();
        super::SuperMatrix m{{
            {Multivector(u), Multivector(u), Multivector(u)},
            {Multivector(u), Multivector(u), Multivector(u)},
            {Multivector(u), Multivector(u), Multivector(u)},
        }};
        for (int j = 0; j < 2; j++) {
            for (int k = 0; k < 2; k++) {
                Monomial mask = static_cast<Monomial>(j) | (static_cast<Monomial>(k) << 1);
                m[static_cast<size_t>(j)][static_cast<size_t>(k)] = Multivector::scalar(u, q->coefficient(mask));
            }
        }
        return super::TwoSuperQubitState(std::move(m));
    }
    fail(ErrorKind::kShape, "command '" + std::string(command) + "' needs a two-superqubit state, got " +
                                state_kind(state));
}

}  // namespace

const std::vector<std::string> &commands() {
    static const std::vector<std::string> kCommands = {"tangle2", "wronskian", "factor",      "sdet",   "stau",
                                                       "ber",     "norm",      "squbit-norm", "sectors"};
    return kCommands;
}

RunReport run(const State &state, std::string_view command, const RunOptions &options, std::string input_digest) {
    double tol = options.tolerance;
    RunReport r{std::string(command), "", state_kind(state), number(tol, 0.0), Json::object(),
                std::move(input_digest), tol};

    if (command == "tangle2") {
        const auto &q = expect<eta::EtaState>(state, command);
        r.measure = "two_tangle";
        r.value = number(tol, eta::two_tangle(q));
        r.details["wronskian"] = complex_to_json(body(eta::wronskian(q, 1, 2).value));
    } else if (command == "wronskian") {
        const auto &q = expect<eta::EtaState>(state, command);
        r.measure = "wronskian";
        r.value = eta::wronskian(q, options.pair_i, options.pair_j).value;
        r.details["pair"] = Json::array({options.pair_i, options.pair_j});
    } else if (command == "factor") {
        const auto &q = expect<eta::EtaState>(state, command);
        r.measure = "factorization";
        auto factors = eta::factor(q, options.split, tol);
        r.value = number(tol, factors.has_value() ? 1.0 : 0.0);
        r.details["split"] = options.split;
        r.details["factorable"] = factors.has_value();
        if (factors.has_value()) {
            r.details["factors"] = Json::array(
                {multivector_to_json(factors->first.function()), multivector_to_json(factors->second.function())});
        } else {
            r.details["factors"] = nullptr;
        }
    } else if (command == "sdet") {
        auto s = as_two_superqubits(state, command);
        r.measure = "sdet";
        r.value = super::sdet_closed(s);
        Multivector via = super::sdet_via_str(s);
        r.details["via_supertrace"] = multivector_to_json(via);
        r.details["max_deviation"] = max_abs_difference(r.value, via);
    } else if (command == "stau") {
        auto s = as_two_superqubits(state, command);
        r.measure = "super_two_tangle";
        r.value = super::super_two_tangle(s);
        r.details["sdet"] = multivector_to_json(super::sdet_closed(s));
    } else if (command == "ber") {
        auto s = as_two_superqubits(state, command);
        r.measure = "berezinian";
        r.value = super::berezinian(s);
    } else if (command == "norm") {
        if (const auto *q = std::get_if<eta::EtaState>(&state)) {
            r.measure = "scalar_product";
            r.value = number(tol, eta::scalar_product(*q, *q));
        } else if (const auto *sq = std::get_if<super::SuperQubitState>(&state)) {
            r.measure = "q_scalar_square";
            r.value = super::q_scalar_square(*sq);
        } else if (const auto *sb = std::get_if<squbit::SqubitState>(&state)) {
            r.measure = "bracket_norm";
            r.value = number(tol, squbit::bracket_norm(*sb));
        } else {
            fail(ErrorKind::kShape, std::string("command 'norm' does not accept a ") + state_kind(state) + " state");
        }
    } else if (command == "squbit-norm") {
        squbit::SqubitState s = std::holds_alternative<super::SuperQubitState>(state)
                                    ? squbit::embed_superqubit(std::get<super::SuperQubitState>(state))
                                    : expect<squbit::SqubitState>(state, command);
        r.measure = "bracket_norm";
        double closed = squbit::bracket_norm(s);
        double integral = squbit::bracket_norm_integral(s);
        r.value = number(tol, closed);
        r.details["N"] = s.n();
        r.details["closed_sum"] = closed;
        r.details["berezin_integral"] = integral;
    } else if (command == "sectors") {
        int n = 0;
        if (const auto *sb = std::get_if<squbit::SqubitState>(&state)) {
            n = sb->n();
        } else if (const auto *m = std::get_if<Multivector>(&state)) {
            Complex b = body(*m);
            if (!soul(*m).is_zero() || b.imag() != 0 || b.real() != std::floor(b.real()) || b.real() < 0 ||
                b.real() > 1e6) {
                fail(ErrorKind::kRange, "sectors needs a squbit state or a positive integer N");
            }
            n = static_cast<int>(b.real());
        } else {
            fail(ErrorKind::kShape, std::string("command 'sectors' does not accept a ") + state_kind(state) + " state");
        }
        auto dims = squbit::sector_dimensions(n);
        r.measure = "sector_dimensions";
        r.value = number(tol, static_cast<double>(dims.bosonic));
        r.details["N"] = n;
        r.details["bosonic"] = dims.bosonic;
        r.details["fermionic"] = dims.fermionic;
    } else {
        fail(ErrorKind::kInvalidArgument, "unknown command '" + std::string(command) + "'");
    }
    return r;
}

Json report_to_json(const RunReport &report) {
    return Json{
        {"command", report.command},
        {"measure", report.measure},
        {"state_kind", report.state_kind},
        {"body", complex_to_json(body(report.value))},
        {"soul", multivector_to_json(soul(report.value))},
        {"details", report.details},
        {"input_digest", report.input_digest},
        {"tolerance", report.tolerance},
    };
}

std::string digest(std::string_view bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
    static const char kHex[] = "0123456789abcdef";
    std::string out = "sha256:";
    for (unsigned int i = 0; i < len; i++) {
        out += kHex[md[i] >> 4];
        out += kHex[md[i] & 15];
    }
    return out;
}

}  // namespace qnil::cli
