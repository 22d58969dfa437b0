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

#include "qnil/state.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <map>

#include "qnil/errors.hpp"

namespace qnil {

namespace {

using expr::Node;
using expr::NodeKind;

std::string where(const Node &n) {
    return std::to_string(n.pos.line) + ":" + std::to_string(n.pos.column) + ": ";
}

int generator_index(const std::string &name) {
    size_t prefix = name.starts_with("xb") ? 2 : 1;
    int k = 0;
    std::from_chars(name.data() + prefix, name.data() + name.size(), k);
    return k;
}

struct Scan {
    int max_e = 0;
    int max_x = 0;
    int max_t = 0;
    bool any_ket = false;
    bool sector_kets = false;
    bool dotted_kets = false;
    size_t arity = 0;
};

Scan scan(const Node *root) {
    Scan s;
    std::vector<const Node *> stack = {root};
    while (!stack.empty()) {
        const Node *n = stack.back();
        stack.pop_back();
        if (n == nullptr) {
            continue;
        }
        if (n->kind == NodeKind::kGenerator) {
            int k = generator_index(n->text);
            if (n->text[0] == 'e') {
                s.max_e = std::max(s.max_e, k);
            } else if (n->text[0] == 'x') {
                s.max_x = std::max(s.max_x, k);
            } else {
                s.max_t = std::max(s.max_t, k);
            }
        } else if (n->kind == NodeKind::kKet) {
            s.any_ket = true;
            if (n->text[0] == 'B' || n->text[0] == 'F') {
                s.sector_kets = true;
            } else {
                s.arity = n->text.size();
                s.dotted_kets |= n->text.find('.') != std::string::npos;
            }
        }
        stack.push_back(n->lhs.get());
        stack.push_back(n->rhs.get());
    }
    return s;
}

UniversePtr build_universe(const Scan &s, double tol) {
    std::vector<Generator> gens;
    for (int k = 1; k <= s.max_e; k++) {
        gens.push_back({"e" + std::to_string(k), GeneratorParity::kEven, std::nullopt});
    }
    for (int k = 1; k <= s.max_x; k++) {
        std::string x = "x" + std::to_string(k);
        std::string xb = "xb" + std::to_string(k);
        gens.push_back({x, GeneratorParity::kOdd, xb});
        gens.push_back({xb, GeneratorParity::kOdd, x});
    }
    for (int k = 1; k <= s.max_t; k++) {
        gens.push_back({"t" + std::to_string(k), GeneratorParity::kOdd, std::nullopt});
    }
    return Universe::create(std::move(gens), tol);
}

// Linear combination of kets with algebra-valued coefficients; the key ""
// holds the ket-free part.
using Value = std::map<std::string, Multivector>;

bool odd_ket(const std::string &label) {
    return std::count(label.begin(), label.end(), '.') % 2 == 1;
}

class Evaluator {
   public:
    explicit Evaluator(UniversePtr u) : u_(std::move(u)) {
    }

    Value eval(const Node &n) {
        switch (n.kind) {
            case NodeKind::kNumber:
            case NodeKind::kImaginary:
            case NodeKind::kSqrt:
                return scalar(Multivector::scalar(u_, number(n)));
            case NodeKind::kGenerator:
                return scalar(Multivector::generator(u_, n.text));
            case NodeKind::kKet: {
                Value v;
                v.emplace(n.text, Multivector::scalar(u_, 1.0));
                return v;
            }
            case NodeKind::kNeg: {
                Value v = eval(*n.lhs);
                for (auto &[k, c] : v) {
                    c = -c;
                }
                return v;
            }
            case NodeKind::kAdd:
            case NodeKind::kSub: {
                Value a = eval(*n.lhs);
                Value b = eval(*n.rhs);
                for (auto &[k, c] : b) {
                    auto it = a.try_emplace(k, u_).first;
                    if (n.kind == NodeKind::kAdd) {
                        it->second += c;
                    } else {
                        it->second -= c;
                    }
                }
                return clean(std::move(a));
            }
            case NodeKind::kMul:
                return product(eval(*n.lhs), eval(*n.rhs), n);
            case NodeKind::kDiv: {
                Complex d = number(*n.rhs);
                if (d == 0.0) {
                    fail(ErrorKind::kRange, where(n) + "division by zero");
                }
                Value v = eval(*n.lhs);
                for (auto &[k, c] : v) {
                    c = c / d;
                }
                return clean(std::move(v));
            }
        }
        fail(ErrorKind::kInvalidArgument, "unknown expression node");
    }

   private:
    static Complex number(const Node &n) {
        switch (n.kind) {
            case NodeKind::kNumber:
                return n.value;
            case NodeKind::kImaginary:
                return Complex(0.0, 1.0);
            case NodeKind::kSqrt:
                return std::sqrt(n.value);
            default:
                fail(ErrorKind::kInvalidArgument, where(n) + "expected a number");
        }
    }

    Value scalar(Multivector m) const {
        Value v;
        v.emplace("", std::move(m));
        return v;
    }

    static Value clean(Value v) {
        std::erase_if(v, [](const auto &kv) {
            return kv.second.is_zero();
        });
        return v;
    }

    static bool has_kets(const Value &v) {
        return std::any_of(v.begin(), v.end(), [](const auto &kv) {
            return !kv.first.empty();
        });
    }

    Multivector part(const Value &v, const std::string &key) const {
        auto it = v.find(key);
        return it == v.end() ? Multivector(u_) : it->second;
    }

    Value product(const Value &a, const Value &b, const Node &n) const {
        bool ka = has_kets(a);
        bool kb = has_kets(b);
        if (ka && kb) {
            fail(ErrorKind::kArity, where(n) + "cannot multiply two kets; write each basis ket in full");
        }
        Value out;
        if (!ka && !kb) {
            out.emplace("", mul(part(a, ""), part(b, "")));
        } else if (ka) {
            Multivector right = part(b, "");
            for (const auto &[k, c] : a) {
                out.emplace(k, mul(c, right));
            }
        } else {
            Multivector left = part(a, "");
            for (const auto &[k, c] : b) {
                // c |X> = |X> c' with the odd part of c flipped past an odd ket.
                Multivector moved = odd_ket(k) ? left.part(Parity::kEven) - left.part(Parity::kOdd) : left;
                out.emplace(k, mul(moved, c));
            }
        }
        return clean(std::move(out));
    }

    UniversePtr u_;
};

Multivector coefficient(const Value &v, const std::string &key, const UniversePtr &u) {
    auto it = v.find(key);
    return it == v.end() ? Multivector(u) : it->second;
}

State to_qubit(const Value &v, size_t n, double tol) {
    if (n > static_cast<size_t>(eta::kMaxDenseQubits)) {
        fail(ErrorKind::kShape, "at most " + std::to_string(eta::kMaxDenseQubits) + " qubits are supported");
    }
    std::vector<Complex> amps(size_t{1} << n, 0.0);
    for (const auto &[label, c] : v) {
        if (!soul(c).is_zero()) {
            fail(ErrorKind::kShape, "qubit amplitudes must be complex numbers, got " + to_string(c) + " on |" +
                                        label + ">");
        }
        size_t index = 0;
        for (char ch : label) {
            index = (index << 1) | (ch == '1' ? 1 : 0);
        }
        amps[index] = body(c);
    }
    return eta::EtaState::from_amplitudes(amps, static_cast<int>(n), tol);
}

State to_superqubit(const Value &v, size_t n, const UniversePtr &u) {
    static const char kLevels[3] = {'0', '1', '.'};
    if (n == 1) {
        return super::SuperQubitState(coefficient(v, "0", u), coefficient(v, "1", u), coefficient(v, ".", u));
    }
    if (n == 2) {
        super::SuperMatrix m{{
            {Multivector(u), Multivector(u), Multivector(u)},
            {Multivector(u), Multivector(u), Multivector(u)},
            {Multivector(u), Multivector(u), Multivector(u)},
        }};
        for (size_t x = 0; x < 3; x++) {
            for (size_t y = 0; y < 3; y++) {
                m[x][y] = coefficient(v, std::string{kLevels[x], kLevels[y]}, u);
            }
        }
        return super::TwoSuperQubitState(std::move(m));
    }
    fail(ErrorKind::kArity, "superqubit states are supported for one or two superqubits, got arity " +
                                std::to_string(n));
}

State to_squbit(const Value &v, const Scan &s) {
    int n = std::max(1, s.max_t);
    // Generators t1..tN sit after the e and x generators.
    size_t t_offset = static_cast<size_t>(s.max_e + 2 * s.max_x);
    std::map<squbit::Slot, Complex> coeffs;
    for (const auto &[label, c] : v) {
        bool fermionic = label[0] == 'F';
        uint32_t ket = 0;
        if (label.size() > 1) {
            std::from_chars(label.data() + 1, label.data() + label.size(), ket);
        }
        for (const auto &[m, value] : c.terms()) {
            if (m & ((Monomial{1} << t_offset) - 1)) {
                fail(ErrorKind::kShape, "squbit coefficients may only involve t<k> generators");
            }
            auto tuple = static_cast<uint32_t>(m >> t_offset);
            bool odd_tuple = std::popcount(tuple) % 2 == 1;
            if (odd_tuple != fermionic) {
                fail(ErrorKind::kSector, "ket |" + label + "> cannot carry " +
                                             std::to_string(std::popcount(tuple)) +
                                             " thetas: bosonic kets take even, fermionic kets odd products");
            }
            // Canonical t-order already absorbed the permutation sign.
            coeffs[squbit::Slot{tuple, ket}] += value;
        }
    }
    return squbit::SqubitState(n, std::move(coeffs));
}

}  // namespace

const char *state_kind(const State &state) {
    switch (state.index()) {
        case 0:
            return "element";
        case 1:
            return "qubit";
        case 2:
            return "superqubit";
        case 3:
            return "superqubit2";
        case 4:
            return "squbit";
    }
    return "?";
}

State evaluate(const expr::StateExpr &e, double zero_tolerance) {
    Scan s = scan(e.root.get());
    UniversePtr u = build_universe(s, zero_tolerance);
    Value v = Evaluator(u).eval(*e.root);

    if (!s.any_ket) {
        Multivector m = coefficient(v, "", u);
        if (s.max_e > 0 && s.max_x == 0 && s.max_t == 0) {
            return eta::EtaState::from_function(std::move(m));
        }
        return m;
    }
    if (v.contains("")) {
        fail(ErrorKind::kArity, "a ket-free term is added to kets: " + to_string(v.at("")));
    }
    if (s.sector_kets) {
        if (s.max_e > 0 || s.max_x > 0) {
            fail(ErrorKind::kShape, "squbit coefficients may only involve t<k> generators");
        }
        return to_squbit(v, s);
    }
    if (s.max_t > 0) {
        fail(ErrorKind::kShape, "t<k> generators belong to squbit states written with |B> and |F> kets");
    }
    if (s.dotted_kets || s.max_x > 0) {
        return to_superqubit(v, s.arity, u);
    }
    return to_qubit(v, s.arity, zero_tolerance);
}

}  // namespace qnil
