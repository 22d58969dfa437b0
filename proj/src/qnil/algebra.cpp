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

#include "qnil/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <unordered_set>

#include "qnil/errors.hpp"

namespace qnil {

namespace {

constexpr Monomial bit(size_t index) {
    return Monomial{1} << index;
}

int odd_count(Monomial m, const Universe &u) {
    return std::popcount(m & u.odd_mask());
}

}  // namespace

// ---------------------------------------------------------------------------
// Universe

std::shared_ptr<const Universe> Universe::create(std::vector<Generator> generators, double zero_tolerance) {
    if (generators.size() > kMaxGenerators) {
        fail(ErrorKind::kUniverse,
             "a universe holds at most " + std::to_string(kMaxGenerators) + " generators, got " +
                 std::to_string(generators.size()));
    }
    if (!(zero_tolerance >= 0) || !std::isfinite(zero_tolerance)) {
        fail(ErrorKind::kInvalidArgument, "zero tolerance must be finite and nonnegative");
    }
    std::shared_ptr<Universe> u(new Universe());
    u->zero_tolerance_ = zero_tolerance;
    u->generators_ = std::move(generators);
    u->conjugate_.assign(u->generators_.size(), std::nullopt);

    std::unordered_set<std::string> seen;
    for (size_t i = 0; i < u->generators_.size(); i++) {
        const auto &g = u->generators_[i];
        if (g.name.empty()) {
            fail(ErrorKind::kUniverse, "generator names must be nonempty");
        }
        if (!seen.insert(g.name).second) {
            fail(ErrorKind::kUniverse, "duplicate generator '" + g.name + "'");
        }
        if (g.parity == GeneratorParity::kOdd) {
            u->odd_mask_ |= bit(i);
        }
    }
    for (size_t i = 0; i < u->generators_.size(); i++) {
        const auto &g = u->generators_[i];
        if (!g.pair.has_value()) {
            continue;
        }
        if (g.parity != GeneratorParity::kOdd) {
            fail(ErrorKind::kUniverse, "even generator '" + g.name + "' cannot carry a conjugate pair");
        }
        auto partner = u->find(*g.pair);
        if (!partner.has_value()) {
            fail(ErrorKind::kUniverse, "generator '" + g.name + "' is paired with undeclared '" + *g.pair + "'");
        }
        const auto &p = u->generators_[*partner];
        if (*partner == i || p.parity != GeneratorParity::kOdd || p.pair != g.name) {
            fail(ErrorKind::kUniverse,
                 "pair tag of '" + g.name + "' must link two distinct odd generators naming each other");
        }
        u->conjugate_[i] = *partner;
    }
    return u;
}

std::optional<size_t> Universe::find(std::string_view name) const {
    for (size_t i = 0; i < generators_.size(); i++) {
        if (generators_[i].name == name) {
            return i;
        }
    }
    return std::nullopt;
}

size_t Universe::index_of(std::string_view name) const {
    auto found = find(name);
    if (!found.has_value()) {
        fail(ErrorKind::kUniverse, "generator '" + std::string(name) + "' is not in the universe");
    }
    return *found;
}

bool Universe::is_barred(size_t index) const {
    auto c = conjugate_[index];
    return c.has_value() && *c < index;
}

bool Universe::same_generators(const Universe &other) const {
    return this == &other || generators_ == other.generators_;
}

const char *parity_name(Parity parity) {
    switch (parity) {
        case Parity::kEven:
            return "even";
        case Parity::kOdd:
            return "odd";
        case Parity::kInhomogeneous:
            return "inhomogeneous";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Multivector

Multivector::Multivector(UniversePtr universe) : universe_(std::move(universe)) {
    if (universe_ == nullptr) {
        fail(ErrorKind::kUniverse, "multivector needs a universe");
    }
}

Multivector::Multivector(UniversePtr universe, std::map<Monomial, Complex> terms)
    : universe_(std::move(universe)), terms_(std::move(terms)) {
    if (universe_ == nullptr) {
        fail(ErrorKind::kUniverse, "multivector needs a universe");
    }
    Monomial allowed = universe_->size() == 64 ? ~Monomial{0} : bit(universe_->size()) - 1;
    for (const auto &[m, c] : terms_) {
        if (m & ~allowed) {
            fail(ErrorKind::kUniverse, "monomial refers to a generator outside the universe");
        }
    }
    prune();
}

Multivector Multivector::scalar(UniversePtr universe, Complex value) {
    return Multivector(std::move(universe), {{Monomial{0}, value}});
}

Multivector Multivector::generator(UniversePtr universe, size_t index) {
    if (index >= universe->size()) {
        fail(ErrorKind::kUniverse, "generator index " + std::to_string(index) + " out of range");
    }
    return Multivector(std::move(universe), {{bit(index), Complex(1.0)}});
}

Multivector Multivector::generator(UniversePtr universe, std::string_view name) {
    size_t index = universe->index_of(name);
    return generator(std::move(universe), index);
}

Multivector Multivector::monomial(UniversePtr universe, std::span<const size_t> factors, Complex coeff) {
    Multivector result = scalar(universe, coeff);
    for (size_t f : factors) {
        result = mul(result, generator(universe, f));
    }
    return result;
}

void Multivector::prune() {
    double tol = universe_->zero_tolerance();
    std::erase_if(terms_, [tol](const auto &kv) {
        return !(std::abs(kv.second) > tol);
    });
}

Complex Multivector::coefficient(Monomial monomial) const {
    auto it = terms_.find(monomial);
    return it == terms_.end() ? Complex(0.0) : it->second;
}

Parity Multivector::parity() const {
    bool has_even = false;
    bool has_odd = false;
    for (const auto &[m, c] : terms_) {
        if (odd_count(m, *universe_) & 1) {
            has_odd = true;
        } else {
            has_even = true;
        }
    }
    if (has_even && has_odd) {
        return Parity::kInhomogeneous;
    }
    return has_odd ? Parity::kOdd : Parity::kEven;
}

bool Multivector::has_parity(Parity parity) const {
    return is_zero() || this->parity() == parity;
}

Multivector Multivector::part(Parity parity) const {
    std::map<Monomial, Complex> kept;
    int want = parity == Parity::kOdd ? 1 : 0;
    for (const auto &[m, c] : terms_) {
        if ((odd_count(m, *universe_) & 1) == want) {
            kept.emplace(m, c);
        }
    }
    return Multivector(universe_, std::move(kept));
}

Multivector Multivector::operator-() const {
    Multivector r = *this;
    for (auto &[m, c] : r.terms_) {
        c = -c;
    }
    return r;
}

Multivector &Multivector::operator+=(const Multivector &other) {
    require_same_universe(*this, other);
    for (const auto &[m, c] : other.terms_) {
        terms_[m] += c;
    }
    prune();
    return *this;
}

Multivector &Multivector::operator-=(const Multivector &other) {
    require_same_universe(*this, other);
    for (const auto &[m, c] : other.terms_) {
        terms_[m] -= c;
    }
    prune();
    return *this;
}

Multivector &Multivector::operator*=(Complex factor) {
    for (auto &[m, c] : terms_) {
        c *= factor;
    }
    prune();
    return *this;
}

// ---------------------------------------------------------------------------
// Operations

int reorder_sign(Monomial left_odd, Monomial right_odd) {
    int swaps = 0;
    for (Monomial r = right_odd; r != 0; r &= r - 1) {
        int j = std::countr_zero(r);
        Monomial above = j == 63 ? 0 : (left_odd >> (j + 1));
        swaps += std::popcount(above);
    }
    return (swaps & 1) ? -1 : 1;
}

void require_same_universe(const Multivector &a, const Multivector &b) {
    if (!a.universe()->same_generators(*b.universe())) {
        fail(ErrorKind::kUniverse, "operands live over different generator universes");
    }
}

Multivector mul(const Multivector &a, const Multivector &b) {
    require_same_universe(a, b);
    Monomial odd = a.universe()->odd_mask();
    std::map<Monomial, Complex> out;
    for (const auto &[ma, ca] : a.terms()) {
        for (const auto &[mb, cb] : b.terms()) {
            if (ma & mb) {
                continue;
            }
            out[ma | mb] += static_cast<double>(reorder_sign(ma & odd, mb & odd)) * ca * cb;
        }
    }
    return Multivector(a.universe(), std::move(out));
}

Complex body(const Multivector &a) {
    return a.coefficient(0);
}

Multivector soul(const Multivector &a) {
    auto terms = a.terms();
    terms.erase(Monomial{0});
    return Multivector(a.universe(), std::move(terms));
}

Multivector star(const Multivector &a) {
    std::map<Monomial, Complex> out;
    Monomial odd = a.universe()->odd_mask();
    for (const auto &[m, c] : a.terms()) {
        if (m & odd) {
            fail(ErrorKind::kSector, "star is defined on the even-nilpotent sector only");
        }
        out.emplace(m, std::conj(c));
    }
    return Multivector(a.universe(), std::move(out));
}

Multivector sharp(const Multivector &a) {
    if (a.parity() == Parity::kInhomogeneous) {
        fail(ErrorKind::kParity, "sharp requires a homogeneous element");
    }
    const Universe &u = *a.universe();
    Multivector result(a.universe());
    std::vector<size_t> factors;
    for (const auto &[m, c] : a.terms()) {
        factors.clear();
        Complex coeff = std::conj(c);
        for (Monomial r = m; r != 0; r &= r - 1) {
            size_t g = static_cast<size_t>(std::countr_zero(r));
            if (!u.is_odd(g)) {
                factors.push_back(g);
                continue;
            }
            auto partner = u.conjugate(g);
            if (!partner.has_value()) {
                fail(ErrorKind::kSector,
                     "sharp needs a conjugate partner for odd generator '" + u.generator(g).name + "'");
            }
            if (u.is_barred(g)) {
                coeff = -coeff;
            }
            factors.push_back(*partner);
        }
        result += Multivector::monomial(a.universe(), factors, coeff);
    }
    return result;
}

Multivector derive(const Multivector &a, size_t generator) {
    const Universe &u = *a.universe();
    if (generator >= u.size()) {
        fail(ErrorKind::kUniverse, "generator index " + std::to_string(generator) + " out of range");
    }
    Monomial g = bit(generator);
    Monomial below = g - 1;
    bool odd = u.is_odd(generator);
    std::map<Monomial, Complex> out;
    for (const auto &[m, c] : a.terms()) {
        if (!(m & g)) {
            continue;
        }
        double sign = (odd && (std::popcount(m & below & u.odd_mask()) & 1)) ? -1.0 : 1.0;
        out[m & ~g] += sign * c;
    }
    return Multivector(a.universe(), std::move(out));
}

Multivector derive(const Multivector &a, std::string_view generator) {
    return derive(a, a.universe()->index_of(generator));
}

Multivector berezin(const Multivector &a, std::span<const size_t> gens) {
    for (size_t g : gens) {
        if (g >= a.universe()->size()) {
            fail(ErrorKind::kUniverse, "generator index " + std::to_string(g) + " out of range");
        }
        if (!a.universe()->is_odd(g)) {
            fail(ErrorKind::kSector,
                 "Berezin integration over even generator '" + a.universe()->generator(g).name + "'");
        }
    }
    Multivector result = a;
    for (size_t g : gens) {
        result = derive(result, g);
    }
    return result;
}

Multivector exp_nilpotent(const Multivector &a) {
    if (std::abs(body(a)) > a.universe()->zero_tolerance()) {
        fail(ErrorKind::kBody, "exp_nilpotent needs a bodyless argument; split off the scalar first");
    }
    Multivector result = Multivector::scalar(a.universe(), 1.0);
    Multivector term = result;
    for (size_t k = 1; k <= a.universe()->size() + 1; k++) {
        term = mul(term, a) / static_cast<double>(k);
        if (term.is_zero()) {
            break;
        }
        result += term;
    }
    return result;
}

Multivector invert(const Multivector &a) {
    Complex b = body(a);
    if (!(std::abs(b) > a.universe()->zero_tolerance())) {
        fail(ErrorKind::kNotInvertible, "element has no body and is not invertible: " + to_string(a));
    }
    Multivector x = soul(a) * (-1.0 / b);
    Multivector sum = Multivector::scalar(a.universe(), 1.0);
    Multivector term = sum;
    for (size_t k = 1; k <= a.universe()->size() + 1; k++) {
        term = mul(term, x);
        if (term.is_zero()) {
            break;
        }
        sum += term;
    }
    return sum / b;
}

Multivector power(const Multivector &a, double alpha) {
    Complex b = body(a);
    if (!(std::abs(b) > a.universe()->zero_tolerance())) {
        fail(ErrorKind::kNotInvertible, "power needs an element with nonzero body");
    }
    Multivector x = soul(a) / b;
    Multivector sum = Multivector::scalar(a.universe(), 1.0);
    Multivector term = sum;
    double binom = 1.0;
    for (size_t k = 1; k <= a.universe()->size() + 1; k++) {
        binom *= (alpha - static_cast<double>(k - 1)) / static_cast<double>(k);
        term = mul(term, x);
        if (term.is_zero()) {
            break;
        }
        sum += term * binom;
    }
    return sum * std::pow(b, alpha);
}

double max_abs_difference(const Multivector &a, const Multivector &b) {
    require_same_universe(a, b);
    double worst = 0;
    for (const auto &[m, c] : a.terms()) {
        worst = std::max(worst, std::abs(c - b.coefficient(m)));
    }
    for (const auto &[m, c] : b.terms()) {
        if (!a.terms().contains(m)) {
            worst = std::max(worst, std::abs(c));
        }
    }
    return worst;
}

std::string to_string(const Multivector &a) {
    if (a.is_zero()) {
        return "0";
    }
    std::ostringstream out;
    out.precision(17);
    bool first = true;
    for (const auto &[m, c] : a.terms()) {
        if (!first) {
            out << " + ";
        }
        first = false;
        if (c.imag() == 0) {
            out << c.real();
        } else {
            out << "(" << c.real() << "," << c.imag() << ")";
        }
        for (Monomial r = m; r != 0; r &= r - 1) {
            out << "*" << a.universe()->generator(static_cast<size_t>(std::countr_zero(r))).name;
        }
    }
    return out.str();
}

}  // namespace qnil
