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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qnil {

using Complex = std::complex<double>;

inline constexpr double kDefaultZeroTolerance = 1e-12;

enum class GeneratorParity { kEven, kOdd };

struct Generator {
    std::string name;
    GeneratorParity parity = GeneratorParity::kEven;
    /// Name of the conjugate partner. Only odd generators may be paired.
    std::optional<std::string> pair;

    bool operator==(const Generator &) const = default;
};

/// Ordered generator list shared by every Multivector built over it.
///
/// Declaration order is the canonical monomial order. Even generators are
/// commuting nilpotents (eta); odd generators anticommute (xi). Within a
/// conjugate pair the earlier-declared generator plays xi and the later one
/// xi-bar, which fixes the action of `sharp`.
class Universe {
   public:
    static constexpr size_t kMaxGenerators = 64;

    static std::shared_ptr<const Universe> create(
        std::vector<Generator> generators, double zero_tolerance = kDefaultZeroTolerance);

    size_t size() const {
        return generators_.size();
    }
    const Generator &generator(size_t index) const {
        return generators_[index];
    }
    const std::vector<Generator> &generators() const {
        return generators_;
    }
    std::optional<size_t> find(std::string_view name) const;
    /// Throws UniverseError when the name is not declared.
    size_t index_of(std::string_view name) const;

    uint64_t odd_mask() const {
        return odd_mask_;
    }
    bool is_odd(size_t index) const {
        return (odd_mask_ >> index) & 1;
    }
    std::optional<size_t> conjugate(size_t index) const {
        return conjugate_[index];
    }
    /// True for the second member of a conjugate pair.
    bool is_barred(size_t index) const;
    double zero_tolerance() const {
        return zero_tolerance_;
    }

    /// Structural equality of the generator lists (tolerance is not compared).
    bool same_generators(const Universe &other) const;

   private:
    Universe() = default;

    std::vector<Generator> generators_;
    std::vector<std::optional<size_t>> conjugate_;
    uint64_t odd_mask_ = 0;
    double zero_tolerance_ = kDefaultZeroTolerance;
};

using UniversePtr = std::shared_ptr<const Universe>;

enum class Parity { kEven, kOdd, kInhomogeneous };

const char *parity_name(Parity parity);

/// A set of generators, bit i standing for generator i of the universe.
using Monomial = uint64_t;

/// Sparse element of the graded algebra: monomial -> complex coefficient.
///
/// Terms whose magnitude is at or below the universe's zero tolerance are
/// never stored, so equal elements have identical term maps.
class Multivector {
   public:
    explicit Multivector(UniversePtr universe);
    Multivector(UniversePtr universe, std::map<Monomial, Complex> terms);

    static Multivector scalar(UniversePtr universe, Complex value);
    static Multivector generator(UniversePtr universe, size_t index);
    static Multivector generator(UniversePtr universe, std::string_view name);
    /// coeff times the product of `factors` taken in the listed order.
    static Multivector monomial(UniversePtr universe, std::span<const size_t> factors, Complex coeff = 1.0);

    const UniversePtr &universe() const {
        return universe_;
    }
    const std::map<Monomial, Complex> &terms() const {
        return terms_;
    }
    Complex coefficient(Monomial monomial) const;
    bool is_zero() const {
        return terms_.empty();
    }
    Parity parity() const;
    /// Zero has every parity.
    bool has_parity(Parity parity) const;

    /// Keeps only the terms with the given parity (even or odd).
    Multivector part(Parity parity) const;

    Multivector operator-() const;
    Multivector &operator+=(const Multivector &other);
    Multivector &operator-=(const Multivector &other);
    Multivector &operator*=(Complex factor);

    friend Multivector operator+(Multivector a, const Multivector &b) {
        return a += b;
    }
    friend Multivector operator-(Multivector a, const Multivector &b) {
        return a -= b;
    }
    friend Multivector operator*(Multivector a, Complex factor) {
        return a *= factor;
    }
    friend Multivector operator*(Complex factor, Multivector a) {
        return a *= factor;
    }
    friend Multivector operator/(Multivector a, Complex divisor) {
        return a *= (1.0 / divisor);
    }

   private:
    void prune();

    UniversePtr universe_;
    std::map<Monomial, Complex> terms_;
};

/// Sign (+1/-1) picked up when the odd generators in `right` are moved into
/// canonical position after those in `left`.
int reorder_sign(Monomial left_odd, Monomial right_odd);

/// Throws UniverseError unless both elements live over the same generators.
void require_same_universe(const Multivector &a, const Multivector &b);

Multivector mul(const Multivector &a, const Multivector &b);
inline Multivector operator*(const Multivector &a, const Multivector &b) {
    return mul(a, b);
}

Complex body(const Multivector &a);
Multivector soul(const Multivector &a);

/// Antilinear involution of the even-nilpotent sector. Fixes each eta.
Multivector star(const Multivector &a);

/// Graded antilinear involution: xi -> xi-bar, xi-bar -> -xi, eta -> eta,
/// (ab)^# = a^# b^#. Satisfies (q^#)^# = (-1)^{|q|} q.
Multivector sharp(const Multivector &a);

/// Left derivative with respect to one generator.
Multivector derive(const Multivector &a, size_t generator);
Multivector derive(const Multivector &a, std::string_view generator);

/// Iterated Berezin integral; gens[0] is integrated first (innermost).
Multivector berezin(const Multivector &a, std::span<const size_t> gens);

/// Terminating series exp(a) for a bodyless element.
Multivector exp_nilpotent(const Multivector &a);

/// Inverse via a finite Neumann series on the soul.
Multivector invert(const Multivector &a);

/// Principal power a^alpha = body^alpha (1 + soul/body)^alpha, expanded as a
/// terminating binomial series. Requires a nonzero body.
Multivector power(const Multivector &a, double alpha);

/// Largest coefficient-wise difference. Universes must match.
double max_abs_difference(const Multivector &a, const Multivector &b);

/// Human-readable form such as "0.5 + (0,1)*e1*x1".
std::string to_string(const Multivector &a);

}  // namespace qnil
