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

#include "qnil/eta_qubit.hpp"

#include <algorithm>
#include <cmath>

#include "qnil/errors.hpp"

namespace qnil::eta {

namespace {

void check_dense(int n) {
    if (n > kMaxDenseQubits) {
        fail(ErrorKind::kShape,
             "dense operations support at most " + std::to_string(kMaxDenseQubits) + " qubits, got " +
                 std::to_string(n));
    }
}

// Amplitude index of the basis ket whose set qubits form `mask`.
size_t amplitude_index(Monomial mask, int n) {
    size_t index = 0;
    for (int q = 0; q < n; q++) {
        if ((mask >> q) & 1) {
            index |= size_t{1} << (n - 1 - q);
        }
    }
    return index;
}

struct Split {
    std::vector<int> left;   // generator indices
    std::vector<int> right;  // generator indices
};

Split make_split(int n, std::span<const int> left) {
    Split s;
    std::vector<bool> in_left(static_cast<size_t>(n), false);
    for (int q : left) {
        if (q < 1 || q > n) {
            fail(ErrorKind::kIndex, "qubit index " + std::to_string(q) + " outside 1.." + std::to_string(n));
        }
        if (in_left[static_cast<size_t>(q - 1)]) {
            fail(ErrorKind::kSplit, "qubit " + std::to_string(q) + " listed twice in the split");
        }
        in_left[static_cast<size_t>(q - 1)] = true;
    }
    for (int q = 0; q < n; q++) {
        (in_left[static_cast<size_t>(q)] ? s.left : s.right).push_back(q);
    }
    if (s.left.empty() || s.right.empty()) {
        fail(ErrorKind::kSplit, "bipartition must put at least one qubit on each side");
    }
    return s;
}

// Spreads the bits of `sub` onto the generator positions in `gens`.
Monomial scatter(size_t sub, const std::vector<int> &gens) {
    Monomial m = 0;
    for (size_t k = 0; k < gens.size(); k++) {
        if ((sub >> k) & 1) {
            m |= Monomial{1} << gens[k];
        }
    }
    return m;
}

// Coefficient matrix M[a][b] = F_{A u B}, rows over subsets of the left block.
std::vector<std::vector<Complex>> reshape(const EtaState &f, const Split &s) {
    check_dense(f.n());
    size_t rows = size_t{1} << s.left.size();
    size_t cols = size_t{1} << s.right.size();
    std::vector<std::vector<Complex>> m(rows, std::vector<Complex>(cols));
    for (size_t a = 0; a < rows; a++) {
        for (size_t b = 0; b < cols; b++) {
            m[a][b] = f.coefficient(scatter(a, s.left) | scatter(b, s.right));
        }
    }
    return m;
}

struct RankOne {
    bool ok = false;
    std::vector<Complex> u;  // left factor
    std::vector<Complex> v;  // right factor
};

// Best rank-1 approximation through the largest entry, accepted when every
// residual is within tolerance.
RankOne rank_one(const std::vector<std::vector<Complex>> &m, double tolerance) {
    RankOne r;
    size_t rows = m.size();
    size_t cols = m[0].size();
    size_t p = 0;
    size_t q = 0;
    double best = -1;
    for (size_t a = 0; a < rows; a++) {
        for (size_t b = 0; b < cols; b++) {
            if (std::abs(m[a][b]) > best) {
                best = std::abs(m[a][b]);
                p = a;
                q = b;
            }
        }
    }
    r.u.assign(rows, 0.0);
    r.v.assign(cols, 0.0);
    if (best <= tolerance) {
        // F = 0 = 1 * 0.
        r.ok = true;
        r.u[0] = 1.0;
        return r;
    }
    Complex pivot = m[p][q];
    for (size_t a = 0; a < rows; a++) {
        r.u[a] = m[a][q];
    }
    for (size_t b = 0; b < cols; b++) {
        r.v[b] = m[p][b] / pivot;
    }
    double scale = std::max(1.0, best);
    for (size_t a = 0; a < rows; a++) {
        for (size_t b = 0; b < cols; b++) {
            if (std::abs(m[a][b] - r.u[a] * r.v[b]) > tolerance * scale) {
                return r;
            }
        }
    }
    r.ok = true;
    return r;
}

double norm_squared(const EtaState &f) {
    double s = 0;
    for (const auto &[m, c] : f.function().terms()) {
        s += std::norm(c);
    }
    return s;
}

}  // namespace

UniversePtr eta_universe(int n, double zero_tolerance) {
    if (n < 1 || static_cast<size_t>(n) > Universe::kMaxGenerators) {
        fail(ErrorKind::kShape, "qubit count must be in 1..64, got " + std::to_string(n));
    }
    std::vector<Generator> gens;
    for (int k = 1; k <= n; k++) {
        gens.push_back({"e" + std::to_string(k), GeneratorParity::kEven, std::nullopt});
    }
    return Universe::create(std::move(gens), zero_tolerance);
}

EtaState EtaState::from_amplitudes(std::span<const Complex> amplitudes, int n, double zero_tolerance) {
    if (n < 1) {
        fail(ErrorKind::kShape, "qubit count must be positive");
    }
    check_dense(n);
    if (amplitudes.size() != (size_t{1} << n)) {
        fail(ErrorKind::kShape,
             "expected " + std::to_string(size_t{1} << n) + " amplitudes for " + std::to_string(n) +
                 " qubits, got " + std::to_string(amplitudes.size()));
    }
    std::map<Monomial, Complex> terms;
    for (Monomial mask = 0; mask < (Monomial{1} << n); mask++) {
        Complex a = amplitudes[amplitude_index(mask, n)];
        if (a != 0.0) {
            terms.emplace(mask, a);
        }
    }
    return EtaState(n, Multivector(eta_universe(n, zero_tolerance), std::move(terms)));
}

EtaState EtaState::from_function(Multivector f) {
    const Universe &u = *f.universe();
    if (u.size() == 0) {
        fail(ErrorKind::kShape, "an eta-function needs at least one variable");
    }
    if (u.odd_mask() != 0) {
        fail(ErrorKind::kSector, "eta-functions are built from even nilpotent generators only");
    }
    int n = static_cast<int>(u.size());
    return EtaState(n, std::move(f));
}

std::vector<Complex> EtaState::to_amplitudes() const {
    check_dense(n_);
    std::vector<Complex> out(size_t{1} << n_, 0.0);
    for (const auto &[m, c] : f_.terms()) {
        out[amplitude_index(m, n_)] = c;
    }
    return out;
}

Complex scalar_product(const EtaState &f, const EtaState &g) {
    if (f.n() != g.n()) {
        fail(ErrorKind::kShape, "scalar product of states with different qubit counts");
    }
    require_same_universe(f.function(), g.function());
    Complex sum = 0;
    for (const auto &[m, c] : f.function().terms()) {
        sum += std::conj(c) * g.coefficient(m);
    }
    return sum;
}

WronskianResult wronskian(const EtaState &f, int i, int j) {
    for (int q : {i, j}) {
        if (q < 1 || q > f.n()) {
            fail(ErrorKind::kIndex, "qubit index " + std::to_string(q) + " outside 1.." + std::to_string(f.n()));
        }
    }
    if (i == j) {
        fail(ErrorKind::kIndex, "Wronskian needs two distinct qubits");
    }
    const Multivector &F = f.function();
    auto gi = static_cast<size_t>(i - 1);
    auto gj = static_cast<size_t>(j - 1);
    Multivector di = derive(F, gi);
    Multivector dj = derive(F, gj);
    Multivector dij = derive(di, gj);
    return {mul(F, dij) - mul(di, dj), i, j};
}

double two_tangle(const EtaState &f) {
    if (f.n() != 2) {
        fail(ErrorKind::kShape, "the 2-tangle is defined for two qubits, got " + std::to_string(f.n()));
    }
    return 4.0 * std::norm(body(wronskian(f, 1, 2).value));
}

bool is_factorable(const EtaState &f, std::span<const int> left, double tolerance) {
    Split s = make_split(f.n(), left);
    if (f.n() == 2) {
        double scale = std::max(1.0, norm_squared(f));
        return std::abs(body(wronskian(f, 1, 2).value)) <= tolerance * scale;
    }
    return rank_one(reshape(f, s), tolerance).ok;
}

std::optional<std::pair<EtaState, EtaState>> factor(const EtaState &f, std::span<const int> left, double tolerance) {
    Split s = make_split(f.n(), left);
    RankOne r = rank_one(reshape(f, s), tolerance);
    if (!r.ok) {
        return std::nullopt;
    }
    double norm_u = 0;
    for (auto c : r.u) {
        norm_u += std::norm(c);
    }
    norm_u = std::sqrt(norm_u);
    Complex phase = 1.0;
    for (auto c : r.u) {
        if (std::abs(c) > tolerance) {
            phase = c / std::abs(c);
            break;
        }
    }
    Complex g_scale = 1.0 / (norm_u * phase);
    Complex h_scale = norm_u * phase;

    std::map<Monomial, Complex> g_terms;
    std::map<Monomial, Complex> h_terms;
    for (size_t a = 0; a < r.u.size(); a++) {
        g_terms[scatter(a, s.left)] = r.u[a] * g_scale;
    }
    for (size_t b = 0; b < r.v.size(); b++) {
        h_terms[scatter(b, s.right)] = r.v[b] * h_scale;
    }
    const auto &u = f.function().universe();
    return std::make_pair(EtaState::from_function(Multivector(u, std::move(g_terms))),
                          EtaState::from_function(Multivector(u, std::move(h_terms))));
}

}  // namespace qnil::eta
