// Copyright 2026 The UnionStab Authors
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

// Quantified property checks shared by the unit tests and the acceptance
// runner. Each returns the number of samples and the number of violations;
// the oracles here avoid the code paths they check where possible.

#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "unionstab/pauli.hpp"
#include "unionstab/sim.hpp"
#include "unionstab/stabilizer.hpp"
#include "unionstab/union_code.hpp"
#include "unionstab/z4.hpp"

namespace unionstab::checks {

struct Tally {
    std::uint64_t samples = 0;
    std::uint64_t violations = 0;
    void record(bool ok) {
        ++samples;
        if (!ok) ++violations;
    }
};

inline PauliVector random_pauli(std::size_t n, std::mt19937_64 &rng) {
    PauliVector p(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto r = rng();
        if (r & 1) p.x().set(i);
        if (r & 2) p.z().set(i);
    }
    return p;
}

inline PauliVector pauli_from_index(std::size_t n, std::uint64_t idx) {
    PauliVector p(n);
    for (std::size_t i = 0; i < n; ++i) {
        if ((idx >> (2 * i)) & 1) p.x().set(i);
        if ((idx >> (2 * i + 1)) & 1) p.z().set(i);
    }
    return p;
}

namespace detail {

using Dense = std::vector<Amplitude>;

inline Dense matmul(const Dense &a, const Dense &b, std::size_t dim) {
    Dense c(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t k = 0; k < dim; ++k) {
            Amplitude aik = a[i * dim + k];
            if (aik == Amplitude(0)) continue;
            for (std::size_t j = 0; j < dim; ++j) c[i * dim + j] += aik * b[k * dim + j];
        }
    }
    return c;
}

inline bool dense_commute(const PauliVector &p, const PauliVector &q) {
    std::size_t dim = std::size_t{1} << p.n();
    Dense a = pauli_matrix(p), b = pauli_matrix(q);
    Dense ab = matmul(a, b, dim), ba = matmul(b, a, dim);
    for (std::size_t i = 0; i < ab.size(); ++i) {
        if (std::abs(ab[i] - ba[i]) > 1e-12) return false;
    }
    return true;
}

}  // namespace detail

/// Symplectic product against commutation of the dense matrices. n = 2 is
/// exhaustive (256 pairs); otherwise `samples` random pairs.
inline Tally commutation(std::size_t n, std::uint64_t samples, std::uint64_t seed) {
    Tally t;
    auto check = [&](const PauliVector &p, const PauliVector &q) {
        t.record(symplectic_ip(p, q) == !detail::dense_commute(p, q));
    };
    if (samples == 0) {
        std::uint64_t total = std::uint64_t{1} << (2 * n);
        for (std::uint64_t a = 0; a < total; ++a) {
            for (std::uint64_t b = 0; b < total; ++b) check(pauli_from_index(n, a), pauli_from_index(n, b));
        }
        return t;
    }
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) check(random_pauli(n, rng), random_pauli(n, rng));
    return t;
}

/// wgt(p) = (wgt(x) + wgt(z) + wgt(x+z)) / 2, the left side counted symbol
/// by symbol from the printed operator.
inline Tally weight_identity(std::uint64_t samples, std::uint64_t seed) {
    Tally t;
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::size_t n = 1 + rng() % 150;
        PauliVector p = random_pauli(n, rng);
        std::size_t direct = 0;
        for (char c : p.to_string()) direct += c != 'I';
        auto w = unionstab::weight_identity(p);
        t.record(w.lhs == direct && w.rhs == direct);
    }
    return t;
}

inline Z4Vector random_z4(std::size_t n, std::mt19937_64 &rng) {
    Z4Vector v(n);
    for (auto &x : v) x = static_cast<std::uint8_t>(rng() % 4);
    return v;
}

/// Lee weight of u - v against Hamming distance of the images.
inline Tally gray_isometry(std::uint64_t samples, std::uint64_t seed) {
    Tally t;
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::size_t n = 1 + rng() % 64;
        Z4Vector u = random_z4(n, rng), v = random_z4(n, rng);
        Z4Vector diff(n);
        std::size_t lee = 0;
        for (std::size_t i = 0; i < n; ++i) {
            diff[i] = static_cast<std::uint8_t>((u[i] + 4 - v[i]) % 4);
            lee += diff[i] == 2 ? 2 : (diff[i] != 0);
        }
        t.record((gray_image(u) ^ gray_image(v)).weight() == lee && gray_preimage(gray_image(u)) == u);
    }
    return t;
}

/// phi(u + v) = phi(u) + phi(v) + phi(2 (u mod 2)(v mod 2)).
inline Tally gray_addition(std::uint64_t samples, std::uint64_t seed) {
    Tally t;
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::size_t n = 1 + rng() % 64;
        Z4Vector u = random_z4(n, rng), v = random_z4(n, rng);
        Z4Vector sum(n), carry(n);
        for (std::size_t i = 0; i < n; ++i) {
            sum[i] = static_cast<std::uint8_t>((u[i] + v[i]) % 4);
            carry[i] = static_cast<std::uint8_t>(2 * ((u[i] & 1) & (v[i] & 1)));
        }
        t.record(gray_image(sum) == (gray_image(u) ^ gray_image(v) ^ gray_image(carry)));
    }
    return t;
}

struct MacWilliamsCheck {
    bool involution = false;     // transform twice returns the input
    bool matches_dual = false;   // transform equals the enumerated dual
    std::size_t kerdock_words = 0;
    std::size_t dual_words = 0;
};

/// Quaternary Kerdock code of degree m' and its dual, both enumerated.
inline MacWilliamsCheck macwilliams(int m_prime) {
    MacWilliamsCheck out;
    GaloisRing ring = gr4_build(m_prime);
    Z4Code k = kerdock_z4(ring);
    Z4Code kd = z4_dual(k);
    auto w = lee_swe(k);
    auto wd = lee_swe(kd);
    out.kerdock_words = w.total();
    out.dual_words = wd.total();
    auto t = swe_macwilliams(w, w.total());
    out.matches_dual = t == wd;
    out.involution = swe_macwilliams(t, t.total()) == w;
    return out;
}

/// The syndrome classes of every Pauli on n qubits: 2^(n-k) of them, each of
/// size 2^(n+k).
inline Tally partition(const StabilizerCode &code) {
    Tally t;
    std::size_t n = code.n;
    std::uint64_t total = std::uint64_t{1} << (2 * n);
    std::vector<std::uint64_t> count(std::size_t{1} << code.stab.size());
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        BitVector s = symplectic_syndrome(code.stab, pauli_from_index(n, idx));
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < s.size(); ++i) key |= std::uint64_t{s.get(i)} << i;
        ++count[key];
    }
    std::uint64_t expect = std::uint64_t{1} << (n + code.k);
    for (auto c : count) t.record(c == expect);
    t.record(count.size() * expect == total);
    return t;
}

/// Stabilizer codes of length <= 5 for the partition check.
inline std::vector<StabilizerCode> small_codes() {
    auto gens = [](std::initializer_list<const char *> ss) {
        std::vector<PauliVector> out;
        for (auto s : ss) out.push_back(PauliVector::parse(s));
        return stabilizer_from_generators(out);
    };
    return {
        gens({"Z"}),
        gens({"XX", "ZZ"}),
        gens({"XXX", "ZZI"}),
        gens({"XXXX", "ZZZZ"}),
        gens({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}),
        gens({"XIZZI", "XXZIZ", "YIYZZ", "YZZYI", "XZIZX"}),
        gens({"ZZIII", "IZZII", "IIZZI", "IIIZZ"}),
    };
}

}  // namespace unionstab::checks
