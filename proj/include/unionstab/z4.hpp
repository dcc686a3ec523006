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

// Z4-linear codes: Galois rings GR(4, m'), the quaternary Kerdock and
// Goethals constructions, the Gray map, symmetrized Lee weight enumerators
// with MacWilliams duality, and kernel/coset extraction of Gray images.
//
// Gray map convention: 0->00, 1->01, 2->11, 3->10. For a quaternary vector
// v = a + 2b (a, b binary) of length n4 the image is (b | a + b): first
// bits at positions 0..n4-1, second bits at n4..2*n4-1.

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "unionstab/error.hpp"
#include "unionstab/gf2.hpp"

namespace unionstab {

using Z4Vector = std::vector<std::uint8_t>;

inline std::uint8_t lee_weight(std::uint8_t x) { return x == 2 ? 2 : (x == 0 ? 0 : 1); }

inline std::size_t lee_weight(const Z4Vector &v) {
    std::size_t w = 0;
    for (auto x : v) w += lee_weight(x);
    return w;
}

inline Z4Vector z4_add(const Z4Vector &a, const Z4Vector &b) {
    Z4Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint8_t>((a[i] + b[i]) & 3);
    return out;
}

inline void z4_add_scaled(Z4Vector &acc, const Z4Vector &v, std::uint8_t scale) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = static_cast<std::uint8_t>((acc[i] + scale * v[i]) & 3);
}

inline BitVector z4_mod2(const Z4Vector &v) {
    BitVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] & 1) out.set(i);
    }
    return out;
}

/// 2·w as a quaternary vector.
inline Z4Vector z4_double(const BitVector &w) {
    Z4Vector out(w.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w.get(i)) out[i] = 2;
    }
    return out;
}

inline Z4Vector z4_lift(const BitVector &w) {
    Z4Vector out(w.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w.get(i)) out[i] = 1;
    }
    return out;
}

inline std::string z4_to_string(const Z4Vector &v) {
    std::string s(v.size(), '0');
    for (std::size_t i = 0; i < v.size(); ++i) s[i] = static_cast<char>('0' + v[i]);
    return s;
}

inline Z4Vector z4_from_string(std::string_view s) {
    Z4Vector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '3') throw Error(ErrorKind::Parse, "quaternary digit '" + std::string(1, s[i]) + "'");
        v[i] = static_cast<std::uint8_t>(s[i] - '0');
    }
    return v;
}

struct Z4VectorHash {
    std::size_t operator()(const Z4Vector &v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

// ---------------------------------------------------------------------------
// Galois ring GR(4, m').

/// Coefficients of x^0..x^m of the primitive binary polynomial used for
/// degree m (odd, 3..9).
inline const std::vector<int> &primitive_binary_polynomial(int m) {
    static const std::map<int, std::vector<int>> kPrimitive = {
        {3, {1, 1, 0, 1}},                    // x^3 + x + 1
        {5, {1, 0, 1, 0, 0, 1}},              // x^5 + x^2 + 1
        {7, {1, 1, 0, 0, 0, 0, 0, 1}},        // x^7 + x + 1
        {9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},  // x^9 + x^4 + 1
    };
    auto it = kPrimitive.find(m);
    if (it == kPrimitive.end()) {
        throw Error(ErrorKind::BadDegree, "m' = " + std::to_string(m) + " must be odd with 3 <= m' <= 9");
    }
    return it->second;
}

class GaloisRing {
   public:
    using Element = std::vector<std::uint8_t>;  // coefficients of 1, xi, ..., xi^(m-1)

    /// Builds the ring from a primitive binary polynomial via the Graeffe
    /// Hensel lift, and verifies the Teichmuller set.
    static GaloisRing build(int m_prime) {
        GaloisRing ring;
        ring.m_ = m_prime;
        ring.binary_modulus_ = primitive_binary_polynomial(m_prime);
        ring.modulus_ = hensel_lift(ring.binary_modulus_);
        ring.build_teichmuller();
        return ring;
    }

    int degree() const { return m_; }
    /// Monic lifted modulus, coefficients of x^0..x^m.
    const std::vector<std::uint8_t> &modulus() const { return modulus_; }
    const std::vector<int> &binary_modulus() const { return binary_modulus_; }
    /// {0, 1, xi, ..., xi^(2^m - 2)}
    const std::vector<Element> &teichmuller() const { return teichmuller_; }

    Element zero() const { return Element(static_cast<std::size_t>(m_), 0); }
    Element one() const {
        Element e = zero();
        e[0] = 1;
        return e;
    }
    Element xi() const {
        Element e = zero();
        e[1 % m_] = 1;
        return e;
    }

    Element mul(const Element &a, const Element &b) const {
        std::vector<int> prod(static_cast<std::size_t>(2 * m_ - 1), 0);
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < m_; ++j) prod[static_cast<std::size_t>(i + j)] += a[i] * b[j];
        }
        for (int d = 2 * m_ - 2; d >= m_; --d) {
            int c = prod[static_cast<std::size_t>(d)] & 3;
            if (c == 0) continue;
            prod[static_cast<std::size_t>(d)] = 0;
            for (int i = 0; i < m_; ++i) prod[static_cast<std::size_t>(d - m_ + i)] -= c * modulus_[i];
        }
        Element out(static_cast<std::size_t>(m_));
        for (int i = 0; i < m_; ++i) out[i] = static_cast<std::uint8_t>(((prod[i] % 4) + 4) % 4);
        return out;
    }

    Element pow(Element base, std::uint64_t e) const {
        Element result = one();
        while (e) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    static std::uint64_t residue_key(const Element &e) {
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < e.size(); ++i) key |= static_cast<std::uint64_t>(e[i] & 1) << i;
        return key;
    }

   private:
    static std::vector<std::uint8_t> hensel_lift(const std::vector<int> &f) {
        // h(x^2) = -(e(x)^2 - o(x)^2) mod 4 with f = e + o split by parity of degree.
        std::size_t m = f.size() - 1;
        std::vector<int> even(f.size(), 0), odd(f.size(), 0);
        for (std::size_t i = 0; i < f.size(); ++i) (i % 2 == 0 ? even : odd)[i] = f[i];
        std::vector<int> sq(2 * m + 1, 0);
        for (std::size_t i = 0; i < f.size(); ++i) {
            for (std::size_t j = 0; j < f.size(); ++j) sq[i + j] += even[i] * even[j] - odd[i] * odd[j];
        }
        int sign = ((sq[2 * m] % 4) + 4) % 4 == 1 ? 1 : -1;
        std::vector<std::uint8_t> h(m + 1);
        for (std::size_t i = 0; i <= m; ++i) h[i] = static_cast<std::uint8_t>(((sign * sq[2 * i]) % 4 + 4) % 4);
        return h;
    }

    void build_teichmuller() {
        std::uint64_t order = (std::uint64_t{1} << m_) - 1;
        teichmuller_.clear();
        teichmuller_.push_back(zero());
        Element power = one();
        std::unordered_set<std::uint64_t> seen_residues{0};
        for (std::uint64_t j = 0; j < order; ++j) {
            if (!seen_residues.insert(residue_key(power)).second) {
                throw Error(ErrorKind::BadDegree, "lifted modulus is not primitive: repeated residue at power " +
                                                      std::to_string(j));
            }
            teichmuller_.push_back(power);
            power = mul(power, xi());
        }
        if (power != one()) throw Error(ErrorKind::BadDegree, "xi^(2^m - 1) != 1 for the lifted modulus");
        // Teichmuller elements are the fixed points of x -> x^(2^m).
        if (pow(xi(), std::uint64_t{1} << m_) != xi()) throw Error(ErrorKind::BadDegree, "xi is not Teichmuller");
    }

    int m_ = 0;
    std::vector<int> binary_modulus_;
    std::vector<std::uint8_t> modulus_;
    std::vector<Element> teichmuller_;
};

inline GaloisRing gr4_build(int m_prime) { return GaloisRing::build(m_prime); }

// ---------------------------------------------------------------------------
// Z4 modules.

/// A Z4-linear code: k1 generators of order 4 followed by k2 of order 2
/// (entries in {0, 2}). |code| = 4^k1 * 2^k2.
struct Z4Code {
    std::size_t length = 0;
    std::vector<Z4Vector> generator;
    std::size_t k1 = 0;
    std::size_t k2 = 0;

    std::size_t log2_size() const { return 2 * k1 + k2; }
    std::uint8_t order(std::size_t row) const { return row < k1 ? 4 : 2; }
};

/// Unit-pivot elimination of a Z4 row set. Gives the code type, a canonical
/// coset representative for any vector, and membership.
class Z4Module {
   public:
    Z4Module(std::size_t length, std::vector<Z4Vector> rows) : length_(length) {
        std::vector<Z4Vector> work = std::move(rows);
        for (auto &r : work) {
            if (r.size() != length_) throw Error(ErrorKind::LengthMismatch, "quaternary row length mismatch");
            for (auto &x : r) x &= 3;
        }
        std::size_t next = 0;
        for (std::size_t col = 0; col < length_ && next < work.size(); ++col) {
            std::size_t p = next;
            while (p < work.size() && !(work[p][col] & 1)) ++p;
            if (p == work.size()) continue;
            std::swap(work[next], work[p]);
            std::uint8_t inv = work[next][col];  // 1 and 3 are self-inverse mod 4
            if (inv != 1) {
                for (auto &x : work[next]) x = static_cast<std::uint8_t>((x * inv) & 3);
            }
            for (std::size_t r = 0; r < work.size(); ++r) {
                if (r == next || work[r][col] == 0) continue;
                std::uint8_t c = work[r][col];
                z4_add_scaled(work[r], work[next], static_cast<std::uint8_t>((4 - c) & 3));
            }
            pivots_.push_back(col);
            ++next;
        }
        pivot_rows_.assign(work.begin(), work.begin() + static_cast<std::ptrdiff_t>(next));

        BitMatrix residue(0, length_);
        residue.set_cols(length_);
        for (const auto &r : pivot_rows_) residue.push_back(z4_mod2(r));
        BitMatrix halves(0, length_);
        halves.set_cols(length_);
        for (std::size_t r = next; r < work.size(); ++r) {
            BitVector h(length_);
            for (std::size_t i = 0; i < length_; ++i) {
                if (work[r][i] == 2) h.set(i);
            }
            halves.push_back(std::move(h));
        }
        even_space_ = rref(halves);
        residue_ = residue;
        torsion_ = BitMatrix::stack(residue, halves);
        BitMatrix torsion_basis = independent_rows(torsion_);
        code_.length = length_;
        code_.k1 = pivot_rows_.size();
        code_.generator = pivot_rows_;
        for (std::size_t r = code_.k1; r < torsion_basis.rows(); ++r) code_.generator.push_back(z4_double(torsion_basis[r]));
        code_.k2 = code_.generator.size() - code_.k1;
    }

    explicit Z4Module(const Z4Code &code) : Z4Module(code.length, code.generator) {}

    const Z4Code &standard_form() const { return code_; }
    std::size_t length() const { return length_; }
    /// Binary code generated by the codewords mod 2.
    const BitMatrix &residue() const { return residue_; }
    /// Binary code {w : 2w in the module}.
    const BitMatrix &torsion() const { return torsion_; }

    Z4Vector reduce(Z4Vector v) const {
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            std::uint8_t c = v[pivots_[i]];
            if (c != 0) z4_add_scaled(v, pivot_rows_[i], static_cast<std::uint8_t>((4 - c) & 3));
        }
        BitVector low = z4_mod2(v);
        BitVector high(length_);
        for (std::size_t i = 0; i < length_; ++i) {
            if (v[i] >= 2) high.set(i);
        }
        high = reduce_modulo(even_space_, high);
        for (std::size_t i = 0; i < length_; ++i) {
            v[i] = static_cast<std::uint8_t>((low.get(i) ? 1 : 0) + (high.get(i) ? 2 : 0));
        }
        return v;
    }

    bool contains(const Z4Vector &v) const {
        Z4Vector r = reduce(v);
        for (auto x : r) {
            if (x) return false;
        }
        return true;
    }

   private:
    std::size_t length_;
    std::vector<std::size_t> pivots_;
    std::vector<Z4Vector> pivot_rows_;
    RrefResult even_space_;
    BitMatrix residue_;
    BitMatrix torsion_;
    Z4Code code_;
};

inline Z4Code z4_standard_form(std::size_t length, const std::vector<Z4Vector> &rows) {
    return Z4Module(length, rows).standard_form();
}

inline bool z4_contains(const Z4Code &code, const Z4Vector &v) { return Z4Module(code).contains(v); }

/// Dual under sum(x_i y_i) mod 4. Residue and torsion swap roles through
/// binary duality; order-4 generators are lifted by a GF(2) solve.
inline Z4Code z4_dual(const Z4Code &code) {
    Z4Module mod(code);
    const Z4Code &sf = mod.standard_form();
    std::size_t n = sf.length;
    BitMatrix torsion_perp = kernel_basis(mod.torsion());
    BitMatrix residue_perp = kernel_basis(mod.residue());
    BitMatrix order4_bar(0, n);
    order4_bar.set_cols(n);
    for (std::size_t i = 0; i < sf.k1; ++i) order4_bar.push_back(z4_mod2(sf.generator[i]));

    std::vector<Z4Vector> rows;
    for (std::size_t r = 0; r < torsion_perp.rows(); ++r) {
        Z4Vector u = z4_lift(torsion_perp[r]);
        BitVector rhs(sf.k1);
        for (std::size_t i = 0; i < sf.k1; ++i) {
            unsigned dot = 0;
            for (std::size_t j = 0; j < n; ++j) dot += sf.generator[i][j] * u[j];
            if ((dot & 3) == 2) rhs.set(i);
        }
        auto z = solve(order4_bar, rhs);
        if (!z) throw Error(ErrorKind::ConstructionMismatch, "dual lift system inconsistent");
        for (std::size_t j = 0; j < n; ++j) {
            if (z->get(j)) u[j] = static_cast<std::uint8_t>((u[j] + 2) & 3);
        }
        rows.push_back(std::move(u));
    }
    for (std::size_t r = 0; r < residue_perp.rows(); ++r) rows.push_back(z4_double(residue_perp[r]));
    return z4_standard_form(n, rows);
}

// ---------------------------------------------------------------------------
// Constructions.

/// Quaternary Kerdock code: all-ones row plus the m' Z4 coordinate rows of
/// the Teichmuller set. Coordinate 0 is the element 0 (the "infinity" /
/// parity position).
inline Z4Code kerdock_z4(const GaloisRing &ring) {
    const auto &t = ring.teichmuller();
    std::size_t n = t.size();
    std::vector<Z4Vector> rows;
    rows.push_back(Z4Vector(n, 1));
    for (int i = 0; i < ring.degree(); ++i) {
        Z4Vector row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = t[j][static_cast<std::size_t>(i)];
        rows.push_back(std::move(row));
    }
    return z4_standard_form(n, rows);
}

/// Parity checks of the quaternary Goethals code: all-ones, the Teichmuller
/// coordinate rows, and doubled binary coordinates of the cubes.
inline Z4Code goethals_dual_z4(const GaloisRing &ring) {
    const auto &t = ring.teichmuller();
    std::size_t n = t.size();
    Z4Code kerdock = kerdock_z4(ring);
    std::vector<Z4Vector> rows = kerdock.generator;
    for (int i = 0; i < ring.degree(); ++i) {
        Z4Vector row(n);
        for (std::size_t j = 0; j < n; ++j) {
            auto cube = ring.mul(ring.mul(t[j], t[j]), t[j]);
            row[j] = static_cast<std::uint8_t>((cube[static_cast<std::size_t>(i)] & 1) * 2);
        }
        rows.push_back(std::move(row));
    }
    return z4_standard_form(n, rows);
}

inline Z4Code goethals_z4(const GaloisRing &ring) {
    if (ring.degree() < 5) throw Error(ErrorKind::BadDegree, "quaternary Goethals code needs m' >= 5");
    return z4_dual(goethals_dual_z4(ring));
}

// ---------------------------------------------------------------------------
// Gray map.

inline BitVector gray_image(const Z4Vector &v) {
    std::size_t n = v.size();
    BitVector out(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        bool a = v[i] & 1;
        bool b = (v[i] >> 1) & 1;
        if (b) out.set(i);
        if (a != b) out.set(n + i);
    }
    return out;
}

inline Z4Vector gray_preimage(const BitVector &bits) {
    std::size_t n = bits.size() / 2;
    Z4Vector v(n);
    for (std::size_t i = 0; i < n; ++i) {
        bool b = bits.get(i);
        bool a = b != bits.get(n + i);
        v[i] = static_cast<std::uint8_t>((a ? 1 : 0) + (b ? 2 : 0));
    }
    return v;
}

/// Gray position p -> Reed-Muller evaluation point. The half selector is
/// the most significant variable; the remaining m' variables are the binary
/// coordinates of the Teichmuller element (coefficient of xi^0 first).
inline std::vector<std::size_t> gray_to_rm_permutation(const GaloisRing &ring) {
    const auto &t = ring.teichmuller();
    std::size_t n4 = t.size();
    std::size_t m = static_cast<std::size_t>(ring.degree());
    std::vector<std::size_t> perm(2 * n4);
    for (std::size_t p = 0; p < 2 * n4; ++p) {
        std::size_t half = p / n4;
        const auto &e = t[p % n4];
        std::size_t point = half << m;
        for (std::size_t i = 0; i < m; ++i) {
            if (e[i] & 1) point |= std::size_t{1} << (m - 1 - i);
        }
        perm[p] = point;
    }
    return perm;
}

inline BitVector permute_bits(const BitVector &v, const std::vector<std::size_t> &perm) {
    BitVector out(v.size());
    for (std::size_t p = 0; p < v.size(); ++p) {
        if (v.get(p)) out.set(perm[p]);
    }
    return out;
}

inline BitMatrix permute_columns(const BitMatrix &m, const std::vector<std::size_t> &perm) {
    BitMatrix out(0, m.cols());
    out.set_cols(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(permute_bits(m[r], perm));
    return out;
}

// ---------------------------------------------------------------------------
// Symmetrized Lee weight enumerators.

/// Coefficients keyed by (#{+-1 entries}, #{2 entries}); zeros implicit.
struct SymmetrizedWeightEnumerator {
    std::size_t n4 = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> coefficients;

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto &[k, c] : coefficients) t += c;
        return t;
    }
    /// Minimum Lee weight over nonzero words, or 0 if there are none.
    std::size_t min_nonzero_lee_weight() const {
        std::size_t best = 0;
        for (const auto &[k, c] : coefficients) {
            std::size_t w = k.first + 2 * k.second;
            if (c == 0 || w == 0) continue;
            if (best == 0 || w < best) best = w;
        }
        return best;
    }
    /// Lee weight distribution.
    std::map<std::size_t, std::uint64_t> lee_distribution() const {
        std::map<std::size_t, std::uint64_t> out;
        for (const auto &[k, c] : coefficients) {
            if (c) out[k.first + 2 * k.second] += c;
        }
        return out;
    }
    friend bool operator==(const SymmetrizedWeightEnumerator &a, const SymmetrizedWeightEnumerator &b) {
        return a.n4 == b.n4 && a.coefficients == b.coefficients;
    }
};

/// Full enumeration of the code. Message space is split across `workers`
/// threads by the values of the top generators; merging is order-free.
inline SymmetrizedWeightEnumerator lee_swe(const Z4Code &code, std::uint64_t cap = kDefaultEnumerationCap,
                                           unsigned workers = 1) {
    if (code.log2_size() >= 63 || (std::uint64_t{1} << code.log2_size()) > cap) {
        throw Error(ErrorKind::CapExceeded, "code of size 2^" + std::to_string(code.log2_size()) + " exceeds cap");
    }
    std::size_t n = code.length;
    std::size_t g = code.generator.size();
    std::vector<std::uint8_t> orders(g);
    for (std::size_t i = 0; i < g; ++i) orders[i] = code.order(i);

    // The last `split` generators are fixed per shard.
    std::size_t split = 0;
    std::uint64_t shards = 1;
    while (split < g && shards < workers) shards *= orders[g - 1 - split++];
    std::size_t inner = g - split;

    auto run_shard = [&](std::uint64_t shard, std::vector<std::uint64_t> &counts) {
        Z4Vector word(n, 0);
        std::uint64_t s = shard;
        for (std::size_t i = 0; i < split; ++i) {
            std::size_t row = g - 1 - i;
            std::uint8_t digit = static_cast<std::uint8_t>(s % orders[row]);
            s /= orders[row];
            z4_add_scaled(word, code.generator[row], digit);
        }
        std::vector<std::uint8_t> digits(inner, 0);
        while (true) {
            std::size_t ones = 0, twos = 0;
            for (auto x : word) {
                ones += (x & 1);
                twos += (x == 2);
            }
            ++counts[ones * (n + 1) + twos];
            std::size_t d = 0;
            // Adding a generator `order` times returns the word to its start,
            // so wrapping digits need no correction.
            while (d < inner) {
                z4_add_scaled(word, code.generator[d], 1);
                if (++digits[d] < orders[d]) break;
                digits[d] = 0;
                ++d;
            }
            if (d == inner) break;
        }
    };

    std::vector<std::vector<std::uint64_t>> partial(std::max<unsigned>(1, workers),
                                                    std::vector<std::uint64_t>((n + 1) * (n + 1), 0));
    if (workers <= 1 || shards == 1) {
        for (std::uint64_t s = 0; s < shards; ++s) run_shard(s, partial[0]);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                for (std::uint64_t s = w; s < shards; s += workers) run_shard(s, partial[w]);
            });
        }
        for (auto &t : threads) t.join();
    }
    SymmetrizedWeightEnumerator swe;
    swe.n4 = n;
    for (const auto &counts : partial) {
        for (std::size_t a = 0; a <= n; ++a) {
            for (std::size_t b = 0; a + b <= n; ++b) {
                if (auto c = counts[a * (n + 1) + b]) swe.coefficients[{a, b}] += c;
            }
        }
    }
    return swe;
}

namespace detail {

using Poly2 = std::vector<std::vector<__int128>>;  // [deg W1][deg W2], W0 implicit

inline Poly2 poly_mul(const Poly2 &p, const Poly2 &q, std::size_t n) {
    Poly2 out(n + 1, std::vector<__int128>(n + 1, 0));
    for (std::size_t a = 0; a < p.size(); ++a) {
        for (std::size_t b = 0; a + b < p.size(); ++b) {
            if (p[a][b] == 0) continue;
            for (std::size_t c = 0; a + c <= n && c < q.size(); ++c) {
                for (std::size_t d = 0; a + b + c + d <= n && d < q.size(); ++d) {
                    if (q[c][d] != 0) out[a + c][b + d] += p[a][b] * q[c][d];
                }
            }
        }
    }
    return out;
}

inline std::vector<Poly2> linear_form_powers(std::size_t n, __int128 c1, __int128 c2) {
    // Powers of (W0 + c1 W1 + c2 W2).
    std::vector<Poly2> powers;
    Poly2 base(n + 1, std::vector<__int128>(n + 1, 0));
    base[0][0] = 1;
    powers.push_back(base);
    Poly2 lin(n + 1, std::vector<__int128>(n + 1, 0));
    lin[0][0] = 1;
    if (n > 0) {
        lin[1][0] = c1;
        lin[0][1] = c2;
    }
    for (std::size_t k = 1; k <= n; ++k) powers.push_back(poly_mul(powers.back(), lin, n));
    return powers;
}

}  // namespace detail

/// Z4 MacWilliams transform: (W0, W1, W2) -> (W0+2W1+W2, W0-W2, W0-2W1+W2),
/// divided by code_size. Exact 128-bit arithmetic.
inline SymmetrizedWeightEnumerator swe_macwilliams(const SymmetrizedWeightEnumerator &swe, std::uint64_t code_size) {
    std::size_t n = swe.n4;
    if (swe.total() != code_size) {
        throw Error(ErrorKind::NonIntegralTransform, "enumerator coefficients do not sum to the code size");
    }
    // Every expanded term is bounded by code_size * 4^n.
    if (2 * n + static_cast<std::size_t>(std::bit_width(code_size)) > 125) {
        throw Error(ErrorKind::CapExceeded, "quaternary length too large for exact transform");
    }
    auto p = detail::linear_form_powers(n, 2, 1);    // W0 + 2W1 + W2
    auto q = detail::linear_form_powers(n, 0, -1);   // W0 - W2
    auto r = detail::linear_form_powers(n, -2, 1);   // W0 - 2W1 + W2
    detail::Poly2 acc(n + 1, std::vector<__int128>(n + 1, 0));
    for (const auto &[key, coeff] : swe.coefficients) {
        auto [ones, twos] = key;
        std::size_t zeros = n - ones - twos;
        auto term = detail::poly_mul(detail::poly_mul(p[zeros], q[ones], n), r[twos], n);
        for (std::size_t a = 0; a <= n; ++a) {
            for (std::size_t b = 0; a + b <= n; ++b) acc[a][b] += term[a][b] * static_cast<__int128>(coeff);
        }
    }
    SymmetrizedWeightEnumerator out;
    out.n4 = n;
    for (std::size_t a = 0; a <= n; ++a) {
        for (std::size_t b = 0; a + b <= n; ++b) {
            __int128 v = acc[a][b];
            if (v == 0) continue;
            if (v < 0 || v % static_cast<__int128>(code_size) != 0) {
                throw Error(ErrorKind::NonIntegralTransform, "transformed coefficient is negative or non-integral");
            }
            out.coefficients[{a, b}] = static_cast<std::uint64_t>(v / static_cast<__int128>(code_size));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Kernel of the Gray image and coset representatives.

/// Z4 submodule whose Gray image is the kernel of the Gray image of `code`:
/// x in code with (x mod 2) AND (g mod 2) in {w : 2w in code} for every
/// order-4 generator g.
inline Z4Code kernel_preimage(const Z4Code &code) {
    Z4Module mod(code);
    const Z4Code &sf = mod.standard_form();
    std::size_t n = sf.length;
    std::size_t k1 = sf.k1;
    BitMatrix torsion_check = kernel_basis(mod.torsion());  // parity checks of B
    std::vector<BitVector> gbar;
    for (std::size_t i = 0; i < k1; ++i) gbar.push_back(z4_mod2(sf.generator[i]));

    // Unknowns a_1..a_k1: for each j, sum_i a_i H_B (gbar_i AND gbar_j) = 0.
    BitMatrix system(0, k1);
    system.set_cols(k1);
    for (std::size_t j = 0; j < k1; ++j) {
        std::vector<BitVector> cols;
        for (std::size_t i = 0; i < k1; ++i) cols.push_back(torsion_check.apply(gbar[i] & gbar[j]));
        for (std::size_t c = 0; c < torsion_check.rows(); ++c) {
            BitVector row(k1);
            for (std::size_t i = 0; i < k1; ++i) {
                if (cols[i].get(c)) row.set(i);
            }
            if (!row.is_zero()) system.push_back(std::move(row));
        }
    }
    BitMatrix solutions = system.empty() ? BitMatrix::identity(k1) : kernel_basis(system);
    std::vector<Z4Vector> rows;
    for (std::size_t s = 0; s < solutions.rows(); ++s) {
        Z4Vector x(n, 0);
        for (std::size_t i = 0; i < k1; ++i) {
            if (solutions[s].get(i)) z4_add_scaled(x, sf.generator[i], 1);
        }
        rows.push_back(std::move(x));
    }
    BitMatrix torsion = independent_rows(mod.torsion());
    for (std::size_t r = 0; r < torsion.rows(); ++r) rows.push_back(z4_double(torsion[r]));
    return z4_standard_form(n, rows);
}

/// Generator of the (linear) kernel of the Gray image of `code`.
inline BitMatrix phi_kernel(const Z4Code &code) {
    Z4Code k = kernel_preimage(code);
    BitMatrix out(0, 2 * code.length);
    out.set_cols(2 * code.length);
    for (std::size_t i = 0; i < k.generator.size(); ++i) {
        out.push_back(gray_image(k.generator[i]));
        if (i < k.k1) {
            Z4Vector doubled(k.generator[i].size());
            for (std::size_t j = 0; j < doubled.size(); ++j) doubled[j] = static_cast<std::uint8_t>((2 * k.generator[i][j]) & 3);
            out.push_back(gray_image(doubled));
        }
    }
    BitMatrix basis = independent_rows(out);
    if (basis.rows() != k.log2_size()) {
        throw Error(ErrorKind::ConstructionMismatch, "Gray image of the kernel preimage is not linear");
    }
    return basis;
}

inline constexpr std::uint64_t kQuotientCap = std::uint64_t{1} << 20;

/// One representative per coset of `sub` in `code`, zero first, each the
/// canonical reduction modulo `sub`, ordered by first appearance when the
/// standard-form generators of `code` are adjoined in order.
inline std::vector<Z4Vector> z4_quotient_reps(const Z4Code &code, const Z4Code &sub,
                                              std::uint64_t cap = kQuotientCap) {
    if (code.length != sub.length) throw Error(ErrorKind::LengthMismatch, "quotient of codes of different length");
    Z4Module outer(code);
    for (const auto &g : sub.generator) {
        if (!outer.contains(g)) throw Error(ErrorKind::NotASubcode, "generator " + z4_to_string(g) + " not in code");
    }
    Z4Module inner(sub);
    std::size_t outer_log = outer.standard_form().log2_size();
    std::size_t inner_log = inner.standard_form().log2_size();
    std::size_t quotient_log = outer_log - inner_log;
    if (quotient_log >= 63 || (std::uint64_t{1} << quotient_log) > cap) {
        throw Error(ErrorKind::QuotientTooLarge, "quotient of size 2^" + std::to_string(quotient_log));
    }
    std::vector<Z4Vector> reps{Z4Vector(code.length, 0)};
    std::unordered_set<Z4Vector, Z4VectorHash> seen{reps.front()};
    const Z4Code &sf = outer.standard_form();
    for (std::size_t gi = 0; gi < sf.generator.size(); ++gi) {
        std::size_t existing = reps.size();
        for (std::size_t r = 0; r < existing; ++r) {
            Z4Vector v = reps[r];
            for (std::uint8_t t = 1; t < sf.order(gi); ++t) {
                z4_add_scaled(v, sf.generator[gi], 1);
                Z4Vector red = inner.reduce(v);
                if (seen.insert(red).second) reps.push_back(std::move(red));
            }
        }
    }
    if (reps.size() != (std::uint64_t{1} << quotient_log)) {
        throw Error(ErrorKind::ConstructionMismatch, "quotient enumeration produced " + std::to_string(reps.size()) +
                                                         " representatives");
    }
    return reps;
}

// ---------------------------------------------------------------------------
// Text formats.

inline Z4Code read_z4_code(std::istream &in) {
    std::string line;
    if (!next_content_line(in, line)) throw Error(ErrorKind::Parse, "missing Z4 code header");
    std::istringstream header(line);
    std::size_t n4 = 0, k1 = 0, k2 = 0;
    if (!(header >> n4 >> k1 >> k2)) throw Error(ErrorKind::Parse, "bad Z4 code header '" + line + "'");
    std::vector<Z4Vector> rows;
    for (std::size_t r = 0; r < k1 + k2; ++r) {
        if (!next_content_line(in, line)) throw Error(ErrorKind::Parse, "Z4 generator truncated");
        if (line.size() != n4) throw Error(ErrorKind::Parse, "Z4 row '" + line + "' has wrong length");
        rows.push_back(z4_from_string(line));
    }
    Z4Code code = z4_standard_form(n4, rows);
    if (code.k1 != k1 || code.k2 != k2) throw Error(ErrorKind::Parse, "Z4 header type does not match generator rows");
    return code;
}

inline void write_z4_code(std::ostream &out, const Z4Code &code) {
    out << code.length << ' ' << code.k1 << ' ' << code.k2 << '\n';
    for (const auto &row : code.generator) out << z4_to_string(row) << '\n';
}

/// CSV "lee_weight,count"; with `symmetrized` the rows are "ones,twos,count".
inline void write_swe_csv(std::ostream &out, const SymmetrizedWeightEnumerator &swe, bool symmetrized = false) {
    if (symmetrized) {
        out << "ones,twos,count\n";
        for (const auto &[k, c] : swe.coefficients) out << k.first << ',' << k.second << ',' << c << '\n';
        return;
    }
    out << "lee_weight,count\n";
    for (const auto &[w, c] : swe.lee_distribution()) out << w << ',' << c << '\n';
}

}  // namespace unionstab
