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

// Binary linear codes, Reed-Muller codes, and non-linear codes stored as a
// linear base plus coset translations.
//
// Reed-Muller coordinates: position p is the evaluation point whose binary
// expansion (x_1 most significant) is p. For the codes of length 2^m built
// from F_{2^(m-1)} the top variable selects the half and the remaining bits
// are field coordinates, coefficient of alpha^i at bit m-2-i.

#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "unionstab/error.hpp"
#include "unionstab/gf2.hpp"
#include "unionstab/z4.hpp"

namespace unionstab {

/// How a reported distance was obtained.
enum class Provenance { Analytic, Brute, CosetBrute, Enumerator, PaperBound, Unverified };

inline std::string_view provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Analytic: return "analytic";
        case Provenance::Brute: return "brute";
        case Provenance::CosetBrute: return "coset-brute";
        case Provenance::Enumerator: return "enumerator";
        case Provenance::PaperBound: return "paper-bound";
        case Provenance::Unverified: return "unverified";
    }
    return "unverified";
}

enum class DistanceStrategy { Brute, CosetBrute, Enumerator, Analytic };

inline DistanceStrategy parse_distance_strategy(std::string_view s) {
    if (s == "brute") return DistanceStrategy::Brute;
    if (s == "coset-brute") return DistanceStrategy::CosetBrute;
    if (s == "enumerator") return DistanceStrategy::Enumerator;
    if (s == "analytic") return DistanceStrategy::Analytic;
    throw Error(ErrorKind::BadParams, "unknown distance strategy '" + std::string(s) + "'");
}

inline Provenance provenance_of(DistanceStrategy s) {
    switch (s) {
        case DistanceStrategy::Brute: return Provenance::Brute;
        case DistanceStrategy::CosetBrute: return Provenance::CosetBrute;
        case DistanceStrategy::Enumerator: return Provenance::Enumerator;
        case DistanceStrategy::Analytic: return Provenance::Analytic;
    }
    return Provenance::Unverified;
}

// ---------------------------------------------------------------------------
// Linear codes.

struct LinearCode {
    std::size_t n = 0;
    BitMatrix generator;     // independent rows
    BitMatrix parity_check;  // basis of the dual
    std::optional<std::size_t> known_distance;
    Provenance distance_provenance = Provenance::Unverified;

    static LinearCode from_generator(const BitMatrix &g) {
        LinearCode c;
        c.n = g.cols();
        c.generator = independent_rows(g);
        c.generator.set_cols(c.n);
        c.parity_check = kernel_basis(c.generator);
        return c;
    }
    static LinearCode zero(std::size_t n) {
        BitMatrix g(0, n);
        g.set_cols(n);
        return from_generator(g);
    }

    std::size_t k() const { return generator.rows(); }
    bool contains(const BitVector &v) const { return syndrome(parity_check, v).is_zero(); }
};

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// RM(r, m): evaluations of all monomials of degree <= r, degree first and
/// then lexicographic in the variable indices.
inline LinearCode reed_muller(int r, int m) {
    if (m < 0 || m > 12 || r < 0 || r > m) {
        throw Error(ErrorKind::BadParams, "RM(" + std::to_string(r) + "," + std::to_string(m) + ") out of range");
    }
    std::size_t n = std::size_t{1} << m;
    BitMatrix g(0, n);
    g.set_cols(n);
    for (int deg = 0; deg <= r; ++deg) {
        // variable subsets of size deg, lexicographic
        std::vector<int> vars(static_cast<std::size_t>(deg));
        for (int i = 0; i < deg; ++i) vars[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::size_t mask = 0;
            for (int v : vars) mask |= std::size_t{1} << (m - 1 - v);
            BitVector row(n);
            for (std::size_t p = 0; p < n; ++p) {
                if ((p & mask) == mask) row.set(p);
            }
            g.push_back(std::move(row));
            int i = deg - 1;
            while (i >= 0 && vars[static_cast<std::size_t>(i)] == m - deg + i) --i;
            if (i < 0) break;
            ++vars[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < deg; ++j) vars[static_cast<std::size_t>(j)] = vars[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    LinearCode c = LinearCode::from_generator(g);
    c.known_distance = std::size_t{1} << (m - r);
    c.distance_provenance = Provenance::Analytic;
    return c;
}

// ---------------------------------------------------------------------------
// Coset codes.

/// Union of cosets base + t. Translations are canonical (lexicographically
/// least in their coset) and the first one is zero.
struct CosetCode {
    LinearCode base;
    std::vector<BitVector> translations;
    std::optional<std::size_t> claimed_distance;
    std::string name;
    // Set when the code is a Gray image: the quaternary code and the map
    // from Gray positions to the coordinates used here.
    std::optional<Z4Code> z4_source;
    std::vector<std::size_t> z4_permutation;

    std::size_t length() const { return base.n; }
    /// log2 |code| when the translation count is a power of two.
    std::optional<std::size_t> log2_size() const {
        if (!std::has_single_bit(translations.size())) return std::nullopt;
        return base.k() + static_cast<std::size_t>(std::countr_zero(translations.size()));
    }
    bool contains(const BitVector &v) const;
};

inline BitVector canonical_translation(const RrefResult &base_rref, const BitVector &t) {
    return reduce_modulo(base_rref, t);
}

/// Builds a CosetCode, canonicalizing translations and checking they lie in
/// distinct cosets.
inline CosetCode make_coset_code(LinearCode base, const std::vector<BitVector> &translations, std::string name = {}) {
    CosetCode c;
    c.name = std::move(name);
    auto red = rref(base.generator);
    std::unordered_set<BitVector, BitVectorHash> seen;
    for (const auto &t : translations) {
        if (t.size() != base.n) throw Error(ErrorKind::LengthMismatch, "translation length differs from base length");
        BitVector canon = canonical_translation(red, t);
        if (!seen.insert(canon).second) {
            throw Error(ErrorKind::DuplicateCoset, "two translations lie in the same coset: " + canon.to_string());
        }
        c.translations.push_back(std::move(canon));
    }
    if (c.translations.empty() || !c.translations.front().is_zero()) {
        throw Error(ErrorKind::BadParams, "first translation must lie in the base code");
    }
    c.base = std::move(base);
    return c;
}

inline CosetCode as_coset_code(const LinearCode &code) {
    return make_coset_code(code, {BitVector(code.n)});
}

inline bool CosetCode::contains(const BitVector &v) const {
    auto red = rref(base.generator);
    BitVector canon = reduce_modulo(red, v);
    return std::find(translations.begin(), translations.end(), canon) != translations.end();
}

/// Basis of `outer` modulo `inner` (inner inside outer), rows reduced.
inline BitMatrix quotient_basis(const BitMatrix &outer, const BitMatrix &inner) {
    auto red = rref(inner);
    BitMatrix reduced(0, outer.cols());
    reduced.set_cols(outer.cols());
    for (std::size_t r = 0; r < outer.rows(); ++r) {
        BitVector v = reduce_modulo(red, outer[r]);
        if (!v.is_zero()) reduced.push_back(std::move(v));
    }
    return independent_rows(reduced);
}

/// Re-expresses c over new_base. Coarsening merges translations that share
/// a new_base coset (each class must be complete); refining expands each
/// translation by the coset representatives of base / new_base.
inline CosetCode rebase(const CosetCode &c, const LinearCode &new_base) {
    if (new_base.n != c.base.n) throw Error(ErrorKind::LengthMismatch, "rebase onto a code of different length");
    bool coarsen = row_space_contains(new_base.generator, c.base.generator);
    bool refine = row_space_contains(c.base.generator, new_base.generator);
    CosetCode out;
    if (coarsen && refine) {
        out = make_coset_code(new_base, c.translations, c.name);
    } else if (coarsen) {
        std::size_t extra = new_base.k() - c.base.k();
        if (extra >= 63) throw Error(ErrorKind::CapExceeded, "class size 2^" + std::to_string(extra));
        std::uint64_t class_size = std::uint64_t{1} << extra;
        auto red = rref(new_base.generator);
        std::unordered_map<BitVector, std::uint64_t, BitVectorHash> classes;
        std::vector<BitVector> reps;
        for (const auto &t : c.translations) {
            BitVector canon = reduce_modulo(red, t);
            if (classes[canon]++ == 0) reps.push_back(canon);
        }
        for (const auto &rep : reps) {
            if (classes[rep] != class_size) {
                throw Error(ErrorKind::NotAUnionOfCosets, "coset " + rep.to_string() + " holds " +
                                                              std::to_string(classes[rep]) + " of " +
                                                              std::to_string(class_size) + " sub-cosets");
            }
        }
        out = make_coset_code(new_base, reps, c.name);
    } else if (refine) {
        BitMatrix ext = quotient_basis(c.base.generator, new_base.generator);
        std::vector<BitVector> reps;
        for (const auto &t : c.translations) {
            for_each_word(ext, kDefaultEnumerationCap, [&](const BitVector &w) {
                BitVector v = t;
                v ^= w;
                reps.push_back(std::move(v));
            });
        }
        out = make_coset_code(new_base, reps, c.name);
    } else {
        throw Error(ErrorKind::NotNested, "neither base contains the other");
    }
    out.claimed_distance = c.claimed_distance;
    out.z4_source = c.z4_source;
    out.z4_permutation = c.z4_permutation;
    return out;
}

// ---------------------------------------------------------------------------
// Gray-image constructions.

/// Gray image of a Z4 code as a union of cosets of its kernel, in
/// Reed-Muller coordinates, then rebased onto RM(m-3, m).
inline CosetCode gray_coset_code(const Z4Code &code, const GaloisRing &ring, std::string name,
                                 std::uint64_t quotient_cap = kQuotientCap) {
    int m = ring.degree() + 1;
    auto perm = gray_to_rm_permutation(ring);
    BitMatrix kernel = permute_columns(phi_kernel(code), perm);
    LinearCode rm = reed_muller(m - 3, m);
    if (!row_space_contains(kernel, rm.generator)) {
        throw Error(ErrorKind::ConstructionMismatch,
                    name + ": Gray-image kernel has dimension " + std::to_string(kernel.rows()) +
                        " and does not contain RM(" + std::to_string(m - 3) + "," + std::to_string(m) + ")");
    }
    Z4Code sub = kernel_preimage(code);
    std::vector<BitVector> reps;
    for (const auto &r : z4_quotient_reps(code, sub, quotient_cap)) reps.push_back(permute_bits(gray_image(r), perm));
    CosetCode over_kernel = make_coset_code(LinearCode::from_generator(kernel), reps, name);
    over_kernel.z4_source = code;
    over_kernel.z4_permutation = perm;
    return rebase(over_kernel, rm);
}

inline CosetCode nordstrom_robinson() {
    GaloisRing ring = gr4_build(3);
    CosetCode c = gray_coset_code(kerdock_z4(ring), ring, "nordstrom-robinson");
    c.claimed_distance = 6;
    return c;
}

inline CosetCode preparata_like(int m) {
    if (m != 4 && m != 6) throw Error(ErrorKind::BadParams, "preparata_like needs m in {4, 6}");
    GaloisRing ring = gr4_build(m - 1);
    CosetCode c = gray_coset_code(z4_dual(kerdock_z4(ring)), ring, "preparata-like(" + std::to_string(m) + ")");
    c.claimed_distance = 6;
    return c;
}

inline CosetCode goethals_binary(int m) {
    if (m == 4) {
        CosetCode c = as_coset_code(reed_muller(1, 4));
        c.name = "goethals(4)";
        c.claimed_distance = 8;
        return c;
    }
    if (m != 6) throw Error(ErrorKind::BadParams, "goethals_binary needs m in {4, 6}");
    GaloisRing ring = gr4_build(m - 1);
    CosetCode c = gray_coset_code(goethals_z4(ring), ring, "goethals(" + std::to_string(m) + ")");
    c.claimed_distance = 8;
    return c;
}

// ---------------------------------------------------------------------------
// Classical constructions over F_{2^(m-1)}: words are pairs of subsets (X|Y)
// of the field, with |X|, |Y| even and sum X = sum Y = s. The Preparata
// code adds sum X^3 + s^3 = sum Y^3, the Goethals code additionally
// sum X^5 + s^5 = sum Y^5.

class BinaryField {
   public:
    explicit BinaryField(int m) : m_(m) {
        const auto &poly = primitive_binary_polynomial(m);
        for (int i = 0; i < m; ++i) {
            if (poly[static_cast<std::size_t>(i)]) low_ |= std::uint32_t{1} << i;
        }
    }
    int degree() const { return m_; }
    std::uint32_t size() const { return std::uint32_t{1} << m_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t r = 0;
        while (b) {
            if (b & 1) r ^= a;
            b >>= 1;
            a <<= 1;
            if (a >> m_) a = (a ^ (std::uint32_t{1} << m_)) ^ low_;
        }
        return r;
    }
    std::uint32_t pow(std::uint32_t a, unsigned e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    /// Field element at the low m bits of an evaluation point.
    std::uint32_t from_point(std::size_t point) const {
        std::uint32_t e = 0;
        for (int i = 0; i < m_; ++i) {
            if ((point >> (m_ - 1 - i)) & 1) e |= std::uint32_t{1} << i;
        }
        return e;
    }

   private:
    int m_;
    std::uint32_t low_ = 0;
};

/// exponents: the power sums constrained beyond sum X = sum Y.
inline CosetCode classical_power_sum_code(int m, const std::vector<unsigned> &exponents, std::string name) {
    int mp = m - 1;
    BinaryField f(mp);
    std::size_t n = std::size_t{1} << m;
    std::size_t half = n / 2;
    // Linear functionals on the indicator vector, and their right-hand sides
    // as functions of s.
    BitMatrix h(0, n);
    h.set_cols(n);
    std::vector<std::pair<unsigned, int>> rhs;  // (exponent or 0 for parity, bit)
    for (std::size_t side = 0; side < 2; ++side) {
        BitVector row(n);
        for (std::size_t p = 0; p < half; ++p) row.set(side * half + p);
        h.push_back(std::move(row));
        rhs.emplace_back(0, 0);
    }
    auto add_sum_rows = [&](unsigned e, bool left, bool right) {
        for (int bit = 0; bit < mp; ++bit) {
            BitVector row(n);
            for (std::size_t p = 0; p < half; ++p) {
                if ((f.pow(f.from_point(p), e) >> bit) & 1) {
                    if (left) row.set(p);
                    if (right) row.set(half + p);
                }
            }
            h.push_back(std::move(row));
            rhs.emplace_back(e, bit);
        }
    };
    add_sum_rows(1, true, false);
    add_sum_rows(1, false, true);
    for (unsigned e : exponents) add_sum_rows(e, true, true);

    LinearCode rm = reed_muller(m - 3, m);
    BitMatrix l0 = kernel_basis(h);
    if (!row_space_contains(l0, rm.generator)) {
        throw Error(ErrorKind::ConstructionMismatch, name + ": linear part does not contain RM(m-3,m)");
    }
    BitMatrix ext = quotient_basis(l0, rm.generator);
    std::vector<BitVector> translations;
    for (std::uint32_t s = 0; s < f.size(); ++s) {
        BitVector y(h.rows());
        for (std::size_t r = 0; r < rhs.size(); ++r) {
            auto [e, bit] = rhs[r];
            if (e != 0 && ((f.pow(s, e) >> bit) & 1)) y.set(r);
        }
        auto t = solve(h, y);
        if (!t) throw Error(ErrorKind::ConstructionMismatch, name + ": no word with s = " + std::to_string(s));
        for_each_word(ext, kDefaultEnumerationCap, [&](const BitVector &w) {
            BitVector v = *t;
            v ^= w;
            translations.push_back(std::move(v));
        });
    }
    return make_coset_code(rm, translations, std::move(name));
}

inline CosetCode preparata_classical(int m) {
    if (m != 4 && m != 6) throw Error(ErrorKind::BadParams, "preparata_classical needs m in {4, 6}");
    CosetCode c = classical_power_sum_code(m, {3}, "preparata(" + std::to_string(m) + ")");
    c.claimed_distance = 6;
    return c;
}

inline CosetCode goethals_classical(int m) {
    if (m == 4) return goethals_binary(4);
    if (m != 6) throw Error(ErrorKind::BadParams, "goethals_classical needs m in {4, 6}");
    CosetCode c = classical_power_sum_code(m, {3, 5}, "goethals(" + std::to_string(m) + ")");
    c.claimed_distance = 8;
    return c;
}

// ---------------------------------------------------------------------------
// Distances.

inline std::size_t min_weight_nonzero(const BitMatrix &g, std::uint64_t cap = kDefaultEnumerationCap) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for_each_word(g, cap, [&](const BitVector &w) {
        std::size_t wt = w.weight();
        if (wt > 0 && wt < best) best = wt;
    });
    return best;
}

/// Minimum weight of the coset v + span(g).
inline std::size_t coset_min_weight(const BitMatrix &g, const BitVector &v, std::uint64_t cap = kDefaultEnumerationCap) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    BitVector shifted = v;
    for_each_word(g, cap, [&](const BitVector &w) {
        std::size_t wt = 0;
        for (std::size_t i = 0; i < w.num_words(); ++i) wt += static_cast<std::size_t>(std::popcount(w.word(i) ^ v.word(i)));
        best = std::min(best, wt);
    });
    return best;
}

inline std::size_t min_distance(const LinearCode &c, DistanceStrategy strategy,
                                std::uint64_t cap = kDefaultEnumerationCap) {
    switch (strategy) {
        case DistanceStrategy::Analytic:
            if (c.known_distance && c.distance_provenance == Provenance::Analytic) return *c.known_distance;
            throw Error(ErrorKind::StrategyInfeasible, "no analytic distance for this code");
        case DistanceStrategy::Brute:
        case DistanceStrategy::CosetBrute:
            if (c.k() == 0) throw Error(ErrorKind::StrategyInfeasible, "zero code has no nonzero word");
            return min_weight_nonzero(c.generator, cap);
        case DistanceStrategy::Enumerator:
            throw Error(ErrorKind::StrategyInfeasible, "enumerator strategy needs a Z4 or Reed-Muller coset structure");
    }
    return 0;
}

/// Point-set certificate for unions of RM(m-3,m) cosets inside RM(m-2,m):
/// the quotient RM(m-2,m)/RM(m-3,m) is read off by pairing with the
/// quadratic monomials, and cosets holding words of weight 4 or 6 are
/// found by listing all such words (even point sets with zero sum).
class QuadraticQuotient {
   public:
    explicit QuadraticQuotient(int m) : m_(m) {
        if (m < 3 || m > 6) throw Error(ErrorKind::StrategyInfeasible, "quotient certificate needs 3 <= m <= 6");
        std::size_t n = std::size_t{1} << m;
        point_key_.resize(n);
        for (std::size_t p = 0; p < n; ++p) {
            std::uint32_t key = 0;
            int bit = 0;
            for (int a = 0; a < m; ++a) {
                for (int b = a + 1; b < m; ++b, ++bit) {
                    if (((p >> (m - 1 - a)) & 1) && ((p >> (m - 1 - b)) & 1)) key |= std::uint32_t{1} << bit;
                }
            }
            point_key_[p] = key;
        }
        std::size_t keys = std::size_t{1} << (m * (m - 1) / 2);
        bad4_.assign(keys, 0);
        bad6_.assign(keys, 0);
        // weight 4: {a,b,c,a^b^c}
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                for (std::size_t c = b + 1; c < n; ++c) {
                    std::size_t d = a ^ b ^ c;
                    if (d <= c) continue;
                    bad4_[point_key_[a] ^ point_key_[b] ^ point_key_[c] ^ point_key_[d]] = 1;
                }
            }
        }
        // weight 6: {a,b,c,d,e,a^b^c^d^e}
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                for (std::size_t c = b + 1; c < n; ++c) {
                    std::uint32_t kabc = point_key_[a] ^ point_key_[b] ^ point_key_[c];
                    for (std::size_t d = c + 1; d < n; ++d) {
                        for (std::size_t e = d + 1; e < n; ++e) {
                            std::size_t f = a ^ b ^ c ^ d ^ e;
                            if (f <= e) continue;
                            bad6_[kabc ^ point_key_[d] ^ point_key_[e] ^ point_key_[f]] = 1;
                        }
                    }
                }
            }
        }
        bad4_[0] = 0;
        bad6_[0] = 0;
    }

    std::uint32_t key(const BitVector &v) const {
        std::uint32_t k = 0;
        for (std::size_t p = 0; p < v.size(); ++p) {
            if (v.get(p)) k ^= point_key_[p];
        }
        return k;
    }
    /// Minimum weight of the coset with this key (8 for the base itself).
    std::size_t coset_weight(std::uint32_t key) const {
        if (key == 0) return 8;
        if (bad4_[key]) return 4;
        if (bad6_[key]) return 6;
        return 8;
    }
    std::size_t bad4_count() const { return static_cast<std::size_t>(std::count(bad4_.begin(), bad4_.end(), 1)); }
    std::size_t bad6_count() const { return static_cast<std::size_t>(std::count(bad6_.begin(), bad6_.end(), 1)); }

   private:
    int m_;
    std::vector<std::uint32_t> point_key_;
    std::vector<std::uint8_t> bad4_, bad6_;
};

namespace detail {

inline bool is_rm_union(const CosetCode &c, int &m) {
    std::size_t n = c.length();
    if (!std::has_single_bit(n)) return false;
    m = std::countr_zero(n);
    if (m < 3) return false;
    LinearCode rm = reed_muller(m - 3, m);
    if (!row_spaces_equal(rm.generator, c.base.generator)) return false;
    LinearCode outer = reed_muller(m - 2, m);
    for (const auto &t : c.translations) {
        if (!outer.contains(t)) return false;
    }
    return true;
}

inline std::size_t quotient_distance(const CosetCode &c, int m) {
    QuadraticQuotient q(m);
    std::vector<std::uint32_t> keys;
    std::vector<std::uint8_t> present(std::size_t{1} << (m * (m - 1) / 2), 0);
    for (const auto &t : c.translations) {
        keys.push_back(q.key(t));
        present[keys.back()] = 1;
    }
    std::size_t best = 8;
    // Differences t_i + t_j range over keys[i] ^ keys[j]; scan bad keys
    // against the key set instead of all pairs.
    for (std::uint32_t b = 1; b < present.size() && best > 4; ++b) {
        std::size_t w = q.coset_weight(b);
        if (w >= best) continue;
        for (auto k : keys) {
            if (present[k ^ b]) {
                best = w;
                break;
            }
        }
    }
    return best;
}

inline std::size_t z4_distance(const CosetCode &c, std::uint64_t cap) {
    const Z4Code &code = *c.z4_source;
    std::size_t log_size = code.log2_size();
    if (log_size < 63 && (std::uint64_t{1} << log_size) <= cap) {
        return lee_swe(code, cap).min_nonzero_lee_weight();
    }
    Z4Code dual = z4_dual(code);
    if (dual.log2_size() >= 63 || (std::uint64_t{1} << dual.log2_size()) > cap) {
        throw Error(ErrorKind::StrategyInfeasible, "neither the code nor its dual is small enough to enumerate");
    }
    auto dual_swe = lee_swe(dual, cap, std::thread::hardware_concurrency());
    return swe_macwilliams(dual_swe, std::uint64_t{1} << dual.log2_size()).min_nonzero_lee_weight();
}

}  // namespace detail

/// Exact minimum distance between distinct words.
inline std::size_t min_distance(const CosetCode &c, DistanceStrategy strategy,
                                std::uint64_t cap = kDefaultEnumerationCap, unsigned workers = 1) {
    switch (strategy) {
        case DistanceStrategy::Analytic:
            if (c.translations.size() == 1) return min_distance(c.base, strategy, cap);
            throw Error(ErrorKind::StrategyInfeasible, "analytic distances exist for Reed-Muller codes only");
        case DistanceStrategy::Brute: {
            std::uint64_t k = c.base.k();
            std::uint64_t count = c.translations.size();
            if (k >= 40 || (count << k) > cap) {
                throw Error(ErrorKind::StrategyInfeasible, "code too large for pairwise brute force");
            }
            std::vector<BitVector> words;
            for (const auto &t : c.translations) {
                for_each_word(c.base.generator, cap, [&](const BitVector &w) {
                    BitVector v = t;
                    v ^= w;
                    words.push_back(std::move(v));
                });
            }
            if (words.size() > (std::uint64_t{1} << 16)) {
                throw Error(ErrorKind::StrategyInfeasible, "too many pairs for brute force");
            }
            std::size_t best = std::numeric_limits<std::size_t>::max();
            for (std::size_t i = 0; i < words.size(); ++i) {
                for (std::size_t j = i + 1; j < words.size(); ++j) {
                    BitVector d = words[i];
                    d ^= words[j];
                    best = std::min(best, d.weight());
                }
            }
            if (words.size() < 2) throw Error(ErrorKind::StrategyInfeasible, "code has a single word");
            return best;
        }
        case DistanceStrategy::CosetBrute: {
            if (c.base.k() >= 63 || (std::uint64_t{1} << c.base.k()) > cap) {
                throw Error(ErrorKind::StrategyInfeasible, "base code exceeds the per-coset cap");
            }
            // One coset per distinct difference class.
            auto red = rref(c.base.generator);
            std::unordered_set<BitVector, BitVectorHash> seen;
            std::vector<BitVector> diffs;
            for (std::size_t i = 0; i < c.translations.size(); ++i) {
                for (std::size_t j = i + 1; j < c.translations.size(); ++j) {
                    BitVector d = c.translations[i];
                    d ^= c.translations[j];
                    d = reduce_modulo(red, d);
                    if (seen.insert(d).second) diffs.push_back(std::move(d));
                }
            }
            std::size_t best = c.base.k() > 0 ? min_weight_nonzero(c.base.generator, cap)
                                               : std::numeric_limits<std::size_t>::max();
            std::atomic<std::size_t> next{0};
            std::vector<std::size_t> partial(std::max(1u, workers), best);
            auto run = [&](std::size_t slot) {
                for (std::size_t i = next++; i < diffs.size(); i = next++) {
                    partial[slot] = std::min(partial[slot], coset_min_weight(c.base.generator, diffs[i], cap));
                }
            };
            if (partial.size() == 1) {
                run(0);
            } else {
                std::vector<std::thread> pool;
                for (std::size_t s = 0; s < partial.size(); ++s) pool.emplace_back(run, s);
                for (auto &t : pool) t.join();
            }
            best = *std::min_element(partial.begin(), partial.end());
            if (best == std::numeric_limits<std::size_t>::max()) {
                throw Error(ErrorKind::StrategyInfeasible, "code has a single word");
            }
            return best;
        }
        case DistanceStrategy::Enumerator: {
            int m = 0;
            if (detail::is_rm_union(c, m) && m <= 6) return detail::quotient_distance(c, m);
            if (c.z4_source) return detail::z4_distance(c, cap);
            throw Error(ErrorKind::StrategyInfeasible, "no enumerator available for this code");
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Nesting.

struct NestingCertificate {
    bool nested = true;
    struct Entry {
        std::string label;
        BitVector vector;
        bool member;
    };
    std::vector<Entry> checked;
    std::string note;
};

inline NestingCertificate nesting_check(const CosetCode &inner, const CosetCode &outer) {
    if (inner.length() != outer.length()) throw Error(ErrorKind::LengthMismatch, "nesting check of different lengths");
    NestingCertificate cert;
    auto red = rref(outer.base.generator);
    std::unordered_set<BitVector, BitVectorHash> outer_reps(outer.translations.begin(), outer.translations.end());
    auto member = [&](const BitVector &v) { return outer_reps.count(reduce_modulo(red, v)) > 0; };
    bool base_inside = true;
    for (std::size_t r = 0; r < inner.base.generator.rows(); ++r) {
        const BitVector &g = inner.base.generator[r];
        bool ok = outer.base.contains(g);
        bool in_code = ok || member(g);
        cert.checked.push_back({"generator " + std::to_string(r), g, in_code});
        base_inside = base_inside && ok;
        cert.nested = cert.nested && in_code;
    }
    for (std::size_t i = 0; i < inner.translations.size(); ++i) {
        bool ok = member(inner.translations[i]);
        cert.checked.push_back({"translation " + std::to_string(i), inner.translations[i], ok});
        cert.nested = cert.nested && ok;
    }
    if (cert.nested && !base_inside && outer.translations.size() > 1) {
        // Generators are members but the outer code is not linear: sums of
        // generators with translations need not be. Check every word.
        std::uint64_t k = inner.base.k();
        if (k < 40 && (inner.translations.size() << k) <= kDefaultEnumerationCap) {
            for (const auto &t : inner.translations) {
                for_each_word(inner.base.generator, kDefaultEnumerationCap, [&](const BitVector &w) {
                    BitVector v = t;
                    v ^= w;
                    if (!member(v)) cert.nested = false;
                });
            }
            cert.note = "inner base not inside outer base; every inner word checked";
        } else {
            cert.nested = false;
            cert.note = "inner base not inside outer base and inner code too large to check word by word";
        }
    }
    return cert;
}

inline NestingCertificate nesting_check(const LinearCode &inner, const CosetCode &outer) {
    return nesting_check(as_coset_code(inner), outer);
}
inline NestingCertificate nesting_check(const CosetCode &inner, const LinearCode &outer) {
    return nesting_check(inner, as_coset_code(outer));
}
inline NestingCertificate nesting_check(const LinearCode &inner, const LinearCode &outer) {
    return nesting_check(as_coset_code(inner), as_coset_code(outer));
}

// ---------------------------------------------------------------------------
// Text format: the base generator as a matrix, then "translations T" and T
// bit rows.

inline void write_coset_code(std::ostream &out, const CosetCode &c) {
    if (!c.name.empty()) out << "# " << c.name << '\n';
    write_matrix(out, c.base.generator);
    out << "translations " << c.translations.size() << '\n';
    for (const auto &t : c.translations) out << t.to_string() << '\n';
}

inline CosetCode read_coset_code(std::istream &in) {
    BitMatrix g = read_matrix(in);
    std::string line;
    if (!next_content_line(in, line)) throw Error(ErrorKind::Parse, "missing translations block");
    std::istringstream header(line);
    std::string word;
    std::size_t count = 0;
    if (!(header >> word >> count) || word != "translations") {
        throw Error(ErrorKind::Parse, "expected 'translations T', got '" + line + "'");
    }
    std::vector<BitVector> ts;
    for (std::size_t i = 0; i < count; ++i) {
        if (!next_content_line(in, line)) throw Error(ErrorKind::Parse, "translations truncated");
        if (line.size() != g.cols()) throw Error(ErrorKind::Parse, "translation '" + line + "' has wrong length");
        ts.push_back(BitVector::from_string(line));
    }
    return make_coset_code(LinearCode::from_generator(g), ts);
}

}  // namespace unionstab
