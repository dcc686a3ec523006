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

// Stabilizer codes: generator validation, logical completion, CSS and
// enlargement constructions, normalizer distances.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "unionstab/classical.hpp"
#include "unionstab/error.hpp"
#include "unionstab/gf2.hpp"
#include "unionstab/pauli.hpp"

namespace unionstab {

struct StabilizerCode {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<PauliVector> stab;
    std::vector<PauliVector> logical_z;
    std::vector<PauliVector> logical_x;
    // Set by constructions that know it; purity_and_distance recomputes.
    std::optional<std::size_t> known_purity;
    std::optional<std::size_t> known_distance;
    Provenance distance_provenance = Provenance::Unverified;

    BitMatrix stabilizer_matrix() const { return symplectic_matrix(stab, n); }
    /// Stabilizer rows followed by X-bar then Z-bar rows: a basis of the
    /// normalizer code.
    BitMatrix normalizer_matrix() const {
        BitMatrix m = stabilizer_matrix();
        for (const auto &p : logical_x) m.push_back(p.symplectic());
        for (const auto &p : logical_z) m.push_back(p.symplectic());
        return m;
    }
};

/// Parameters with the strategy behind each number. `translations` is K of a
/// union code (1 for a stabilizer code); the dimension is K * 2^k.
struct CodeParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t translations = 1;
    std::optional<std::size_t> d;
    Provenance d_provenance = Provenance::Unverified;
    bool d_is_bound = false;  // d is a lower bound, not an exact value
    std::optional<std::size_t> purity;
    Provenance purity_provenance = Provenance::Unverified;
    bool impure = false;

    std::string dimension_string() const {
        if (translations == 1) return "2^" + std::to_string(k);
        if (std::has_single_bit(translations)) {
            return "2^" + std::to_string(k + static_cast<std::size_t>(std::countr_zero(translations)));
        }
        if (k == 0) return std::to_string(translations);
        return std::to_string(translations) + "*2^" + std::to_string(k);
    }
    std::string distance_string() const {
        if (!d) return "?";
        return std::to_string(*d) + " [" + std::string(provenance_name(d_provenance)) + "]";
    }
    /// [[n,k,d]] for stabilizer codes, ((n,K,d)) otherwise. Whether d is
    /// exact or a lower bound is in d_is_bound, not in this string.
    std::string to_string() const {
        if (translations == 1) {
            return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + distance_string() + "]]";
        }
        std::string dim = (k == 0 && translations <= 4096) ? std::to_string(translations) : dimension_string();
        return "((" + std::to_string(n) + ", " + dim + ", " + distance_string() + "))";
    }
};

namespace detail {

/// Rows of m with x and z halves exchanged: ip(v, s) = v . swap(s).
inline BitMatrix swap_halves(const BitMatrix &m, std::size_t n) {
    BitMatrix out(0, 2 * n);
    out.set_cols(2 * n);
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(BitVector::concat(m[r].slice(n, n), m[r].slice(0, n)));
    return out;
}

inline bool symplectic_ip_bits(const BitVector &a, const BitVector &b, std::size_t n) {
    bool r = false;
    for (std::size_t i = 0; i < n; ++i) r ^= (a.get(i) & b.get(n + i)) ^ (a.get(n + i) & b.get(i));
    return r;
}

}  // namespace detail

/// Binary basis of the symplectic complement of the row space of m.
inline BitMatrix symplectic_complement(const BitMatrix &m, std::size_t n) {
    if (m.rows() == 0) return BitMatrix::identity(2 * n);
    return kernel_basis(detail::swap_halves(m, n));
}

/// Validates the generators and completes logical X/Z pairs by symplectic
/// Gram-Schmidt over the normalizer, candidates in kernel-basis order.
inline StabilizerCode stabilizer_from_generators(const std::vector<PauliVector> &gens, std::size_t n = 0) {
    if (n == 0) {
        if (gens.empty()) throw Error(ErrorKind::BadParams, "no generators and no qubit count");
        n = gens.front().n();
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].n() != n) throw Error(ErrorKind::LengthMismatch, "generator " + std::to_string(i) + " has wrong length");
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (symplectic_ip(gens[i], gens[j])) {
                throw Error(ErrorKind::NotCommuting,
                            gens[i].to_string() + " and " + gens[j].to_string() + " anticommute");
            }
        }
    }
    BitMatrix s = symplectic_matrix(gens, n);
    if (rank(s) != gens.size()) throw Error(ErrorKind::DependentGenerators, "generators are linearly dependent");

    StabilizerCode code;
    code.n = n;
    code.k = n - gens.size();
    code.stab = gens;

    BitMatrix normalizer = symplectic_complement(s, n);
    std::vector<BitVector> cand;
    BitMatrix span = s;
    span.set_cols(2 * n);
    std::size_t r = rank(span);
    for (std::size_t i = 0; i < normalizer.rows(); ++i) {
        BitMatrix trial = span;
        trial.push_back(normalizer[i]);
        std::size_t tr = rank(trial);
        if (tr > r) {
            span = std::move(trial);
            r = tr;
            cand.push_back(normalizer[i]);
        }
    }
    while (!cand.empty()) {
        BitVector a = cand.front();
        cand.erase(cand.begin());
        auto partner = std::find_if(cand.begin(), cand.end(),
                                    [&](const BitVector &b) { return detail::symplectic_ip_bits(a, b, n); });
        if (partner == cand.end()) throw Error(ErrorKind::ConstructionMismatch, "logical completion found no partner");
        BitVector b = *partner;
        cand.erase(partner);
        for (auto &v : cand) {
            bool with_b = detail::symplectic_ip_bits(v, b, n);
            bool with_a = detail::symplectic_ip_bits(v, a, n);
            if (with_b) v ^= a;
            if (with_a) v ^= b;
        }
        code.logical_x.push_back(PauliVector::from_symplectic(a));
        code.logical_z.push_back(PauliVector::from_symplectic(b));
    }
    return code;
}

// ---------------------------------------------------------------------------
// Normalizer distances.

struct PurityReport {
    std::size_t purity = 0;    // min nonzero weight of the normalizer code
    std::size_t distance = 0;  // min weight outside the stabilizer (purity when k = 0)
    bool pure = true;
};

inline PurityReport purity_and_distance(const StabilizerCode &code, std::uint64_t cap = kDefaultEnumerationCap) {
    std::size_t dim = code.n + code.k;
    if (dim >= 63 || (std::uint64_t{1} << dim) > cap) {
        throw Error(ErrorKind::StrategyInfeasible, "normalizer has 2^" + std::to_string(dim) + " words");
    }
    BitMatrix g = code.normalizer_matrix();
    std::size_t n = code.n;
    std::size_t stab_rows = code.stab.size();
    std::size_t best_all = std::numeric_limits<std::size_t>::max();
    std::size_t best_outside = best_all;
    BitVector word(2 * n);
    std::uint64_t total = std::uint64_t{1} << dim;
    auto weight = [&](const BitVector &w) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < n; ++i) c += (w.get(i) || w.get(n + i)) ? 1 : 0;
        return c;
    };
    for (std::uint64_t i = 1; i < total; ++i) {
        word ^= g[static_cast<std::size_t>(std::countr_zero(i))];
        std::uint64_t message = i ^ (i >> 1);
        std::size_t wt = weight(word);
        best_all = std::min(best_all, wt);
        if ((message >> stab_rows) != 0) best_outside = std::min(best_outside, wt);
    }
    PurityReport rep;
    rep.purity = best_all;
    rep.distance = code.k == 0 ? best_all : best_outside;
    rep.pure = rep.purity >= rep.distance;
    return rep;
}

inline CodeParams stabilizer_params(const StabilizerCode &code, std::uint64_t cap = kDefaultEnumerationCap) {
    CodeParams p;
    p.n = code.n;
    p.k = code.k;
    std::size_t dim = code.n + code.k;
    if (dim < 63 && (std::uint64_t{1} << dim) <= cap) {
        auto rep = purity_and_distance(code, cap);
        p.d = rep.distance;
        p.d_provenance = Provenance::Brute;
        p.purity = rep.purity;
        p.purity_provenance = Provenance::Brute;
        p.impure = !rep.pure;
        return p;
    }
    p.d = code.known_distance;
    p.d_provenance = code.distance_provenance;
    p.d_is_bound = code.distance_provenance == Provenance::PaperBound;
    p.purity = code.known_purity;
    p.purity_provenance = code.distance_provenance;
    return p;
}

// ---------------------------------------------------------------------------
// CSS codes.

namespace detail {

inline std::optional<std::pair<std::size_t, Provenance>> classical_distance(const LinearCode &c) {
    if (c.known_distance) return std::make_pair(*c.known_distance, c.distance_provenance);
    if (c.k() > 0 && c.k() <= 20) return std::make_pair(min_weight_nonzero(c.generator), Provenance::Brute);
    return std::nullopt;
}

inline Provenance weaker(Provenance a, Provenance b) {
    if (a == b) return a;
    if (a == Provenance::Unverified || b == Provenance::Unverified) return Provenance::Unverified;
    if (a == Provenance::PaperBound || b == Provenance::PaperBound) return Provenance::PaperBound;
    return a == Provenance::Analytic ? b : a;
}

/// Some word of weight d in c outside `sub`, when a generator row shows it.
inline bool generator_witness(const LinearCode &c, std::size_t d, const LinearCode &sub) {
    for (std::size_t r = 0; r < c.generator.rows(); ++r) {
        if (c.generator[r].weight() == d && !sub.contains(c.generator[r])) return true;
    }
    return false;
}

}  // namespace detail

inline LinearCode dual_code(const LinearCode &c) { return LinearCode::from_generator(c.parity_check); }

/// X-type stabilizers from the dual of c2, Z-type from the dual of c1.
inline StabilizerCode css(const LinearCode &c1, const LinearCode &c2) {
    if (c1.n != c2.n) throw Error(ErrorKind::LengthMismatch, "CSS codes of different length");
    std::size_t n = c1.n;
    if (!row_space_contains(c1.generator, c2.parity_check)) {
        throw Error(ErrorKind::NotDualContaining, "dual of the second code is not inside the first");
    }
    std::vector<PauliVector> gens;
    for (std::size_t r = 0; r < c2.parity_check.rows(); ++r) gens.emplace_back(c2.parity_check[r], BitVector(n));
    for (std::size_t r = 0; r < c1.parity_check.rows(); ++r) gens.emplace_back(BitVector(n), c1.parity_check[r]);
    StabilizerCode code = stabilizer_from_generators(gens, n);
    auto d1 = detail::classical_distance(c1);
    auto d2 = detail::classical_distance(c2);
    if (d1 && d2) {
        std::size_t dmin = std::min(d1->first, d2->first);
        Provenance prov = detail::weaker(d1->second, d2->second);
        code.known_purity = dmin;
        // Exact when a minimum-weight word of a code is visibly not a
        // stabilizer (X side: c1 outside dual(c2); Z side: c2 outside dual(c1)).
        bool exact = (d1->first == dmin && detail::generator_witness(c1, dmin, dual_code(c2))) ||
                     (d2->first == dmin && detail::generator_witness(c2, dmin, dual_code(c1)));
        code.known_distance = dmin;
        code.distance_provenance = exact ? prov : Provenance::PaperBound;
    }
    return code;
}

// ---------------------------------------------------------------------------
// Enlargement.

/// Direct sum of companion matrices of x^2+x+1, with one companion of
/// x^3+x+1 when the dimension is odd. Neither polynomial has root 1.
inline BitMatrix default_fixed_point_free_map(std::size_t r) {
    if (r < 2) throw Error(ErrorKind::BadMap, "no fixed-point-free map in dimension " + std::to_string(r));
    BitMatrix a(r, r);
    std::size_t pos = 0;
    if (r % 2 == 1) {
        // companion of x^3 + x + 1: x^3 = x + 1
        a[0].set(1);
        a[1].set(2);
        a[2].set(0);
        a[2].set(1);
        pos = 3;
    }
    for (; pos + 2 <= r; pos += 2) {
        a[pos].set(pos + 1);
        a[pos + 1].set(pos);
        a[pos + 1].set(pos + 1);
    }
    return a;
}

inline bool fixed_point_free(const BitMatrix &a) {
    if (a.rows() != a.cols()) return false;
    BitMatrix shifted = a;
    for (std::size_t i = 0; i < a.rows(); ++i) shifted[i].flip(i);
    return rank(a) == a.rows() && rank(shifted) == a.rows();
}

struct Enlargement {
    StabilizerCode code;
    BitMatrix d;   // coset representatives of c'/c
    BitMatrix ad;  // rows of A*D
    std::size_t min_translation_weight = 0;
    bool weights_checked = false;
    std::size_t d_prime = 0;
};

inline Enlargement enlarge_css(const LinearCode &c, const LinearCode &c_prime, const BitMatrix &a_map,
                               std::uint64_t enumeration_cap = std::uint64_t{1} << 20) {
    if (c.n != c_prime.n) throw Error(ErrorKind::LengthMismatch, "enlargement codes of different length");
    std::size_t n = c.n;
    if (!row_space_contains(c.generator, c.parity_check)) throw Error(ErrorKind::BadChain, "code does not contain its dual");
    if (!row_space_contains(c_prime.generator, c.generator)) throw Error(ErrorKind::BadChain, "larger code does not contain the code");
    if (c_prime.k() < c.k() + 2) throw Error(ErrorKind::BadChain, "need k' > k + 1");
    std::size_t r = c_prime.k() - c.k();
    if (a_map.rows() != r || a_map.cols() != r) throw Error(ErrorKind::BadMap, "map must be " + std::to_string(r) + "x" + std::to_string(r));
    if (!fixed_point_free(a_map)) throw Error(ErrorKind::BadMap, "map is singular or has a fixed point");

    Enlargement out;
    out.d = quotient_basis(c_prime.generator, c.generator);
    out.ad = a_map.multiply(out.d);

    // Normalizer: c x c plus {(vD | vAD)}; the stabilizer is its complement.
    BitMatrix normalizer(0, 2 * n);
    normalizer.set_cols(2 * n);
    for (std::size_t i = 0; i < c.k(); ++i) normalizer.push_back(BitVector::concat(c.generator[i], BitVector(n)));
    for (std::size_t i = 0; i < c.k(); ++i) normalizer.push_back(BitVector::concat(BitVector(n), c.generator[i]));
    for (std::size_t i = 0; i < r; ++i) normalizer.push_back(BitVector::concat(out.d[i], out.ad[i]));
    BitMatrix stab = independent_rows(symplectic_complement(normalizer, n));
    std::vector<PauliVector> gens;
    for (std::size_t i = 0; i < stab.rows(); ++i) gens.push_back(PauliVector::from_symplectic(stab[i]));
    out.code = stabilizer_from_generators(gens, n);

    auto dc = detail::classical_distance(c);
    auto dp = detail::classical_distance(c_prime);
    if (dp) out.d_prime = dp->first;
    if (r < 63 && (std::uint64_t{1} << r) <= enumeration_cap) {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        BitVector vd(n), vad(n);
        for (std::uint64_t i = 1; i < (std::uint64_t{1} << r); ++i) {
            auto row = static_cast<std::size_t>(std::countr_zero(i));
            vd ^= out.d[row];
            vad ^= out.ad[row];
            BitVector both = vd;
            both ^= vad;
            best = std::min({best, vd.weight(), vad.weight(), both.weight()});
        }
        out.min_translation_weight = best;
        out.weights_checked = true;
    }
    if (dc && dp) {
        out.code.known_distance = std::min(dc->first, (3 * dp->first + 1) / 2);
        out.code.distance_provenance = Provenance::PaperBound;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text format: "n k", "S" and n-k operators, then optional "Z" and "X"
// blocks of k operators each.

inline void write_stabilizer_code(std::ostream &out, const StabilizerCode &code) {
    out << code.n << ' ' << code.k << '\n';
    out << "S\n";
    for (const auto &p : code.stab) out << p.to_string(p.negative()) << '\n';
    if (code.k > 0) {
        out << "Z\n";
        for (const auto &p : code.logical_z) out << p.to_string() << '\n';
        out << "X\n";
        for (const auto &p : code.logical_x) out << p.to_string() << '\n';
    }
}

namespace detail {

inline std::vector<PauliVector> read_operator_block(std::istream &in, std::size_t count, std::size_t n) {
    std::vector<PauliVector> ops;
    std::string line;
    for (std::size_t i = 0; i < count; ++i) {
        if (!next_content_line(in, line)) throw Error(ErrorKind::Parse, "operator block truncated");
        PauliVector p = PauliVector::parse(line);
        if (p.n() != n) throw Error(ErrorKind::Parse, "operator '" + line + "' has wrong length");
        ops.push_back(std::move(p));
    }
    return ops;
}

inline void expect_tag(std::istream &in, const std::string &tag) {
    std::string line;
    if (!next_content_line(in, line) || line != tag) throw Error(ErrorKind::Parse, "expected block '" + tag + "'");
}

}  // namespace detail

inline StabilizerCode read_stabilizer_code(std::istream &in) {
    std::string line;
    if (!next_content_line(in, line)) throw Error(ErrorKind::Parse, "missing stabilizer header");
    std::istringstream header(line);
    std::size_t n = 0, k = 0;
    if (!(header >> n >> k) || k > n || n == 0) throw Error(ErrorKind::Parse, "bad stabilizer header '" + line + "'");
    detail::expect_tag(in, "S");
    auto stab = detail::read_operator_block(in, n - k, n);
    StabilizerCode code = stabilizer_from_generators(stab, n);
    // Logical blocks are optional; when present they replace the completion.
    std::streampos mark = in.tellg();
    if (k > 0 && next_content_line(in, line) && line == "Z") {
        auto z = detail::read_operator_block(in, k, n);
        detail::expect_tag(in, "X");
        auto x = detail::read_operator_block(in, k, n);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                if (symplectic_ip(x[i], z[j]) != (i == j)) throw Error(ErrorKind::Parse, "logical operators do not pair up");
                if (symplectic_ip(x[i], x[j]) || symplectic_ip(z[i], z[j])) {
                    throw Error(ErrorKind::Parse, "logical operators do not commute");
                }
            }
            for (const auto &s : stab) {
                if (symplectic_ip(x[i], s) || symplectic_ip(z[i], s)) throw Error(ErrorKind::Parse, "logical operator anticommutes with the stabilizer");
            }
        }
        code.logical_z = std::move(z);
        code.logical_x = std::move(x);
    } else if (mark != std::streampos(-1)) {
        in.clear();
        in.seekg(mark);
    }
    return code;
}

}  // namespace unionstab
