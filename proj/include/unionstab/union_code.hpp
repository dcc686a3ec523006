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

// Union stabilizer codes: a stabilizer code plus translations selecting
// distinct normalizer cosets. Coset distances, the search graph on all
// normalizer cosets, clique search, and the CSS-like families.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "unionstab/classical.hpp"
#include "unionstab/error.hpp"
#include "unionstab/gf2.hpp"
#include "unionstab/pauli.hpp"
#include "unionstab/stabilizer.hpp"

namespace unionstab {

class UnionStabilizerCode {
   public:
    UnionStabilizerCode() = default;

    const StabilizerCode &base() const { return base_; }
    std::size_t n() const { return base_.n; }
    std::size_t k() const { return base_.k; }
    std::uint64_t K() const {
        return product_ ? static_cast<std::uint64_t>(tx_.size()) * tz_.size() : explicit_.size();
    }
    /// Translation i; for product codes i = ix * |Z list| + iz.
    PauliVector translation(std::uint64_t i) const {
        if (!product_) return explicit_.at(static_cast<std::size_t>(i));
        std::size_t ix = static_cast<std::size_t>(i / tz_.size());
        std::size_t iz = static_cast<std::size_t>(i % tz_.size());
        return PauliVector(tx_.at(ix), tz_.at(iz));
    }
    std::vector<PauliVector> translations() const {
        std::vector<PauliVector> out;
        for (std::uint64_t i = 0; i < K(); ++i) out.push_back(translation(i));
        return out;
    }
    bool is_product() const { return product_; }
    const std::vector<BitVector> &x_translations() const { return tx_; }
    const std::vector<BitVector> &z_translations() const { return tz_; }

    CodeParams params;

   private:
    friend UnionStabilizerCode union_code(const StabilizerCode &, std::vector<PauliVector>);
    friend UnionStabilizerCode css_like_union(const CosetCode &, const CosetCode &, DistanceStrategy, std::uint64_t);

    StabilizerCode base_;
    std::vector<PauliVector> explicit_;
    bool product_ = false;
    std::vector<BitVector> tx_, tz_;
};

/// Label of the normalizer coset of p: bit i = ip(p, S_i).
inline BitVector coset_label(const StabilizerCode &base, const PauliVector &p) {
    return symplectic_syndrome(base.stab, p);
}

/// Identity is prepended when no translation is the identity operator.
inline UnionStabilizerCode union_code(const StabilizerCode &base, std::vector<PauliVector> ts) {
    bool has_identity = std::any_of(ts.begin(), ts.end(), [](const PauliVector &p) { return p.is_identity(); });
    if (!has_identity) ts.insert(ts.begin(), PauliVector(base.n));
    std::unordered_set<BitVector, BitVectorHash> labels;
    for (const auto &t : ts) {
        if (t.n() != base.n) throw Error(ErrorKind::LengthMismatch, "translation " + t.to_string() + " has wrong length");
        if (!labels.insert(coset_label(base, t)).second) {
            throw Error(ErrorKind::DuplicateCoset, "translation " + t.to_string() + " repeats a normalizer coset");
        }
    }
    UnionStabilizerCode u;
    u.base_ = base;
    u.explicit_ = std::move(ts);
    u.params.n = base.n;
    u.params.k = base.k;
    u.params.translations = u.explicit_.size();
    return u;
}

// ---------------------------------------------------------------------------
// Distances.

/// Minimum Pauli weight of the coset C*_0 + p.
inline std::size_t normalizer_coset_min_weight(const StabilizerCode &base, const PauliVector &p,
                                               std::uint64_t cap = kDefaultEnumerationCap) {
    BitMatrix g = base.normalizer_matrix();
    std::size_t n = base.n;
    BitVector shift = p.symplectic();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    try {
        for_each_word(g, cap, [&](const BitVector &w) {
            std::size_t c = 0;
            for (std::size_t i = 0; i < n; ++i) c += ((w.get(i) ^ shift.get(i)) || (w.get(n + i) ^ shift.get(n + i))) ? 1 : 0;
            best = std::min(best, c);
        });
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::CapExceeded) throw Error(ErrorKind::StrategyInfeasible, e.what());
        throw;
    }
    return best;
}

inline std::size_t coset_distance(const UnionStabilizerCode &code, std::uint64_t i, std::uint64_t j,
                                  std::uint64_t cap = kDefaultEnumerationCap) {
    if (i == j) return 0;
    return normalizer_coset_min_weight(code.base(), code.translation(i) + code.translation(j), cap);
}

/// Lower bound on the distance: the smallest coset distance between
/// distinct translations, capped by the purity of the base.
inline CodeParams union_distance_bound(const UnionStabilizerCode &code, std::uint64_t cap = kDefaultEnumerationCap) {
    CodeParams p = code.params;
    const StabilizerCode &base = code.base();
    std::size_t dim = base.n + base.k;
    bool brute = dim < 63 && (std::uint64_t{1} << dim) <= cap;
    std::optional<std::size_t> purity, base_d;
    if (brute) {
        auto rep = purity_and_distance(base, cap);
        purity = rep.purity;
        base_d = rep.distance;
    } else {
        purity = base.known_purity;
        base_d = base.known_distance;
    }
    if (code.K() == 1) {
        p.d = base_d;
        p.d_provenance = brute ? Provenance::Brute : base.distance_provenance;
        p.purity = purity;
        return p;
    }
    if (!brute) throw Error(ErrorKind::StrategyInfeasible, "coset enumeration exceeds the cap");
    // Coset distances depend only on the label of t_i + t_j.
    std::unordered_map<BitVector, std::size_t, BitVectorHash> memo;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t i = 0; i < code.K(); ++i) {
        PauliVector ti = code.translation(i);
        for (std::uint64_t j = i + 1; j < code.K(); ++j) {
            PauliVector diff = ti + code.translation(j);
            BitVector key = diff.symplectic();
            auto it = memo.find(key);
            std::size_t w = it != memo.end() ? it->second : (memo[key] = normalizer_coset_min_weight(base, diff, cap));
            best = std::min(best, w);
        }
    }
    p.purity = purity;
    p.purity_provenance = Provenance::Brute;
    p.d = std::min(best, *purity);
    p.d_provenance = Provenance::CosetBrute;
    p.d_is_bound = true;
    p.impure = *purity < best;
    return p;
}

/// Minimum weight of (C* - C*) outside the symplectic dual of span(C*).
inline std::size_t true_distance(const UnionStabilizerCode &code, std::uint64_t cap = kDefaultEnumerationCap) {
    std::size_t n = code.n();
    if (2 * n >= 63 || (std::uint64_t{1} << (2 * n)) > cap) {
        throw Error(ErrorKind::StrategyInfeasible, "true distance needs 4^n <= cap");
    }
    const StabilizerCode &base = code.base();
    BitMatrix span = base.normalizer_matrix();
    span.set_cols(2 * n);
    for (std::uint64_t i = 0; i < code.K(); ++i) span.push_back(code.translation(i).symplectic());
    // v is in the dual of span(C*) iff it commutes with all of span(C*).
    std::vector<PauliVector> closure_gens;
    BitMatrix basis = independent_rows(span);
    for (std::size_t r = 0; r < basis.rows(); ++r) closure_gens.push_back(PauliVector::from_symplectic(basis[r]));
    auto in_dual = [&](const PauliVector &v) { return symplectic_syndrome(closure_gens, v).is_zero(); };

    BitMatrix g = base.normalizer_matrix();
    std::unordered_set<BitVector, BitVectorHash> seen;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t i = 0; i < code.K(); ++i) {
        PauliVector ti = code.translation(i);
        for (std::uint64_t j = i; j < code.K(); ++j) {
            PauliVector shift = ti + code.translation(j);
            if (!seen.insert(coset_label(base, shift)).second) continue;
            for_each_word(g, cap, [&](const BitVector &w) {
                PauliVector v = PauliVector::from_symplectic(w) + shift;
                if (v.is_identity() || in_dual(v)) return;
                best = std::min(best, pauli_weight(v));
            });
        }
    }
    if (best == std::numeric_limits<std::size_t>::max()) {
        throw Error(ErrorKind::StrategyInfeasible, "difference set lies inside the dual; distance undefined");
    }
    return best;
}

// ---------------------------------------------------------------------------
// CSS-like unions.

/// Base css(c1, c2) with translations (t1 | t2) for all pairs. The distance
/// bound is the smallest of the two classical union distances and the
/// purity of the base.
inline UnionStabilizerCode css_like_union(const CosetCode &u1, const CosetCode &u2,
                                          DistanceStrategy strategy = DistanceStrategy::Enumerator,
                                          std::uint64_t cap = kDefaultEnumerationCap) {
    StabilizerCode base = css(u1.base, u2.base);
    UnionStabilizerCode u;
    u.base_ = base;
    u.product_ = true;
    u.tx_ = u1.translations;
    u.tz_ = u2.translations;
    u.params.n = base.n;
    u.params.k = base.k;
    u.params.translations = u.K();
    std::size_t d1 = min_distance(u1, strategy, cap);
    std::size_t d2 = min_distance(u2, strategy, cap);
    std::size_t d = std::min(d1, d2);
    Provenance prov = provenance_of(strategy);
    if (base.known_purity) {
        u.params.purity = base.known_purity;
        u.params.purity_provenance = base.distance_provenance;
        if (*base.known_purity < d) {
            d = *base.known_purity;
            prov = detail::weaker(prov, base.distance_provenance);
        }
    }
    u.params.d = d;
    u.params.d_provenance = prov;
    u.params.d_is_bound = true;
    return u;
}

inline UnionStabilizerCode css_like_union(const LinearCode &c1, const LinearCode &c2, const std::vector<BitVector> &t1s,
                                          const std::vector<BitVector> &t2s,
                                          DistanceStrategy strategy = DistanceStrategy::CosetBrute,
                                          std::uint64_t cap = kDefaultEnumerationCap) {
    return css_like_union(make_coset_code(c1, t1s), make_coset_code(c2, t2s), strategy, cap);
}

enum class FamilyKind { Goethals, Preparata };
enum class FamilyRoute { Classical, Z4 };

inline FamilyKind parse_family_kind(std::string_view s) {
    if (s == "goethals") return FamilyKind::Goethals;
    if (s == "preparata") return FamilyKind::Preparata;
    throw Error(ErrorKind::BadParams, "unknown family '" + std::string(s) + "'");
}

/// The classical union code of the family, by the chosen route.
inline CosetCode family_classical_code(FamilyKind kind, int m, FamilyRoute route = FamilyRoute::Classical) {
    if (m % 2 != 0) throw Error(ErrorKind::BadParams, "m must be even, got " + std::to_string(m));
    if (m < 4 || m > 6) throw Error(ErrorKind::BadParams, "m = " + std::to_string(m) + " is beyond desk scale (4 or 6)");
    if (route == FamilyRoute::Z4) return kind == FamilyKind::Goethals ? goethals_binary(m) : preparata_like(m);
    return kind == FamilyKind::Goethals ? goethals_classical(m) : preparata_classical(m);
}

inline UnionStabilizerCode family_build(FamilyKind kind, int m, FamilyRoute route = FamilyRoute::Classical) {
    CosetCode c = family_classical_code(kind, m, route);
    return css_like_union(c, c, DistanceStrategy::Enumerator);
}

/// log2 dimension of the families from their formulas, any even m >= 6.
inline std::size_t family_log2_dimension(FamilyKind kind, std::size_t m) {
    std::size_t n = std::size_t{1} << m;
    // dim C_0 = 2^m - 2 C(m,2) - 2m - 2; K = 2^(C(m,2) - 2m + 2) or 2^(C(m,2) - m + 1)
    std::size_t base = n - 2 * static_cast<std::size_t>(binomial(m, 2)) - 2 * m - 2;
    std::size_t log_k = kind == FamilyKind::Goethals ? static_cast<std::size_t>(binomial(m, 2)) + 2 - 2 * m
                                                     : static_cast<std::size_t>(binomial(m, 2)) + 1 - m;
    return base + 2 * log_k;
}

/// k of the enlargement of css(RM(m-3,m)) by RM(m-2,m):
/// 2 dim RM(m-3,m) - 2^m + C(m,2).
inline std::size_t enlarged_rm_dimension(std::size_t m) {
    if (m < 4) throw Error(ErrorKind::BadParams, "enlarged Reed-Muller codes need m >= 4");
    std::size_t dim = 0;
    for (std::size_t i = 0; i + 3 <= m; ++i) dim += static_cast<std::size_t>(binomial(m, i));
    return 2 * dim - (std::size_t{1} << m) + static_cast<std::size_t>(binomial(m, 2));
}

// ---------------------------------------------------------------------------
// Search graph.

struct SearchGraph {
    std::size_t n = 0;
    std::size_t label_bits = 0;  // n - k
    std::size_t target_d = 0;
    std::vector<PauliVector> representatives;          // index = label as binary number
    std::vector<std::size_t> coset_weight;             // min weight per coset
    std::vector<std::vector<std::uint64_t>> adjacency;  // bitsets
    std::size_t purity = 0;
    bool pure_enough = true;

    std::size_t vertex_count() const { return representatives.size(); }
    bool adjacent(std::size_t u, std::size_t v) const { return (adjacency[u][v / 64] >> (v % 64)) & 1; }
    std::size_t degree(std::size_t u) const {
        std::size_t d = 0;
        for (auto w : adjacency[u]) d += static_cast<std::size_t>(std::popcount(w));
        return d;
    }
    std::size_t edge_count() const {
        std::size_t e = 0;
        for (std::size_t u = 0; u < vertex_count(); ++u) e += degree(u);
        return e / 2;
    }
    /// Label string; position i is the commutation bit with generator i.
    std::string label(std::size_t v) const {
        std::string s(label_bits, '0');
        for (std::size_t i = 0; i < label_bits; ++i) {
            if ((v >> (label_bits - 1 - i)) & 1) s[i] = '1';
        }
        return s;
    }
};

inline std::size_t label_index(const BitVector &label) {
    std::size_t v = 0;
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (label.get(i)) v |= std::size_t{1} << (label.size() - 1 - i);
    }
    return v;
}

/// One vertex per normalizer coset; u ~ v iff the coset of t_u + t_v has
/// minimum weight >= d. With require_purity, a base impure below d is
/// rejected.
inline SearchGraph build_search_graph(const StabilizerCode &base, std::size_t d,
                                      std::uint64_t cap = kDefaultEnumerationCap, bool require_purity = false) {
    std::size_t n = base.n;
    if (2 * n >= 63 || (std::uint64_t{1} << (2 * n)) > cap) {
        throw Error(ErrorKind::StrategyInfeasible, "search graph needs all 4^n Paulis within the cap");
    }
    SearchGraph g;
    g.n = n;
    g.label_bits = base.stab.size();
    g.target_d = d;
    std::size_t vertices = std::size_t{1} << g.label_bits;

    // Coset minimum weights from one Gray-code pass over all Paulis.
    std::vector<std::size_t> unit_label(2 * n);
    for (std::size_t j = 0; j < 2 * n; ++j) {
        PauliVector e(n);
        if (j < n) e.x().set(j); else e.z().set(j - n);
        unit_label[j] = label_index(coset_label(base, e));
    }
    g.coset_weight.assign(vertices, std::numeric_limits<std::size_t>::max());
    g.coset_weight[0] = 0;
    std::uint64_t x = 0, z = 0;
    std::size_t lab = 0;
    std::size_t purity = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << (2 * n)); ++i) {
        auto j = static_cast<std::size_t>(std::countr_zero(i));
        if (j < n) x ^= std::uint64_t{1} << j; else z ^= std::uint64_t{1} << (j - n);
        lab ^= unit_label[j];
        auto w = static_cast<std::size_t>(std::popcount(x | z));
        g.coset_weight[lab] = std::min(g.coset_weight[lab], w);
        if (lab == 0) purity = std::min(purity, w);
    }
    g.purity = purity;
    g.pure_enough = purity >= d;
    if (require_purity && !g.pure_enough) {
        throw Error(ErrorKind::NotPureEnough, "base is pure only up to " + std::to_string(purity) + " < " + std::to_string(d));
    }

    BitMatrix syn(0, 2 * n);
    syn.set_cols(2 * n);
    for (const auto &s : base.stab) syn.push_back(BitVector::concat(s.z(), s.x()));
    g.representatives.reserve(vertices);
    for (std::size_t v = 0; v < vertices; ++v) {
        BitVector target(g.label_bits);
        for (std::size_t i = 0; i < g.label_bits; ++i) {
            if ((v >> (g.label_bits - 1 - i)) & 1) target.set(i);
        }
        auto t = solve(syn, target);
        g.representatives.push_back(PauliVector::from_symplectic(*t));
    }
    std::size_t words = (vertices + 63) / 64;
    g.adjacency.assign(vertices, std::vector<std::uint64_t>(words, 0));
    for (std::size_t u = 0; u < vertices; ++u) {
        for (std::size_t v = 0; v < vertices; ++v) {
            if (u != v && g.coset_weight[u ^ v] >= d) g.adjacency[u][v / 64] |= std::uint64_t{1} << (v % 64);
        }
    }
    return g;
}

inline void write_search_graph(std::ostream &out, const SearchGraph &g) {
    out << "vertices " << g.vertex_count() << " edges " << g.edge_count() << '\n';
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        out << g.label(u) << ':';
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (g.adjacent(u, v)) out << ' ' << g.label(v);
        }
        out << '\n';
    }
}

// ---------------------------------------------------------------------------
// Cliques containing the identity vertex.

enum class CliqueMode { Exact, Greedy };

struct CliqueResult {
    std::vector<std::size_t> vertices;  // sorted, includes 0
    CliqueMode method = CliqueMode::Exact;
    bool optimal = false;
    std::uint64_t nodes = 0;
    std::uint64_t seed = 0;
    std::size_t size() const { return vertices.size(); }
};

namespace detail {

class CliqueSearch {
   public:
    CliqueSearch(const SearchGraph &g, std::uint64_t budget) : g_(g), budget_(budget) {}

    CliqueResult run() {
        std::vector<std::size_t> cand;
        for (std::size_t v = 1; v < g_.vertex_count(); ++v) {
            if (g_.adjacent(0, v)) cand.push_back(v);
        }
        // degree descending, label ascending
        std::stable_sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) {
            std::size_t da = g_.degree(a), db = g_.degree(b);
            return da != db ? da > db : a < b;
        });
        best_ = {0};
        current_ = {0};
        expand(cand);
        CliqueResult r;
        r.vertices = best_;
        std::sort(r.vertices.begin(), r.vertices.end());
        r.method = CliqueMode::Exact;
        r.optimal = !exhausted_;
        r.nodes = nodes_;
        return r;
    }

   private:
    // Greedy colouring of cand (in order); colors[i] bounds the clique size
    // reachable from cand[0..i].
    void color(const std::vector<std::size_t> &cand, std::vector<std::size_t> &order, std::vector<std::size_t> &bound) {
        std::vector<std::vector<std::size_t>> classes;
        for (auto v : cand) {
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool clash = false;
                for (auto u : classes[c]) {
                    if (g_.adjacent(u, v)) {
                        clash = true;
                        break;
                    }
                }
                if (!clash) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
        }
        order.clear();
        bound.clear();
        for (std::size_t c = 0; c < classes.size(); ++c) {
            for (auto v : classes[c]) {
                order.push_back(v);
                bound.push_back(c + 1);
            }
        }
    }

    void expand(const std::vector<std::size_t> &cand) {
        if (exhausted_) return;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return;
        }
        if (cand.empty()) {
            if (current_.size() > best_.size()) best_ = current_;
            return;
        }
        std::vector<std::size_t> order, bound;
        color(cand, order, bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current_.size() + bound[i] <= best_.size()) return;
            std::size_t v = order[i];
            current_.push_back(v);
            std::vector<std::size_t> next;
            for (std::size_t j = 0; j < i; ++j) {
                if (g_.adjacent(v, order[j])) next.push_back(order[j]);
            }
            // keep the degree ordering for the children
            std::vector<std::size_t> sorted_next;
            for (auto u : cand) {
                if (std::find(next.begin(), next.end(), u) != next.end()) sorted_next.push_back(u);
            }
            expand(sorted_next);
            current_.pop_back();
            if (exhausted_) return;
        }
    }

    const SearchGraph &g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<std::size_t> best_, current_;
};

}  // namespace detail

inline bool is_clique(const SearchGraph &g, const std::vector<std::size_t> &vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (!g.adjacent(vs[i], vs[j])) return false;
        }
    }
    return true;
}

/// Exact: branch and bound with a colouring bound; budget counts search
/// nodes and, when hit, the best clique so far is returned with
/// optimal = false. Greedy: `budget` randomized restarts from `seed`.
inline CliqueResult max_clique(const SearchGraph &g, CliqueMode mode, std::uint64_t seed = 0,
                               std::uint64_t budget = std::uint64_t{1} << 24) {
    CliqueResult r;
    if (mode == CliqueMode::Exact) {
        r = detail::CliqueSearch(g, budget).run();
    } else {
        std::mt19937_64 rng(seed);
        std::vector<std::size_t> cand;
        for (std::size_t v = 1; v < g.vertex_count(); ++v) {
            if (g.adjacent(0, v)) cand.push_back(v);
        }
        std::vector<std::size_t> best{0};
        std::uint64_t restarts = std::min<std::uint64_t>(budget, 256);
        for (std::uint64_t s = 0; s < restarts; ++s) {
            std::shuffle(cand.begin(), cand.end(), rng);
            std::vector<std::size_t> clique{0};
            for (auto v : cand) {
                bool ok = std::all_of(clique.begin(), clique.end(), [&](std::size_t u) { return g.adjacent(u, v); });
                if (ok) clique.push_back(v);
            }
            std::sort(clique.begin(), clique.end());
            if (clique.size() > best.size() || (clique.size() == best.size() && clique < best)) best = clique;
        }
        r.vertices = best;
        r.method = CliqueMode::Greedy;
        r.optimal = false;
        r.nodes = restarts;
        r.seed = seed;
    }
    if (!is_clique(g, r.vertices) || r.vertices.empty() || r.vertices.front() != 0) {
        throw Error(ErrorKind::ConstructionMismatch, "clique verification failed");
    }
    return r;
}

/// Union code induced by a clique: translations are the coset
/// representatives of its vertices, identity first.
inline UnionStabilizerCode union_from_clique(const StabilizerCode &base, const SearchGraph &g, const CliqueResult &c) {
    std::vector<PauliVector> ts;
    for (auto v : c.vertices) ts.push_back(g.representatives[v]);
    return union_code(base, ts);
}

// ---------------------------------------------------------------------------
// Text format: the stabilizer block, then "T K" and K operators. Product
// codes are written as "TX a" / "TZ b" blocks of bit rows instead.

inline void write_union_code(std::ostream &out, const UnionStabilizerCode &u) {
    write_stabilizer_code(out, u.base());
    if (u.is_product()) {
        out << "TX " << u.x_translations().size() << '\n';
        for (const auto &t : u.x_translations()) out << t.to_string() << '\n';
        out << "TZ " << u.z_translations().size() << '\n';
        for (const auto &t : u.z_translations()) out << t.to_string() << '\n';
        return;
    }
    out << "T " << u.K() << '\n';
    for (std::uint64_t i = 0; i < u.K(); ++i) out << u.translation(i).to_string() << '\n';
}

inline UnionStabilizerCode read_union_code(std::istream &in) {
    StabilizerCode base = read_stabilizer_code(in);
    std::string line;
    if (!next_content_line(in, line)) throw Error(ErrorKind::Parse, "missing translation block");
    std::istringstream header(line);
    std::string tag;
    std::size_t count = 0;
    if (!(header >> tag >> count)) throw Error(ErrorKind::Parse, "bad translation header '" + line + "'");
    if (tag == "T") return union_code(base, detail::read_operator_block(in, count, base.n));
    if (tag != "TX") throw Error(ErrorKind::Parse, "expected 'T K' or 'TX a', got '" + line + "'");
    auto read_bits = [&](std::size_t c) {
        std::vector<BitVector> rows;
        for (std::size_t i = 0; i < c; ++i) {
            if (!next_content_line(in, line) || line.size() != base.n) throw Error(ErrorKind::Parse, "bad translation row");
            rows.push_back(BitVector::from_string(line));
        }
        return rows;
    };
    auto tx = read_bits(count);
    if (!next_content_line(in, line)) throw Error(ErrorKind::Parse, "missing TZ block");
    std::istringstream zh(line);
    if (!(zh >> tag >> count) || tag != "TZ") throw Error(ErrorKind::Parse, "expected 'TZ b'");
    auto tz = read_bits(count);
    // Rebuild the CSS base's classical codes from the stabilizer blocks.
    BitMatrix hx(0, base.n), hz(0, base.n);
    hx.set_cols(base.n);
    hz.set_cols(base.n);
    for (const auto &s : base.stab) {
        if (!s.z().is_zero() && !s.x().is_zero()) throw Error(ErrorKind::Parse, "product translations need a CSS base");
        if (s.z().is_zero()) hx.push_back(s.x()); else hz.push_back(s.z());
    }
    LinearCode c1 = LinearCode::from_generator(kernel_basis(hz));
    LinearCode c2 = LinearCode::from_generator(kernel_basis(hx));
    return css_like_union(make_coset_code(c1, tx), make_coset_code(c2, tz), DistanceStrategy::Enumerator);
}

}  // namespace unionstab
