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

// Gate lists, Pauli conjugation through Clifford circuits, the Clifford
// inverse encoder (stabilizer -> Z on the first n-k qubits) and the
// shortest classical reversible circuit relabelling coset labels.

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "unionstab/error.hpp"
#include "unionstab/gf2.hpp"
#include "unionstab/pauli.hpp"
#include "unionstab/stabilizer.hpp"
#include "unionstab/union_code.hpp"

namespace unionstab {

enum class GateType : std::uint8_t { H, P, CNOT, CZ, X, Z, CCX };

struct Gate {
    GateType type;
    std::array<std::uint16_t, 3> q{0, 0, 0};  // 0-indexed qubits

    std::size_t arity() const {
        switch (type) {
            case GateType::CNOT:
            case GateType::CZ: return 2;
            case GateType::CCX: return 3;
            default: return 1;
        }
    }
    friend bool operator==(const Gate &a, const Gate &b) {
        if (a.type != b.type) return false;
        for (std::size_t i = 0; i < a.arity(); ++i) {
            if (a.q[i] != b.q[i]) return false;
        }
        return true;
    }
    friend bool operator<(const Gate &a, const Gate &b) {
        if (a.type != b.type) return a.type < b.type;
        return a.q < b.q;
    }
};

inline std::string_view gate_name(GateType t) {
    switch (t) {
        case GateType::H: return "H";
        case GateType::P: return "P";
        case GateType::CNOT: return "CNOT";
        case GateType::CZ: return "CZ";
        case GateType::X: return "X";
        case GateType::Z: return "Z";
        case GateType::CCX: return "CCX";
    }
    return "?";
}

struct Circuit {
    std::size_t n = 0;
    std::vector<Gate> gates;

    void add(GateType t, std::size_t a, std::size_t b = 0, std::size_t c = 0) {
        Gate g{t, {static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(c)}};
        for (std::size_t i = 0; i < g.arity(); ++i) {
            if (g.q[i] >= n) throw Error(ErrorKind::BadParams, "qubit " + std::to_string(g.q[i] + 1) + " out of range");
            for (std::size_t j = 0; j < i; ++j) {
                if (g.q[i] == g.q[j]) throw Error(ErrorKind::BadParams, "gate acts twice on one qubit");
            }
        }
        gates.push_back(g);
    }
    std::size_t size() const { return gates.size(); }
    std::size_t count(GateType t) const {
        return static_cast<std::size_t>(std::count_if(gates.begin(), gates.end(), [&](const Gate &g) { return g.type == t; }));
    }
    bool is_clifford() const { return count(GateType::CCX) == 0; }
};

// Text format: "qubits n" then one gate per line, 1-indexed.

inline void write_circuit(std::ostream &out, const Circuit &c) {
    out << "qubits " << c.n << '\n';
    for (const auto &g : c.gates) {
        out << gate_name(g.type);
        for (std::size_t i = 0; i < g.arity(); ++i) out << ' ' << g.q[i] + 1;
        out << '\n';
    }
}

inline std::string circuit_to_string(const Circuit &c) {
    std::ostringstream s;
    write_circuit(s, c);
    return s.str();
}

inline Circuit read_circuit(std::istream &in) {
    std::string line;
    if (!next_content_line(in, line)) throw Error(ErrorKind::Parse, "missing circuit header");
    std::istringstream header(line);
    std::string tag;
    Circuit c;
    if (!(header >> tag >> c.n) || tag != "qubits") throw Error(ErrorKind::Parse, "expected 'qubits n', got '" + line + "'");
    while (next_content_line(in, line)) {
        std::istringstream s(line);
        std::string name;
        s >> name;
        static const std::unordered_map<std::string, GateType> kNames = {
            {"H", GateType::H},   {"P", GateType::P}, {"CNOT", GateType::CNOT}, {"CZ", GateType::CZ},
            {"X", GateType::X},   {"Z", GateType::Z}, {"CCX", GateType::CCX},
        };
        auto it = kNames.find(name);
        if (it == kNames.end()) throw Error(ErrorKind::Parse, "unknown gate '" + name + "'");
        Gate g{it->second, {0, 0, 0}};
        std::array<std::size_t, 3> q{0, 0, 0};
        for (std::size_t i = 0; i < g.arity(); ++i) {
            if (!(s >> q[i]) || q[i] == 0) throw Error(ErrorKind::Parse, "bad qubit in '" + line + "'");
            q[i] -= 1;
        }
        std::string extra;
        if (s >> extra) throw Error(ErrorKind::Parse, "trailing text in '" + line + "'");
        try {
            c.add(g.type, q[0], q[1], q[2]);
        } catch (const Error &e) {
            throw Error(ErrorKind::Parse, e.what());
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// Conjugation p -> U p U^dagger, with the sign tracked.

inline void conjugate_gate(const Gate &g, PauliVector &p) {
    auto &x = p.x();
    auto &z = p.z();
    auto h = [&](std::size_t a) {
        bool xa = x.get(a), za = z.get(a);
        if (xa && za) p.flip_sign();
        x.set(a, za);
        z.set(a, xa);
    };
    auto cnot = [&](std::size_t a, std::size_t b) {
        bool xa = x.get(a), za = z.get(a), xb = x.get(b), zb = z.get(b);
        if (xa && zb && (xb == za)) p.flip_sign();
        x.set(b, xb ^ xa);
        z.set(a, za ^ zb);
    };
    switch (g.type) {
        case GateType::H: h(g.q[0]); break;
        case GateType::P: {
            std::size_t a = g.q[0];
            bool xa = x.get(a), za = z.get(a);
            if (xa && za) p.flip_sign();
            z.set(a, za ^ xa);
            break;
        }
        case GateType::CNOT: cnot(g.q[0], g.q[1]); break;
        case GateType::CZ:
            h(g.q[1]);
            cnot(g.q[0], g.q[1]);
            h(g.q[1]);
            break;
        case GateType::X:
            if (z.get(g.q[0])) p.flip_sign();
            break;
        case GateType::Z:
            if (x.get(g.q[0])) p.flip_sign();
            break;
        case GateType::CCX: throw Error(ErrorKind::NonCliffordGate, "CCX cannot be conjugated through the tableau");
    }
}

inline PauliVector conjugate(const Circuit &c, PauliVector p) {
    if (p.n() != c.n) throw Error(ErrorKind::LengthMismatch, "operator length differs from circuit width");
    for (const auto &g : c.gates) conjugate_gate(g, p);
    return p;
}

// ---------------------------------------------------------------------------
// Clifford inverse encoder.

namespace detail {

/// Destabilizers: D_i anticommutes with S_i only, commutes with the
/// logicals and with each other.
inline std::vector<PauliVector> destabilizers(const StabilizerCode &code) {
    std::size_t n = code.n;
    std::size_t r = code.stab.size();
    std::vector<PauliVector> rows = code.stab;
    rows.insert(rows.end(), code.logical_z.begin(), code.logical_z.end());
    rows.insert(rows.end(), code.logical_x.begin(), code.logical_x.end());
    BitMatrix sys(0, 2 * n);
    sys.set_cols(2 * n);
    for (const auto &p : rows) sys.push_back(BitVector::concat(p.z(), p.x()));
    std::vector<PauliVector> out;
    for (std::size_t i = 0; i < r; ++i) {
        BitVector y(rows.size());
        y.set(i);
        auto v = solve(sys, y);
        if (!v) throw Error(ErrorKind::ConstructionMismatch, "no destabilizer for generator " + std::to_string(i));
        PauliVector d = PauliVector::from_symplectic(*v);
        for (std::size_t j = 0; j < i; ++j) {
            if (symplectic_ip(d, out[j])) d += code.stab[j];
        }
        out.push_back(d);
    }
    return out;
}

}  // namespace detail

/// Circuit U with U S_i U^dagger = +Z_i for every generator, and the
/// logicals sent to +Z / +X on the last k qubits.
inline Circuit synth_q1(const StabilizerCode &code) {
    std::size_t n = code.n;
    std::size_t r = code.stab.size();
    std::vector<PauliVector> zrow = code.stab, xrow = detail::destabilizers(code);
    for (auto p : code.logical_z) zrow.push_back(p);
    for (auto p : code.logical_x) xrow.push_back(p);
    for (auto &p : xrow) p.set_negative(false);
    Circuit c;
    c.n = n;
    auto apply = [&](GateType t, std::size_t a, std::size_t b = 0) {
        c.add(t, a, b);
        const Gate &g = c.gates.back();
        for (auto &p : zrow) conjugate_gate(g, p);
        for (auto &p : xrow) conjugate_gate(g, p);
    };
    for (std::size_t i = 0; i < n; ++i) {
        // X-row -> X_i
        {
            PauliVector &xr = xrow[i];
            std::size_t j = i;
            while (j < n && !xr.x_bit(j)) ++j;
            if (j == n) {
                j = i;
                while (j < n && !xr.z_bit(j)) ++j;
                apply(GateType::H, j);
            }
            if (j != i) apply(GateType::CNOT, j, i);
            for (std::size_t t = i + 1; t < n; ++t) {
                if (xrow[i].x_bit(t)) apply(GateType::CNOT, i, t);
            }
            if (xrow[i].z_bit(i)) apply(GateType::P, i);
            for (std::size_t t = i + 1; t < n; ++t) {
                if (xrow[i].z_bit(t)) apply(GateType::CZ, i, t);
            }
        }
        // Z-row -> Z_i with gates fixing X_i
        for (std::size_t t = i + 1; t < n; ++t) {
            if (zrow[i].x_bit(t)) {
                if (zrow[i].z_bit(t)) apply(GateType::P, t);
                apply(GateType::H, t);
            }
        }
        for (std::size_t t = i + 1; t < n; ++t) {
            if (zrow[i].z_bit(t)) apply(GateType::CNOT, t, i);
        }
        if (zrow[i].x_bit(i)) {
            apply(GateType::H, i);
            apply(GateType::P, i);
            apply(GateType::H, i);
        }
    }
    // trailing Pauli layer for the signs
    for (std::size_t i = 0; i < n; ++i) {
        if (zrow[i].negative()) apply(GateType::X, i);
        if (i >= r && xrow[i].negative()) apply(GateType::Z, i);
    }
    return c;
}

/// True when conjugation by c sends S_i to +Z_i, Z-bar_l to +Z_(r+l) and
/// X-bar_l to +X_(r+l).
inline bool q1_check(const StabilizerCode &code, const Circuit &c) {
    std::size_t n = code.n, r = code.stab.size();
    auto single = [&](std::size_t q, bool is_x) {
        PauliVector p(n);
        (is_x ? p.x() : p.z()).set(q);
        return p;
    };
    for (std::size_t i = 0; i < r; ++i) {
        if (!(conjugate(c, code.stab[i]) == single(i, false))) return false;
    }
    for (std::size_t l = 0; l < code.k; ++l) {
        PauliVector z = code.logical_z[l], x = code.logical_x[l];
        z.set_negative(false);
        x.set_negative(false);
        if (!(conjugate(c, z) == single(r + l, false)) || !(conjugate(c, x) == single(r + l, true))) return false;
    }
    return true;
}

/// Transformed translations reduced to X-strings on the first n-k qubits.
inline std::vector<BitVector> canonicalize_translations(const UnionStabilizerCode &code, const Circuit &q1) {
    std::size_t r = code.base().stab.size();
    std::vector<BitVector> out;
    std::unordered_set<BitVector, BitVectorHash> seen;
    for (std::uint64_t i = 0; i < code.K(); ++i) {
        PauliVector t = conjugate(q1, code.translation(i));
        BitVector label = t.x().slice(0, r);
        if (!seen.insert(label).second) {
            throw Error(ErrorKind::CollisionAfterReduction, "translation " + std::to_string(i) + " reduces to " + label.to_string());
        }
        out.push_back(std::move(label));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Classical reversible relabelling.

enum class ClassicalGateSet : std::uint8_t { X = 1, CNOT = 2, CCX = 4, All = 7 };

inline std::vector<Gate> classical_gates(std::size_t w, unsigned set = 7) {
    std::vector<Gate> gs;
    auto q = [](std::size_t v) { return static_cast<std::uint16_t>(v); };
    if (set & 1) {
        for (std::size_t a = 0; a < w; ++a) gs.push_back({GateType::X, {q(a), 0, 0}});
    }
    if (set & 2) {
        for (std::size_t a = 0; a < w; ++a) {
            for (std::size_t b = 0; b < w; ++b) {
                if (a != b) gs.push_back({GateType::CNOT, {q(a), q(b), 0}});
            }
        }
    }
    if (set & 4) {
        for (std::size_t a = 0; a < w; ++a) {
            for (std::size_t b = a + 1; b < w; ++b) {
                for (std::size_t t = 0; t < w; ++t) {
                    if (t != a && t != b) gs.push_back({GateType::CCX, {q(a), q(b), q(t)}});
                }
            }
        }
    }
    return gs;
}

/// Bits: position p of a label string is bit p of the value.
inline std::uint32_t apply_classical_gate(const Gate &g, std::uint32_t v) {
    auto bit = [&](std::size_t p) { return (v >> p) & 1u; };
    switch (g.type) {
        case GateType::X: return v ^ (1u << g.q[0]);
        case GateType::CNOT: return bit(g.q[0]) ? v ^ (1u << g.q[1]) : v;
        case GateType::CCX: return (bit(g.q[0]) && bit(g.q[1])) ? v ^ (1u << g.q[2]) : v;
        default: throw Error(ErrorKind::BadParams, "gate is not classical reversible");
    }
}

inline std::uint32_t label_value(const BitVector &label) {
    std::uint32_t v = 0;
    for (std::size_t p = 0; p < label.size(); ++p) {
        if (label.get(p)) v |= 1u << p;
    }
    return v;
}

inline BitVector value_label(std::uint32_t v, std::size_t w) {
    BitVector b(w);
    for (std::size_t p = 0; p < w; ++p) {
        if ((v >> p) & 1u) b.set(p);
    }
    return b;
}

/// Label i of K: zeros, then binary i (most significant first) in the last
/// ceil(log2 K) positions.
inline BitVector counting_target(std::size_t i, std::size_t K, std::size_t w) {
    std::size_t bits = K <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(K - 1));
    if (bits > w) throw Error(ErrorKind::BadParams, "labels too short for the count");
    BitVector b(w);
    for (std::size_t j = 0; j < bits; ++j) {
        if ((i >> (bits - 1 - j)) & 1) b.set(w - bits + j);
    }
    return b;
}

inline std::uint32_t apply_classical(const Circuit &c, std::uint32_t v) {
    for (const auto &g : c.gates) v = apply_classical_gate(g, v);
    return v;
}

/// pi with c(inputs[i]) = counting_target(pi(i)), if c induces a bijection
/// onto the targets.
inline std::optional<std::vector<std::size_t>> relabel_order(const Circuit &c, const std::vector<BitVector> &inputs) {
    std::size_t K = inputs.size();
    std::vector<std::size_t> pi(K);
    std::vector<bool> used(K);
    for (std::size_t i = 0; i < K; ++i) {
        std::uint32_t v = apply_classical(c, label_value(inputs[i]));
        std::size_t j = 0;
        while (j < K && label_value(counting_target(j, K, c.n)) != v) ++j;
        if (j == K || used[j]) return std::nullopt;
        used[j] = true;
        pi[i] = j;
    }
    return pi;
}

namespace detail {

// A tuple of K labels of w bits, packed.
struct LabelTuple {
    std::array<std::uint64_t, 8> words{};
    friend bool operator==(const LabelTuple &a, const LabelTuple &b) { return a.words == b.words; }
};

struct LabelTupleHash {
    std::size_t operator()(const LabelTuple &t) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto w : t.words) h = (h ^ w) * 0xff51afd7ed558ccdull + (h >> 29);
        return static_cast<std::size_t>(h);
    }
};

class RelabelSearch {
   public:
    RelabelSearch(std::size_t K, std::size_t w, std::vector<Gate> gates, bool as_set = false)
        : K_(K), w_(w), gates_(std::move(gates)), as_set_(as_set) {}

    // With as_set the tuple is kept sorted, so states are label sets and any
    // bijection onto the targets is accepted.
    LabelTuple pack(std::vector<std::uint32_t> vals) const {
        if (as_set_) std::sort(vals.begin(), vals.end());
        LabelTuple t;
        for (std::size_t i = 0; i < K_; ++i) {
            std::size_t bit = i * w_;
            t.words[bit / 64] |= static_cast<std::uint64_t>(vals[i]) << (bit % 64);
            if (bit % 64 + w_ > 64) t.words[bit / 64 + 1] |= static_cast<std::uint64_t>(vals[i]) >> (64 - bit % 64);
        }
        return t;
    }
    std::vector<std::uint32_t> unpack(const LabelTuple &t) const {
        std::vector<std::uint32_t> vals(K_);
        std::uint64_t mask = (std::uint64_t{1} << w_) - 1;
        for (std::size_t i = 0; i < K_; ++i) {
            std::size_t bit = i * w_;
            std::uint64_t v = t.words[bit / 64] >> (bit % 64);
            if (bit % 64 + w_ > 64) v |= t.words[bit / 64 + 1] << (64 - bit % 64);
            vals[i] = static_cast<std::uint32_t>(v & mask);
        }
        return vals;
    }
    LabelTuple step(const LabelTuple &t, const Gate &g) const {
        auto vals = unpack(t);
        for (auto &v : vals) v = apply_classical_gate(g, v);
        return pack(vals);
    }

    struct Node {
        LabelTuple parent;
        std::int32_t gate;  // -1 at the root
        std::uint32_t depth;
    };
    using Map = std::unordered_map<LabelTuple, Node, LabelTupleHash>;

    std::vector<Gate> path(const Map &m, LabelTuple t) const {
        std::vector<Gate> out;
        while (true) {
            const Node &node = m.at(t);
            if (node.gate < 0) break;
            out.push_back(gates_[static_cast<std::size_t>(node.gate)]);
            t = node.parent;
        }
        return out;  // from t back to the root
    }

    /// Shortest gate list taking `from` to `to`; lexicographically least
    /// among the shortest found in the meeting layer.
    std::optional<std::vector<Gate>> run(const LabelTuple &from, const LabelTuple &to, std::size_t max_gates,
                                         std::size_t visited_cap) {
        if (from == to) return std::vector<Gate>{};
        Map fwd, bwd;
        fwd.emplace(from, Node{from, -1, 0});
        bwd.emplace(to, Node{to, -1, 0});
        std::vector<LabelTuple> ffront{from}, bfront{to};
        std::size_t df = 0, db = 0;
        while (df + db < max_gates) {
            bool forward = ffront.size() <= bfront.size();
            Map &mine = forward ? fwd : bwd;
            Map &other = forward ? bwd : fwd;
            auto &front = forward ? ffront : bfront;
            std::size_t depth = (forward ? df : db) + 1;
            std::vector<LabelTuple> next;
            std::optional<std::vector<Gate>> best;
            bool store = fwd.size() + bwd.size() + front.size() * gates_.size() <= visited_cap;
            for (const auto &s : front) {
                for (std::size_t gi = 0; gi < gates_.size(); ++gi) {
                    LabelTuple t = step(s, gates_[gi]);
                    auto hit = other.find(t);
                    if (hit != other.end()) {
                        auto cand = join(forward, mine, s, gi, other, t);
                        if (!best || cand.size() < best->size() || (cand.size() == best->size() && cand < *best)) best = cand;
                    }
                    if (store && !mine.count(t)) {
                        mine.emplace(t, Node{s, static_cast<std::int32_t>(gi), static_cast<std::uint32_t>(depth)});
                        next.push_back(t);
                    }
                }
            }
            if (best) return best;
            if (!store) return deepen(forward, mine, front, other, max_gates - (df + db));
            front = std::move(next);
            (forward ? df : db) = depth;
            if (front.empty()) return std::nullopt;
        }
        return std::nullopt;
    }

   private:
    std::vector<Gate> join(bool forward, const Map &mine, const LabelTuple &s, std::size_t gi, const Map &other,
                           const LabelTuple &t) const {
        std::vector<Gate> a = path(mine, s);  // s back to my root
        std::vector<Gate> b = path(other, t);  // t back to the other root
        std::vector<Gate> out;
        if (forward) {
            out.assign(a.rbegin(), a.rend());
            out.push_back(gates_[gi]);
            out.insert(out.end(), b.begin(), b.end());
        } else {
            // gates are involutions, so the backward path read forwards
            // runs from the start side to `to`
            out.assign(b.rbegin(), b.rend());
            out.push_back(gates_[gi]);
            out.insert(out.end(), a.begin(), a.end());
        }
        return out;
    }

    // Iterative deepening from the stored frontier once the visited set is
    // full: same optimality, no further memory.
    std::optional<std::vector<Gate>> deepen(bool forward, const Map &mine, const std::vector<LabelTuple> &front,
                                            const Map &other, std::size_t budget) const {
        for (std::size_t extra = 1; extra <= budget; ++extra) {
            std::optional<std::vector<Gate>> best;
            for (const auto &s : front) {
                std::vector<Gate> mid;
                dfs(forward, mine, s, s, extra, other, mid, best);
            }
            if (best) return best;
        }
        return std::nullopt;
    }
    void dfs(bool forward, const Map &mine, const LabelTuple &root, const LabelTuple &s, std::size_t left,
             const Map &other, std::vector<Gate> &mid, std::optional<std::vector<Gate>> &best) const {
        if (left == 0) {
            if (!other.count(s)) return;
            std::vector<Gate> a = path(mine, root), b = path(other, s), out;
            if (forward) {
                out.assign(a.rbegin(), a.rend());
                out.insert(out.end(), mid.begin(), mid.end());
                out.insert(out.end(), b.begin(), b.end());
            } else {
                out.assign(b.rbegin(), b.rend());
                out.insert(out.end(), mid.rbegin(), mid.rend());
                out.insert(out.end(), a.begin(), a.end());
            }
            if (!best || out < *best) best = out;
            return;
        }
        for (std::size_t gi = 0; gi < gates_.size(); ++gi) {
            mid.push_back(gates_[gi]);
            dfs(forward, mine, root, step(s, gates_[gi]), left - 1, other, mid, best);
            mid.pop_back();
        }
    }

    std::size_t K_, w_;
    std::vector<Gate> gates_;
    bool as_set_;
};

}  // namespace detail

inline constexpr std::size_t kRelabelVisitedCap = std::size_t{1} << 24;

/// Minimum-gate circuit on w = label width bits taking inputs[i] to
/// counting_target(i), or with any_order to some counting_target(pi(i)).
/// Bidirectional breadth-first search; every gate in the set is an
/// involution, so the backward search uses the same moves.
inline Circuit synth_qc(const std::vector<BitVector> &inputs, std::size_t max_gates = 8, unsigned gate_set = 7,
                        bool any_order = false, std::size_t visited_cap = kRelabelVisitedCap) {
    if (inputs.empty()) throw Error(ErrorKind::BadParams, "no inputs");
    std::size_t w = inputs.front().size();
    std::size_t K = inputs.size();
    if (K > 64 || w > 8 || w == 0 || K * w > 512) throw Error(ErrorKind::BadParams, "need K <= 64 and 1 <= w <= 8");
    std::unordered_set<BitVector, BitVectorHash> distinct(inputs.begin(), inputs.end());
    if (distinct.size() != K) throw Error(ErrorKind::BadParams, "inputs are not distinct");
    std::vector<std::uint32_t> from, to;
    for (std::size_t i = 0; i < K; ++i) {
        if (inputs[i].size() != w) throw Error(ErrorKind::LengthMismatch, "inputs differ in width");
        from.push_back(label_value(inputs[i]));
        to.push_back(label_value(counting_target(i, K, w)));
    }
    detail::RelabelSearch search(K, w, classical_gates(w, gate_set), any_order);
    auto found = search.run(search.pack(from), search.pack(to), max_gates, visited_cap);
    if (!found) throw Error(ErrorKind::NotFound, "no circuit with at most " + std::to_string(max_gates) + " gates");
    Circuit c;
    c.n = w;
    for (const auto &g : *found) c.add(g.type, g.q[0], g.q[1], g.q[2]);
    if (!relabel_order(c, inputs)) throw Error(ErrorKind::ConstructionMismatch, "relabelling circuit check failed");
    if (!any_order) {
        for (std::size_t i = 0; i < K; ++i) {
            if (apply_classical(c, from[i]) != to[i]) throw Error(ErrorKind::ConstructionMismatch, "relabelling circuit check failed");
        }
    }
    return c;
}

}  // namespace unionstab
