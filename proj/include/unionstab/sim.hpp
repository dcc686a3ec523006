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

// Dense state vectors for small n. Qubit 0 is the most significant bit of
// the basis index, so |q0 q1 ... q(n-1)> reads left to right.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "unionstab/circuit.hpp"
#include "unionstab/error.hpp"
#include "unionstab/pauli.hpp"
#include "unionstab/union_code.hpp"

namespace unionstab {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kMaxSimQubits = 12;

struct StateVector {
    std::size_t n = 0;
    std::vector<Amplitude> amp;

    static StateVector basis(std::size_t n, std::size_t index) {
        if (n > kMaxSimQubits) throw Error(ErrorKind::TooManyQubits, std::to_string(n) + " qubits");
        StateVector s{n, std::vector<Amplitude>(std::size_t{1} << n)};
        s.amp.at(index) = 1.0;
        return s;
    }
    std::size_t dim() const { return amp.size(); }
    std::size_t mask(std::size_t q) const { return std::size_t{1} << (n - 1 - q); }
    double norm() const {
        double s = 0;
        for (const auto &a : amp) s += std::norm(a);
        return std::sqrt(s);
    }
};

inline Amplitude inner(const StateVector &a, const StateVector &b) {
    Amplitude s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a.amp[i]) * b.amp[i];
    return s;
}

inline void apply_gate(const Gate &g, StateVector &s) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (g.type) {
        case GateType::H: {
            std::size_t m = s.mask(g.q[0]);
            for (std::size_t i = 0; i < s.dim(); ++i) {
                if (i & m) continue;
                Amplitude a = s.amp[i], b = s.amp[i | m];
                s.amp[i] = r * (a + b);
                s.amp[i | m] = r * (a - b);
            }
            break;
        }
        case GateType::P: {
            std::size_t m = s.mask(g.q[0]);
            for (std::size_t i = 0; i < s.dim(); ++i) {
                if (i & m) s.amp[i] *= Amplitude(0, 1);
            }
            break;
        }
        case GateType::Z: {
            std::size_t m = s.mask(g.q[0]);
            for (std::size_t i = 0; i < s.dim(); ++i) {
                if (i & m) s.amp[i] = -s.amp[i];
            }
            break;
        }
        case GateType::X: {
            std::size_t m = s.mask(g.q[0]);
            for (std::size_t i = 0; i < s.dim(); ++i) {
                if (!(i & m)) std::swap(s.amp[i], s.amp[i | m]);
            }
            break;
        }
        case GateType::CZ: {
            std::size_t m = s.mask(g.q[0]) | s.mask(g.q[1]);
            for (std::size_t i = 0; i < s.dim(); ++i) {
                if ((i & m) == m) s.amp[i] = -s.amp[i];
            }
            break;
        }
        case GateType::CNOT:
        case GateType::CCX: {
            std::size_t controls = s.mask(g.q[0]);
            std::size_t target = s.mask(g.q[1]);
            if (g.type == GateType::CCX) {
                controls |= s.mask(g.q[1]);
                target = s.mask(g.q[2]);
            }
            for (std::size_t i = 0; i < s.dim(); ++i) {
                if ((i & controls) == controls && !(i & target)) std::swap(s.amp[i], s.amp[i | target]);
            }
            break;
        }
    }
}

/// Applies the circuit to qubits offset..offset+c.n-1 of the state.
inline StateVector simulate(const Circuit &c, StateVector s, std::size_t offset = 0) {
    if (s.n > kMaxSimQubits) throw Error(ErrorKind::TooManyQubits, std::to_string(s.n) + " qubits");
    if (offset + c.n > s.n) throw Error(ErrorKind::LengthMismatch, "circuit wider than the state");
    for (Gate g : c.gates) {
        for (std::size_t i = 0; i < g.arity(); ++i) g.q[i] = static_cast<std::uint16_t>(g.q[i] + offset);
        apply_gate(g, s);
    }
    return s;
}

/// p|psi> with Y = iXZ and the sign of p.
inline StateVector apply_pauli(const PauliVector &p, StateVector s) {
    if (p.n() != s.n) throw Error(ErrorKind::LengthMismatch, "operator and state differ in size");
    std::size_t xm = 0, zm = 0, ny = 0;
    for (std::size_t q = 0; q < p.n(); ++q) {
        if (p.x_bit(q)) xm |= s.mask(q);
        if (p.z_bit(q)) zm |= s.mask(q);
        if (p.x_bit(q) && p.z_bit(q)) ++ny;
    }
    static const Amplitude kIPow[4] = {1.0, Amplitude(0, 1), -1.0, Amplitude(0, -1)};
    Amplitude phase = kIPow[ny % 4] * (p.negative() ? -1.0 : 1.0);
    std::vector<Amplitude> out(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        // XZ|i> = (-1)^{z.i} |i ^ x>
        double sign = (std::popcount(i & zm) % 2) ? -1.0 : 1.0;
        out[i ^ xm] = phase * sign * s.amp[i];
    }
    s.amp = std::move(out);
    return s;
}

/// Dense matrix of a Pauli operator, row-major, for test oracles.
inline std::vector<Amplitude> pauli_matrix(const PauliVector &p) {
    std::size_t dim = std::size_t{1} << p.n();
    std::vector<Amplitude> m(dim * dim);
    for (std::size_t col = 0; col < dim; ++col) {
        StateVector e = apply_pauli(p, StateVector::basis(p.n(), col));
        for (std::size_t row = 0; row < dim; ++row) m[row * dim + col] = e.amp[row];
    }
    return m;
}

// ---------------------------------------------------------------------------
// Code bases.

/// Orthonormal basis t_i|c_j>, i major: |c_j> from projecting computational
/// states onto the stabilizer space and orthonormalizing in index order.
inline std::vector<StateVector> code_basis(const UnionStabilizerCode &code, std::size_t max_qubits = 10) {
    std::size_t n = code.n();
    if (n > max_qubits) throw Error(ErrorKind::TooManyQubits, std::to_string(n) + " qubits");
    const StabilizerCode &base = code.base();
    std::size_t want = std::size_t{1} << base.k;
    std::vector<StateVector> cs;
    for (std::size_t idx = 0; idx < (std::size_t{1} << n) && cs.size() < want; ++idx) {
        StateVector v = StateVector::basis(n, idx);
        for (const auto &s : base.stab) {
            StateVector sv = apply_pauli(s, v);
            for (std::size_t i = 0; i < v.dim(); ++i) v.amp[i] = 0.5 * (v.amp[i] + sv.amp[i]);
        }
        for (const auto &c : cs) {
            Amplitude proj = inner(c, v);
            for (std::size_t i = 0; i < v.dim(); ++i) v.amp[i] -= proj * c.amp[i];
        }
        double nv = v.norm();
        if (nv < 1e-6) continue;
        for (auto &a : v.amp) a /= nv;
        // fix the global phase: first significant amplitude real positive
        auto lead = std::find_if(v.amp.begin(), v.amp.end(), [](const Amplitude &a) { return std::abs(a) > 1e-9; });
        Amplitude ph = *lead / std::abs(*lead);
        for (auto &a : v.amp) a /= ph;
        cs.push_back(std::move(v));
    }
    std::vector<StateVector> out;
    for (std::uint64_t i = 0; i < code.K(); ++i) {
        PauliVector t = code.translation(i);
        for (const auto &c : cs) out.push_back(apply_pauli(t, c));
    }
    return out;
}

struct KlReport {
    bool ok = true;
    std::size_t errors_checked = 0;
    double worst_deviation = 0;
    std::vector<std::string> violations;  // operator strings
};

/// Knill-Laflamme: for each Pauli E of weight 1..d-1, <a|E|b> = lambda_E
/// delta_ab within tol.
inline KlReport kl_verify(const std::vector<StateVector> &states, std::size_t d, double tol = 1e-8) {
    KlReport rep;
    if (states.empty() || d < 2) return rep;
    std::size_t n = states.front().n;
    std::size_t max_w = d - 1;
    std::vector<std::size_t> pos;
    // every support of size w, every assignment of X/Y/Z
    auto visit = [&](const PauliVector &e) {
        ++rep.errors_checked;
        std::vector<StateVector> es;
        for (const auto &s : states) es.push_back(apply_pauli(e, s));
        Amplitude lambda = inner(states[0], es[0]);
        double dev = 0;
        for (std::size_t a = 0; a < states.size(); ++a) {
            for (std::size_t b = 0; b < states.size(); ++b) {
                Amplitude m = inner(states[a], es[b]);
                Amplitude expect = a == b ? lambda : Amplitude(0);
                dev = std::max(dev, std::abs(m - expect));
            }
        }
        rep.worst_deviation = std::max(rep.worst_deviation, dev);
        if (dev > tol) {
            rep.ok = false;
            rep.violations.push_back(e.to_string());
        }
    };
    for (std::size_t w = 1; w <= max_w && w <= n; ++w) {
        std::vector<std::size_t> support(w);
        for (std::size_t i = 0; i < w; ++i) support[i] = i;
        while (true) {
            std::size_t assignments = 1;
            for (std::size_t i = 0; i < w; ++i) assignments *= 3;
            for (std::size_t a = 0; a < assignments; ++a) {
                PauliVector e(n);
                std::size_t code = a;
                for (std::size_t i = 0; i < w; ++i, code /= 3) {
                    std::size_t q = support[i];
                    switch (code % 3) {
                        case 0: e.x().set(q); break;
                        case 1: e.x().set(q); e.z().set(q); break;
                        default: e.z().set(q); break;
                    }
                }
                visit(e);
            }
            std::size_t i = w;
            while (i-- > 0 && support[i] == n - w + i) {}
            if (i == static_cast<std::size_t>(-1)) break;
            ++support[i];
            for (std::size_t j = i + 1; j < w; ++j) support[j] = support[j - 1] + 1;
        }
    }
    return rep;
}

struct EncoderReport {
    bool ok = true;
    double worst_deviation = 0;  // 1 - overlap with the expected subspace
    std::vector<std::string> failures;
    std::vector<std::size_t> order;  // translation i lands on |bin(order[i])>
};

/// Runs q1 then qc (on the last qc.n of the first n-k qubits) on every
/// t_i|c_j> and checks that the first n-k qubits read |0...0>|bin(pi(i))>,
/// pi being the bijection qc induces on the canonical labels.
inline EncoderReport full_encoder_check(const UnionStabilizerCode &code, const Circuit &q1, const Circuit &qc,
                                        double tol = 1e-8) {
    EncoderReport rep;
    auto states = code_basis(code);
    std::size_t n = code.n();
    std::size_t r = code.base().stab.size();
    std::size_t per = std::size_t{1} << code.k();
    if (qc.n > r) throw Error(ErrorKind::LengthMismatch, "relabelling circuit wider than the label register");
    std::vector<BitVector> labels;
    for (const auto &l : canonicalize_translations(code, q1)) labels.push_back(l.slice(r - qc.n, qc.n));
    auto order = relabel_order(qc, labels);
    if (!order) {
        rep.ok = false;
        rep.failures.push_back("relabelling circuit is not a bijection onto the counting labels");
        return rep;
    }
    rep.order = *order;
    for (std::size_t s = 0; s < states.size(); ++s) {
        std::size_t i = s / per;
        StateVector out = simulate(q1, states[s]);
        out = simulate(qc, out, r - qc.n);
        BitVector label(r);
        BitVector target = counting_target(rep.order[i], static_cast<std::size_t>(code.K()), qc.n);
        for (std::size_t p = 0; p < qc.n; ++p) label.set(r - qc.n + p, target.get(p));
        std::size_t prefix = 0;
        for (std::size_t p = 0; p < r; ++p) {
            if (label.get(p)) prefix |= std::size_t{1} << (n - 1 - p);
        }
        double mass = 0;
        std::size_t low = std::size_t{1} << (n - r);
        for (std::size_t tail = 0; tail < low; ++tail) mass += std::norm(out.amp[prefix | tail]);
        double dev = 1.0 - mass;
        rep.worst_deviation = std::max(rep.worst_deviation, dev);
        if (dev > tol) {
            rep.ok = false;
            rep.failures.push_back("state " + std::to_string(s) + " (translation " + std::to_string(i) + ")");
        }
    }
    return rep;
}

}  // namespace unionstab
