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

// Pauli operators as binary pairs (x|z) with a +-1 sign. Qubit 1 is the
// leftmost symbol; I=(0|0), X=(1|0), Y=(1|1), Z=(0|1).

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unionstab/error.hpp"
#include "unionstab/gf2.hpp"

namespace unionstab {

class PauliVector {
   public:
    PauliVector() = default;
    explicit PauliVector(std::size_t n) : x_(n), z_(n) {}
    PauliVector(BitVector x, BitVector z, bool negative = false) : x_(std::move(x)), z_(std::move(z)), neg_(negative) {
        if (x_.size() != z_.size()) throw Error(ErrorKind::LengthMismatch, "x and z parts differ in length");
    }

    static PauliVector parse(std::string_view s) {
        bool negative = false;
        if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
            negative = s.front() == '-';
            s.remove_prefix(1);
        }
        if (s.empty()) throw Error(ErrorKind::BadSymbol, "empty Pauli string");
        PauliVector p(s.size());
        p.neg_ = negative;
        for (std::size_t i = 0; i < s.size(); ++i) {
            switch (s[i]) {
                case 'I': break;
                case 'X': p.x_.set(i); break;
                case 'Z': p.z_.set(i); break;
                case 'Y':
                    p.x_.set(i);
                    p.z_.set(i);
                    break;
                default: throw Error(ErrorKind::BadSymbol, "symbol '" + std::string(1, s[i]) + "' in Pauli string");
            }
        }
        return p;
    }
    /// "(x-bits|z-bits)"
    static PauliVector from_binary(std::string_view s) {
        if (s.size() < 3 || s.front() != '(' || s.back() != ')') throw Error(ErrorKind::Parse, "expected (x|z)");
        auto bar = s.find('|');
        if (bar == std::string_view::npos) throw Error(ErrorKind::Parse, "expected (x|z)");
        return PauliVector(BitVector::from_string(s.substr(1, bar - 1)),
                           BitVector::from_string(s.substr(bar + 1, s.size() - bar - 2)));
    }
    static PauliVector from_symplectic(const BitVector &xz) {
        std::size_t n = xz.size() / 2;
        return PauliVector(xz.slice(0, n), xz.slice(n, n));
    }

    std::size_t n() const { return x_.size(); }
    const BitVector &x() const { return x_; }
    const BitVector &z() const { return z_; }
    BitVector &x() { return x_; }
    BitVector &z() { return z_; }
    bool negative() const { return neg_; }
    void set_negative(bool v) { neg_ = v; }
    void flip_sign() { neg_ = !neg_; }

    bool x_bit(std::size_t i) const { return x_.get(i); }
    bool z_bit(std::size_t i) const { return z_.get(i); }

    bool is_identity() const { return x_.is_zero() && z_.is_zero(); }
    /// (x|z) as one vector of length 2n.
    BitVector symplectic() const { return BitVector::concat(x_, z_); }

    std::string to_string(bool with_sign = false) const {
        std::string s;
        if (with_sign) s += neg_ ? '-' : '+';
        for (std::size_t i = 0; i < n(); ++i) {
            bool a = x_.get(i), b = z_.get(i);
            s += a ? (b ? 'Y' : 'X') : (b ? 'Z' : 'I');
        }
        return s;
    }
    std::string to_binary() const { return "(" + x_.to_string() + "|" + z_.to_string() + ")"; }

    /// Binary sum; the sign is dropped (phases of products are not tracked).
    PauliVector &operator+=(const PauliVector &o) {
        x_ ^= o.x_;
        z_ ^= o.z_;
        neg_ = false;
        return *this;
    }
    friend PauliVector operator+(PauliVector a, const PauliVector &b) { return a += b; }

    friend bool operator==(const PauliVector &a, const PauliVector &b) {
        return a.x_ == b.x_ && a.z_ == b.z_ && a.neg_ == b.neg_;
    }
    /// Equality of the binary parts only.
    bool same_operator(const PauliVector &o) const { return x_ == o.x_ && z_ == o.z_; }

   private:
    BitVector x_, z_;
    bool neg_ = false;
};

inline PauliVector pauli_parse(std::string_view s) { return PauliVector::parse(s); }

/// a.d + b.c mod 2 for p = (a|b), q = (c|d); 0 iff p and q commute.
inline bool symplectic_ip(const PauliVector &p, const PauliVector &q) {
    if (p.n() != q.n()) throw Error(ErrorKind::LengthMismatch, "symplectic product of different lengths");
    return p.x().dot(q.z()) ^ p.z().dot(q.x());
}

inline std::size_t pauli_weight(const PauliVector &p) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < p.x().num_words(); ++i) w += static_cast<std::size_t>(std::popcount(p.x().word(i) | p.z().word(i)));
    return w;
}

struct WeightIdentity {
    std::size_t lhs;
    std::size_t rhs;
};

/// wgt(p) against (wgt(x) + wgt(z) + wgt(x + z)) / 2.
inline WeightIdentity weight_identity(const PauliVector &p) {
    BitVector sum = p.x();
    sum ^= p.z();
    std::size_t twice = p.x().weight() + p.z().weight() + sum.weight();
    return {pauli_weight(p), twice / 2};
}

// GF(4) = {0, 1, w, w^2} coded 0, 1, 2, 3 with w^2 = w + 1. X -> 1,
// Z -> w, Y -> w^2.
enum class GF4 : std::uint8_t { Zero = 0, One = 1, Omega = 2, OmegaSq = 3 };

inline GF4 gf4_add(GF4 a, GF4 b) { return static_cast<GF4>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b)); }

inline GF4 gf4_mul(GF4 a, GF4 b) {
    if (a == GF4::Zero || b == GF4::Zero) return GF4::Zero;
    // nonzero elements as powers of w: 1 = w^0, w = w^1, w^2
    auto log = [](GF4 v) { return v == GF4::One ? 0 : (v == GF4::Omega ? 1 : 2); };
    static constexpr GF4 kPow[3] = {GF4::One, GF4::Omega, GF4::OmegaSq};
    return kPow[(log(a) + log(b)) % 3];
}

inline std::vector<GF4> gf4_convert(const PauliVector &p) {
    std::vector<GF4> out(p.n());
    for (std::size_t i = 0; i < p.n(); ++i) {
        bool a = p.x_bit(i), b = p.z_bit(i);
        out[i] = a ? (b ? GF4::OmegaSq : GF4::One) : (b ? GF4::Omega : GF4::Zero);
    }
    return out;
}

inline PauliVector gf4_to_pauli(const std::vector<GF4> &v) {
    PauliVector p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == GF4::One || v[i] == GF4::OmegaSq) p.x().set(i);
        if (v[i] == GF4::Omega || v[i] == GF4::OmegaSq) p.z().set(i);
    }
    return p;
}

inline std::string gf4_to_string(const std::vector<GF4> &v) {
    static constexpr char kSym[4] = {'0', '1', 'w', 'W'};
    std::string s;
    for (auto g : v) s += kSym[static_cast<std::uint8_t>(g)];
    return s;
}

/// Binary matrix whose rows are the (x|z) vectors of the operators.
inline BitMatrix symplectic_matrix(const std::vector<PauliVector> &ops, std::size_t n) {
    BitMatrix m(0, 2 * n);
    m.set_cols(2 * n);
    for (const auto &p : ops) {
        if (p.n() != n) throw Error(ErrorKind::LengthMismatch, "operator length differs");
        m.push_back(p.symplectic());
    }
    return m;
}

/// Symplectic syndrome: bit i = ip(p, ops[i]).
inline BitVector symplectic_syndrome(const std::vector<PauliVector> &ops, const PauliVector &p) {
    BitVector s(ops.size());
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (symplectic_ip(p, ops[i])) s.set(i);
    }
    return s;
}

}  // namespace unionstab
