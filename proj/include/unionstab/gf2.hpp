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

// Dense bit-packed GF(2) vectors and matrices.
//
// Bit order: position 0 is the leftmost printed bit. Packed words are
// little-endian within the vector (position i lives in word i/64, bit i%64).

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "unionstab/error.hpp"

namespace unionstab {

class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}

    static BitVector from_string(std::string_view bits) {
        BitVector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] == '1') {
                v.set(i);
            } else if (bits[i] != '0') {
                throw Error(ErrorKind::Parse, "bit string contains '" + std::string(1, bits[i]) + "'");
            }
        }
        return v;
    }

    /// Low `length` bits of `value`, position 0 = least significant bit.
    static BitVector from_uint(std::size_t length, std::uint64_t value) {
        BitVector v(length);
        if (length > 0) {
            v.words_[0] = length >= 64 ? value : (value & ((std::uint64_t{1} << length) - 1));
        }
        return v;
    }

    std::size_t size() const { return length_; }
    std::size_t num_words() const { return words_.size(); }
    const std::uint64_t *data() const { return words_.data(); }
    std::uint64_t *data() { return words_.data(); }
    std::uint64_t word(std::size_t w) const { return words_[w]; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool value = true) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector &operator^=(const BitVector &other) {
        check_same_length(other);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] ^= other.words_[w];
        }
        return *this;
    }
    BitVector &operator&=(const BitVector &other) {
        check_same_length(other);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] &= other.words_[w];
        }
        return *this;
    }
    BitVector &operator|=(const BitVector &other) {
        check_same_length(other);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] |= other.words_[w];
        }
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector &b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector &b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector &b) { return a |= b; }

    std::size_t weight() const {
        std::size_t total = 0;
        for (auto w : words_) {
            total += static_cast<std::size_t>(std::popcount(w));
        }
        return total;
    }
    bool is_zero() const {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }
    bool dot(const BitVector &other) const {
        check_same_length(other);
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            acc ^= words_[w] & other.words_[w];
        }
        return std::popcount(acc) & 1;
    }
    /// Index of the first set position, or size() when zero.
    std::size_t first_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] != 0) {
                return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
            }
        }
        return length_;
    }

    /// Bits [begin, begin + count) as a new vector.
    BitVector slice(std::size_t begin, std::size_t count) const {
        BitVector out(count);
        for (std::size_t i = 0; i < count; ++i) {
            if (get(begin + i)) {
                out.set(i);
            }
        }
        return out;
    }
    static BitVector concat(const BitVector &a, const BitVector &b) {
        BitVector out(a.size() + b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a.get(i)) out.set(i);
        }
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b.get(i)) out.set(a.size() + i);
        }
        return out;
    }

    std::string to_string() const {
        std::string s(length_, '0');
        for (std::size_t i = 0; i < length_; ++i) {
            if (get(i)) s[i] = '1';
        }
        return s;
    }

    friend bool operator==(const BitVector &a, const BitVector &b) {
        return a.length_ == b.length_ && a.words_ == b.words_;
    }

    /// Lexicographic order reading position 0 first (the printed order).
    friend bool lex_less(const BitVector &a, const BitVector &b) {
        std::size_t common = std::min(a.words_.size(), b.words_.size());
        for (std::size_t w = 0; w < common; ++w) {
            std::uint64_t diff = a.words_[w] ^ b.words_[w];
            if (diff != 0) {
                return (b.words_[w] >> std::countr_zero(diff)) & 1;
            }
        }
        return a.length_ < b.length_;
    }

    std::size_t hash() const {
        std::size_t h = length_ * 0x9E3779B97F4A7C15ull;
        for (auto w : words_) {
            h ^= std::hash<std::uint64_t>{}(w) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        }
        return h;
    }

   private:
    void check_same_length(const BitVector &other) const {
        if (other.length_ != length_) {
            throw Error(ErrorKind::LengthMismatch,
                        "bit vectors of length " + std::to_string(length_) + " and " + std::to_string(other.length_));
        }
    }

    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitVectorHash {
    std::size_t operator()(const BitVector &v) const { return v.hash(); }
};

class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}
    BitMatrix(std::size_t cols, std::vector<BitVector> rows) : cols_(cols), rows_(std::move(rows)) {
        for (const auto &r : rows_) {
            if (r.size() != cols_) {
                throw Error(ErrorKind::LengthMismatch, "matrix row length differs from column count");
            }
        }
    }

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.rows_[i].set(i);
        return m;
    }
    static BitMatrix from_strings(const std::vector<std::string> &rows) {
        if (rows.empty()) return {};
        BitMatrix m;
        m.cols_ = rows.front().size();
        for (const auto &r : rows) {
            m.push_back(BitVector::from_string(r));
        }
        return m;
    }

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_.empty(); }

    const BitVector &operator[](std::size_t i) const { return rows_[i]; }
    BitVector &operator[](std::size_t i) { return rows_[i]; }
    const std::vector<BitVector> &row_list() const { return rows_; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }

    void push_back(BitVector row) {
        if (rows_.empty() && cols_ == 0) cols_ = row.size();
        if (row.size() != cols_) {
            throw Error(ErrorKind::LengthMismatch, "row of length " + std::to_string(row.size()) +
                                                       " appended to matrix with " + std::to_string(cols_) + " columns");
        }
        rows_.push_back(std::move(row));
    }
    void set_cols(std::size_t cols) {
        if (!rows_.empty() && cols != cols_) throw Error(ErrorKind::LengthMismatch, "cannot resize nonempty matrix");
        cols_ = cols;
    }

    BitMatrix transpose() const {
        BitMatrix t(cols_, rows_.size());
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                if (rows_[r].get(c)) t.rows_[c].set(r);
            }
        }
        return t;
    }

    /// this · vᵀ
    BitVector apply(const BitVector &v) const {
        BitVector out(rows_.size());
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (rows_[r].dot(v)) out.set(r);
        }
        return out;
    }
    /// vᵀ · this (linear combination of rows selected by v).
    BitVector combine(const BitVector &v) const {
        BitVector out(cols_);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (v.get(r)) out ^= rows_[r];
        }
        return out;
    }
    BitMatrix multiply(const BitMatrix &rhs) const {
        BitMatrix out(rows_.size(), rhs.cols());
        for (std::size_t r = 0; r < rows_.size(); ++r) out.rows_[r] = rhs.combine(rows_[r]);
        return out;
    }
    static BitMatrix stack(const BitMatrix &top, const BitMatrix &bottom) {
        BitMatrix out = top;
        if (out.rows_.empty()) out.cols_ = bottom.cols_;
        for (const auto &r : bottom.rows_) out.push_back(r);
        return out;
    }

    friend bool operator==(const BitMatrix &a, const BitMatrix &b) { return a.cols_ == b.cols_ && a.rows_ == b.rows_; }

   private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

struct RrefResult {
    BitMatrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

/// Reduced row echelon form. Zero rows are kept, moved to the bottom.
inline RrefResult rref(const BitMatrix &m) {
    RrefResult out{m, {}, 0};
    BitMatrix &a = out.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && !a[pivot].get(col)) ++pivot;
        if (pivot == a.rows()) continue;
        std::swap(a[row], a[pivot]);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r != row && a[r].get(col)) a[r] ^= a[row];
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.rank = row;
    return out;
}

inline std::size_t rank(const BitMatrix &m) { return rref(m).rank; }

/// Basis of {x : m·xᵀ = 0}, one row per free column in increasing order.
inline BitMatrix kernel_basis(const BitMatrix &m) {
    auto r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivot_cols) is_pivot[p] = true;
    BitMatrix basis(0, m.cols());
    basis.set_cols(m.cols());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector v(m.cols());
        v.set(f);
        for (std::size_t i = 0; i < r.rank; ++i) {
            if (r.reduced[i].get(f)) v.set(r.pivot_cols[i]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some x with m·xᵀ = y, free variables zero; nullopt when inconsistent.
inline std::optional<BitVector> solve(const BitMatrix &m, const BitVector &y) {
    if (y.size() != m.rows()) {
        throw Error(ErrorKind::LengthMismatch, "right-hand side length differs from row count");
    }
    BitMatrix aug(0, m.cols() + 1);
    aug.set_cols(m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BitVector row = BitVector::concat(m[r], BitVector(1));
        if (y.get(r)) row.set(m.cols());
        aug.push_back(std::move(row));
    }
    auto red = rref(aug);
    BitVector x(m.cols());
    for (std::size_t i = 0; i < red.rank; ++i) {
        if (red.pivot_cols[i] == m.cols()) return std::nullopt;
        if (red.reduced[i].get(m.cols())) x.set(red.pivot_cols[i]);
    }
    return x;
}

inline BitVector syndrome(const BitMatrix &h, const BitVector &v) {
    if (v.size() != h.cols()) {
        throw Error(ErrorKind::LengthMismatch, "vector length differs from parity-check width");
    }
    return h.apply(v);
}

/// The linearly independent rows of g, taken greedily in row order.
inline BitMatrix independent_rows(const BitMatrix &g) {
    BitMatrix out(0, g.cols());
    out.set_cols(g.cols());
    std::vector<BitVector> echelon;
    std::vector<std::size_t> leads;
    for (std::size_t r = 0; r < g.rows(); ++r) {
        BitVector v = g[r];
        for (std::size_t i = 0; i < echelon.size(); ++i) {
            if (v.get(leads[i])) v ^= echelon[i];
        }
        std::size_t lead = v.first_set();
        if (lead == v.size()) continue;
        for (std::size_t i = 0; i < echelon.size(); ++i) {
            if (echelon[i].get(lead)) echelon[i] ^= v;
        }
        echelon.push_back(v);
        leads.push_back(lead);
        out.push_back(g[r]);
    }
    return out;
}

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 26;

/// Visits every codeword of the row space exactly once in Gray-code order of
/// the message: word i differs from word i-1 by independent row ctz(i).
template <typename Visitor>
void for_each_word(const BitMatrix &g, std::uint64_t cap, Visitor &&visit) {
    BitMatrix basis = independent_rows(g);
    if (basis.rows() >= 63 || (std::uint64_t{1} << basis.rows()) > cap) {
        throw Error(ErrorKind::CapExceeded, "2^" + std::to_string(basis.rows()) + " codewords exceed cap " +
                                                std::to_string(cap));
    }
    BitVector word(g.cols());
    visit(static_cast<const BitVector &>(word));
    std::uint64_t total = std::uint64_t{1} << basis.rows();
    for (std::uint64_t i = 1; i < total; ++i) {
        word ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
        visit(static_cast<const BitVector &>(word));
    }
}

inline std::vector<BitVector> enumerate_words(const BitMatrix &g, std::uint64_t cap = kDefaultEnumerationCap) {
    std::vector<BitVector> out;
    for_each_word(g, cap, [&](const BitVector &w) { out.push_back(w); });
    return out;
}

/// Row space of `inner` contained in the row space of `outer`.
inline bool row_space_contains(const BitMatrix &outer, const BitMatrix &inner) {
    if (inner.empty()) return true;
    std::size_t r = rank(outer);
    return rank(BitMatrix::stack(outer, inner)) == r;
}

inline bool row_spaces_equal(const BitMatrix &a, const BitMatrix &b) {
    return rank(a) == rank(b) && row_space_contains(a, b);
}

/// Canonical coset representative of v modulo the row space whose RREF is
/// given: pivot positions cleared, which is the lexicographically least
/// element of the coset.
inline BitVector reduce_modulo(const RrefResult &space, BitVector v) {
    for (std::size_t i = 0; i < space.rank; ++i) {
        if (v.get(space.pivot_cols[i])) v ^= space.reduced[i];
    }
    return v;
}

// Text format: "rows cols" then one 0/1 string per row; '#' lines ignored.

inline bool next_content_line(std::istream &in, std::string &line) {
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        return true;
    }
    return false;
}

inline BitMatrix read_matrix(std::istream &in) {
    std::string line;
    if (!next_content_line(in, line)) throw Error(ErrorKind::Parse, "missing matrix header");
    std::istringstream header(line);
    std::size_t rows = 0, cols = 0;
    if (!(header >> rows >> cols)) throw Error(ErrorKind::Parse, "bad matrix header '" + line + "'");
    BitMatrix m(0, cols);
    m.set_cols(cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!next_content_line(in, line)) throw Error(ErrorKind::Parse, "matrix truncated");
        if (line.size() != cols) throw Error(ErrorKind::Parse, "row '" + line + "' has wrong length");
        m.push_back(BitVector::from_string(line));
    }
    return m;
}

inline void write_matrix(std::ostream &out, const BitMatrix &m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) out << m[r].to_string() << '\n';
}

}  // namespace unionstab
