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

#include "unionstab/gf2.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

using namespace unionstab;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64 &rng) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (rng() & 1) m[r].set(c);
        }
    }
    return m;
}

// All 2^rows subset sums, by plain recursion on the row index.
std::set<std::string> span_oracle(const BitMatrix &m) {
    std::set<std::string> out;
    std::uint64_t total = std::uint64_t{1} << m.rows();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        BitVector v(m.cols());
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if ((mask >> r) & 1) v ^= m[r];
        }
        out.insert(v.to_string());
    }
    return out;
}

}  // namespace

TEST(BitVector, string_round_trip_and_positions) {
    auto v = BitVector::from_string("1000001");
    EXPECT_TRUE(v.get(0));
    EXPECT_TRUE(v.get(6));
    EXPECT_EQ(v.weight(), 2u);
    EXPECT_EQ(v.to_string(), "1000001");
    EXPECT_EQ(BitVector::from_uint(4, 0b0011).to_string(), "1100");
    EXPECT_THROW(BitVector::from_string("10a"), Error);
}

TEST(BitVector, long_vectors_cross_word_boundaries) {
    BitVector a(130), b(130);
    a.set(63);
    a.set(64);
    a.set(129);
    b.set(64);
    EXPECT_EQ((a ^ b).weight(), 2u);
    EXPECT_TRUE(a.dot(b));
    EXPECT_EQ(a.slice(63, 2).to_string(), "11");
    EXPECT_EQ(BitVector::concat(a, b).size(), 260u);
    EXPECT_EQ(a.first_set(), 63u);
    EXPECT_THROW(a ^= BitVector(5), Error);
}

TEST(BitVector, lex_less_reads_left_to_right) {
    EXPECT_TRUE(lex_less(BitVector::from_string("0111"), BitVector::from_string("1000")));
    EXPECT_FALSE(lex_less(BitVector::from_string("1000"), BitVector::from_string("0111")));
}

TEST(Rref, zero_rows_sink_and_rank_matches_span) {
    auto m = BitMatrix::from_strings({"0000", "1100", "0110", "1010"});
    auto r = rref(m);
    EXPECT_EQ(r.rank, 2u);
    EXPECT_TRUE(r.reduced[2].is_zero());
    EXPECT_TRUE(r.reduced[3].is_zero());
    EXPECT_EQ(r.pivot_cols, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, random_rank_agrees_with_span_size) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto m = random_matrix(1 + rng() % 8, 1 + rng() % 10, rng);
        auto span = span_oracle(m);
        EXPECT_EQ(std::size_t{1} << rank(m), span.size());
    }
}

TEST(Kernel, basis_vectors_are_annihilated_and_complete) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t cols = 1 + rng() % 10;
        auto m = random_matrix(rng() % 8, cols, rng);
        auto k = kernel_basis(m);
        EXPECT_EQ(k.rows() + rank(m), cols);
        EXPECT_EQ(rank(k), k.rows());
        for (std::size_t i = 0; i < k.rows(); ++i) EXPECT_TRUE(m.apply(k[i]).is_zero());
    }
}

TEST(Solve, consistent_and_inconsistent_systems) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        auto m = random_matrix(1 + rng() % 6, 1 + rng() % 8, rng);
        BitVector x(m.cols());
        for (std::size_t i = 0; i < x.size(); ++i) x.set(i, rng() & 1);
        BitVector y = m.apply(x);
        auto got = solve(m, y);
        ASSERT_TRUE(got.has_value());
        EXPECT_EQ(m.apply(*got), y);
    }
    auto m = BitMatrix::from_strings({"11", "11"});
    EXPECT_FALSE(solve(m, BitVector::from_string("10")).has_value());
}

TEST(Enumeration, gray_order_visits_each_word_once) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        auto m = random_matrix(1 + rng() % 7, 1 + rng() % 12, rng);
        std::multiset<std::string> seen;
        BitVector prev;
        bool first = true;
        bool one_row_steps = true;
        for_each_word(m, kDefaultEnumerationCap, [&](const BitVector &w) {
            if (!first && rank(BitMatrix(m.cols(), {w ^ prev})) != 1) one_row_steps = false;
            prev = w;
            first = false;
            seen.insert(w.to_string());
        });
        auto span = span_oracle(m);
        EXPECT_EQ(seen.size(), span.size());
        EXPECT_EQ(std::set<std::string>(seen.begin(), seen.end()), span);
        EXPECT_TRUE(one_row_steps);
    }
}

TEST(Enumeration, cap_is_enforced) {
    BitMatrix m = BitMatrix::identity(20);
    EXPECT_THROW(enumerate_words(m, 1000), Error);
}

TEST(ReduceModulo, lexicographically_least_coset_member) {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 100; ++trial) {
        auto m = random_matrix(1 + rng() % 5, 1 + rng() % 9, rng);
        auto r = rref(m);
        BitVector v(m.cols());
        for (std::size_t i = 0; i < v.size(); ++i) v.set(i, rng() & 1);
        BitVector rep = reduce_modulo(r, v);
        for (const auto &w : enumerate_words(m)) {
            BitVector member = v ^ w;
            EXPECT_EQ(reduce_modulo(r, member), rep);
            EXPECT_FALSE(lex_less(member, rep));
        }
    }
}

TEST(RowSpaces, containment_and_equality) {
    auto a = BitMatrix::from_strings({"1100", "0011"});
    auto b = BitMatrix::from_strings({"1111"});
    EXPECT_TRUE(row_space_contains(a, b));
    EXPECT_FALSE(row_space_contains(b, a));
    EXPECT_TRUE(row_spaces_equal(a, BitMatrix::from_strings({"1111", "0011"})));
    EXPECT_EQ(independent_rows(BitMatrix::from_strings({"1100", "1100", "0011", "1111"})).rows(), 2u);
}

TEST(MatrixIo, round_trip_and_parse_errors) {
    auto m = BitMatrix::from_strings({"101", "011"});
    std::stringstream ss;
    write_matrix(ss, m);
    EXPECT_EQ(ss.str(), "2 3\n101\n011\n");
    auto back = read_matrix(ss);
    EXPECT_EQ(back[0], m[0]);
    EXPECT_EQ(back[1], m[1]);
    std::stringstream bad("2 3\n101\n");
    EXPECT_THROW(read_matrix(bad), Error);
    std::stringstream comments("# header\n1 2\n  10  \n");
    EXPECT_EQ(read_matrix(comments)[0].to_string(), "10");
}
