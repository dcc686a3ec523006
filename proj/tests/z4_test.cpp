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

#include "unionstab/z4.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "unionstab/classical.hpp"

using namespace unionstab;

namespace {

// Every word of a Z4 code by brute force over the generator coefficients.
std::set<Z4Vector> words_oracle(const Z4Code &c) {
    std::set<Z4Vector> out;
    std::vector<std::uint8_t> coeff(c.generator.size(), 0);
    while (true) {
        Z4Vector w(c.length, 0);
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            for (std::size_t j = 0; j < c.length; ++j) w[j] = static_cast<std::uint8_t>((w[j] + coeff[i] * c.generator[i][j]) % 4);
        }
        out.insert(w);
        std::size_t i = 0;
        while (i < coeff.size() && ++coeff[i] == c.order(i)) coeff[i++] = 0;
        if (i == coeff.size()) break;
    }
    return out;
}

}  // namespace

TEST(GaloisRing, teichmuller_set_is_closed_and_cyclic) {
    for (int m : {3, 5}) {
        auto ring = gr4_build(m);
        const auto &t = ring.teichmuller();
        ASSERT_EQ(t.size(), std::size_t{1} << m);
        std::set<std::uint64_t> residues;
        for (const auto &e : t) residues.insert(GaloisRing::residue_key(e));
        EXPECT_EQ(residues.size(), t.size());  // distinct mod 2
        EXPECT_EQ(ring.pow(ring.xi(), (std::uint64_t{1} << m) - 1), ring.one());
        // products of Teichmuller elements stay in the set
        std::set<GaloisRing::Element> set(t.begin(), t.end());
        for (std::size_t i = 1; i < t.size(); i += 3) {
            for (std::size_t j = 1; j < t.size(); j += 5) EXPECT_TRUE(set.count(ring.mul(t[i], t[j])));
        }
    }
}

TEST(GaloisRing, lifted_modulus_reduces_to_binary) {
    auto ring = gr4_build(5);
    const auto &bin = ring.binary_modulus();
    for (std::size_t i = 0; i < bin.size(); ++i) EXPECT_EQ(ring.modulus()[i] % 2, bin[i]);
    EXPECT_THROW(gr4_build(4), Error);
}

TEST(Z4Code, octacode_words_and_lee_weights) {
    auto ring = gr4_build(3);
    auto k = kerdock_z4(ring);
    EXPECT_EQ(k.length, 8u);
    EXPECT_EQ(k.log2_size(), 8u);
    auto swe = lee_swe(k);
    auto oracle = words_oracle(k);
    EXPECT_EQ(swe.total(), oracle.size());
    std::size_t min_lee = 100;
    for (const auto &w : oracle) {
        if (lee_weight(w) > 0) min_lee = std::min(min_lee, lee_weight(w));
    }
    EXPECT_EQ(swe.min_nonzero_lee_weight(), min_lee);
    EXPECT_EQ(min_lee, 6u);
}

TEST(Z4Code, octacode_is_self_dual) {
    auto k = kerdock_z4(gr4_build(3));
    auto d = z4_dual(k);
    EXPECT_EQ(words_oracle(d), words_oracle(k));
}

TEST(Z4Code, dual_is_orthogonal_with_complementary_size) {
    auto k = kerdock_z4(gr4_build(5));
    auto d = z4_dual(k);
    EXPECT_EQ(k.log2_size() + d.log2_size(), 2 * k.length);
    for (const auto &a : k.generator) {
        for (const auto &b : d.generator) {
            unsigned s = 0;
            for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
            EXPECT_EQ(s % 4, 0u);
        }
    }
}

TEST(Z4Code, membership_and_text_round_trip) {
    auto k = kerdock_z4(gr4_build(3));
    Z4Module mod(k);
    for (const auto &w : words_oracle(k)) EXPECT_TRUE(mod.contains(w));
    Z4Vector outside(8, 0);
    outside[0] = 1;
    EXPECT_FALSE(mod.contains(outside));
    std::stringstream ss;
    write_z4_code(ss, k);
    auto back = read_z4_code(ss);
    EXPECT_EQ(words_oracle(back), words_oracle(k));
}

TEST(MacWilliams, octacode_transform_is_exact) {
    auto k = kerdock_z4(gr4_build(3));
    auto w = lee_swe(k);
    EXPECT_EQ(swe_macwilliams(w, w.total()), w);
    auto bad = w;
    bad.coefficients.begin()->second += 1;
    EXPECT_THROW(swe_macwilliams(bad, w.total()), Error);
}

TEST(MacWilliams, kerdock5_dual_enumerator) {
    auto ring = gr4_build(5);
    auto k = kerdock_z4(ring);
    auto w = lee_swe(k);
    EXPECT_EQ(w.total(), 4096u);
    EXPECT_EQ(w.min_nonzero_lee_weight(), 28u);
    auto dual = swe_macwilliams(w, w.total());
    EXPECT_EQ(dual.total(), std::uint64_t{1} << 52);
    EXPECT_EQ(dual.min_nonzero_lee_weight(), 6u);
}

TEST(GrayKernel, octacode_kernel_is_first_order_reed_muller) {
    auto ring = gr4_build(3);
    auto k = kerdock_z4(ring);
    BitMatrix ker = phi_kernel(k);
    EXPECT_EQ(ker.rows(), 5u);
    auto perm = gray_to_rm_permutation(ring);
    EXPECT_TRUE(row_spaces_equal(permute_columns(ker, perm), reed_muller(1, 4).generator));
}

TEST(GrayKernel, preparata_like_kernel_dimension) {
    auto ring = gr4_build(5);
    auto p = z4_dual(kerdock_z4(ring));
    EXPECT_EQ(phi_kernel(p).rows(), 27u);
}

TEST(Quotient, representatives_count_and_zero_first) {
    auto ring = gr4_build(3);
    auto k = kerdock_z4(ring);
    auto sub = kernel_preimage(k);
    auto reps = z4_quotient_reps(k, sub);
    EXPECT_EQ(reps.size(), std::size_t{1} << (k.log2_size() - sub.log2_size()));
    EXPECT_EQ(reps.front(), Z4Vector(8, 0));
    Z4Vector bad(8, 0);
    bad[0] = 1;
    Z4Code not_sub = z4_standard_form(8, {bad});
    EXPECT_THROW(z4_quotient_reps(k, not_sub), Error);
}

TEST(SweCsv, header_and_rows) {
    auto w = lee_swe(kerdock_z4(gr4_build(3)));
    std::stringstream ss;
    write_swe_csv(ss, w);
    std::string header;
    std::getline(ss, header);
    EXPECT_FALSE(header.empty());
    std::size_t rows = 0;
    for (std::string line; std::getline(ss, line);) rows += !line.empty();
    EXPECT_GT(rows, 0u);
}
