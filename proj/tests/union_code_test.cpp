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

#include "unionstab/union_code.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <sstream>

#include "support/properties.hpp"

using namespace unionstab;

namespace {

std::vector<PauliVector> ops(std::initializer_list<const char *> ss) {
    std::vector<PauliVector> out;
    for (auto s : ss) out.push_back(PauliVector::parse(s));
    return out;
}

StabilizerCode five_zero_three() {
    return stabilizer_from_generators(ops({"XIZZI", "XXZIZ", "YIYZZ", "YZZYI", "XZIZX"}));
}

UnionStabilizerCode five_six_two() {
    return union_code(five_zero_three(), ops({"IIIII", "IIZZX", "IIIXX", "IIIZY", "IIZYY", "IIZXZ"}));
}

// Coset minimum weight by scanning all 4^n Paulis for the coset label.
std::size_t coset_weight_oracle(const StabilizerCode &base, const PauliVector &p) {
    BitVector want = coset_label(base, p);
    std::size_t best = base.n + 1;
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (2 * base.n)); ++idx) {
        auto q = checks::pauli_from_index(base.n, idx);
        if (coset_label(base, q) == want) best = std::min(best, pauli_weight(q));
    }
    return best;
}

// Largest clique containing vertex 0, by trying every vertex subset.
std::size_t clique_oracle(const SearchGraph &g) {
    std::size_t n = g.vertex_count();
    std::vector<std::size_t> cand;
    for (std::size_t v = 1; v < n; ++v) {
        if (g.adjacent(0, v)) cand.push_back(v);
    }
    std::size_t best = 1;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        best = std::max(best, cur.size() + 1);
        for (std::size_t i = from; i < cand.size(); ++i) {
            bool ok = std::all_of(cur.begin(), cur.end(), [&](std::size_t u) { return g.adjacent(u, cand[i]); });
            if (!ok) continue;
            cur.push_back(cand[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return best;
}

}  // namespace

TEST(UnionCode, five_six_two_parameters) {
    auto u = five_six_two();
    EXPECT_EQ(u.K(), 6u);
    auto p = union_distance_bound(u);
    EXPECT_EQ(p.to_string(), "((5, 6, 2 [coset-brute]))");
    EXPECT_TRUE(p.d_is_bound);
    EXPECT_EQ(true_distance(u), 2u);
    for (std::uint64_t i = 0; i < u.K(); ++i) {
        for (std::uint64_t j = i + 1; j < u.K(); ++j) {
            std::size_t d = coset_distance(u, i, j);
            EXPECT_GE(d, 2u);
            EXPECT_EQ(d, coset_weight_oracle(u.base(), u.translation(i) + u.translation(j)));
        }
    }
}

TEST(UnionCode, labels_of_the_translations) {
    auto u = five_six_two();
    std::vector<std::string> got;
    for (const auto &t : u.translations()) got.push_back(coset_label(u.base(), t).to_string());
    EXPECT_EQ(got, (std::vector<std::string>{"00000", "01010", "11011", "01111", "11100", "10010"}));
}

TEST(UnionCode, identity_is_prepended_and_duplicates_rejected) {
    auto base = five_zero_three();
    auto u = union_code(base, ops({"IIZZX"}));
    EXPECT_EQ(u.K(), 2u);
    EXPECT_TRUE(u.translation(0).is_identity());
    try {
        union_code(base, ops({"IIIII", "IIZZX", "XIZZI"}));  // XIZZI is in the stabilizer
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::DuplicateCoset);
    }
}

TEST(UnionCode, single_coset_reports_base_distance) {
    auto base = stabilizer_from_generators(ops({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}));
    auto p = union_distance_bound(union_code(base, {}));
    EXPECT_EQ(p.d, std::optional<std::size_t>(3));
    EXPECT_FALSE(p.d_is_bound);
    EXPECT_EQ(p.to_string(), "[[5,1,3 [brute]]]");
}

TEST(UnionCode, full_space_has_distance_one) {
    auto bell = stabilizer_from_generators(ops({"XX", "ZZ"}));
    auto u = union_code(bell, ops({"II", "XI", "ZI", "YI"}));
    EXPECT_EQ(union_distance_bound(u).d, std::optional<std::size_t>(1));
    EXPECT_EQ(true_distance(u), 1u);
}

TEST(SearchGraph, five_qubit_state_graph) {
    auto base = five_zero_three();
    auto g = build_search_graph(base, 2);
    EXPECT_EQ(g.vertex_count(), 32u);
    EXPECT_EQ(g.purity, 3u);
    for (std::size_t v = 0; v < 32; ++v) EXPECT_EQ(g.coset_weight[v], coset_weight_oracle(base, g.representatives[v]));
    for (std::size_t v = 0; v < 32; ++v) EXPECT_EQ(label_index(coset_label(base, g.representatives[v])), v);
    // the 15 single-qubit errors land in distinct cosets
    std::size_t ones = 0;
    for (std::size_t v = 1; v < 32; ++v) ones += g.coset_weight[v] == 1;
    EXPECT_EQ(ones, 15u);
}

TEST(SearchGraph, clique_sizes_by_distance) {
    auto base = five_zero_three();
    struct Case {
        std::size_t d, size;
    };
    for (auto c : {Case{2, 6}, Case{3, 2}, Case{6, 1}}) {
        auto g = build_search_graph(base, c.d);
        auto exact = max_clique(g, CliqueMode::Exact);
        EXPECT_TRUE(exact.optimal);
        EXPECT_EQ(exact.size(), c.size) << "d=" << c.d;
        EXPECT_EQ(exact.size(), clique_oracle(g));
        EXPECT_TRUE(is_clique(g, exact.vertices));
        auto greedy = max_clique(g, CliqueMode::Greedy, 7);
        EXPECT_TRUE(is_clique(g, greedy.vertices));
        EXPECT_LE(greedy.size(), exact.size());
    }
}

TEST(SearchGraph, clique_gives_a_valid_union_code) {
    auto base = five_zero_three();
    auto g = build_search_graph(base, 2);
    auto c = max_clique(g, CliqueMode::Exact);
    auto u = union_from_clique(base, g, c);
    EXPECT_EQ(u.K(), 6u);
    EXPECT_GE(*union_distance_bound(u).d, 2u);
    EXPECT_EQ(true_distance(u), 2u);
}

TEST(SearchGraph, exact_search_is_deterministic) {
    auto g = build_search_graph(five_zero_three(), 2);
    auto a = max_clique(g, CliqueMode::Exact);
    auto b = max_clique(g, CliqueMode::Exact);
    EXPECT_EQ(a.vertices, b.vertices);
    auto ga = max_clique(g, CliqueMode::Greedy, 3), gb = max_clique(g, CliqueMode::Greedy, 3);
    EXPECT_EQ(ga.vertices, gb.vertices);
}

TEST(SearchGraph, budget_stops_exact_search) {
    auto g = build_search_graph(five_zero_three(), 2);
    auto r = max_clique(g, CliqueMode::Exact, 0, 2);
    EXPECT_FALSE(r.optimal);
    EXPECT_TRUE(is_clique(g, r.vertices));
}

TEST(SearchGraph, purity_requirement) {
    // repetition-type base: ZZ stabilizers, purity 2
    auto base = stabilizer_from_generators(ops({"ZZI", "IZZ"}));
    auto g = build_search_graph(base, 3);
    EXPECT_FALSE(g.pure_enough);
    try {
        build_search_graph(base, 3, kDefaultEnumerationCap, true);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotPureEnough);
    }
}

TEST(SearchGraph, text_output) {
    auto g = build_search_graph(five_zero_three(), 3);
    std::stringstream ss;
    write_search_graph(ss, g);
    std::string header;
    std::getline(ss, header);
    EXPECT_EQ(header, "vertices 32 edges " + std::to_string(g.edge_count()));
}

TEST(CssLikeUnion, product_translations) {
    // RM(2,4) contains its dual; translations from RM(3,4)
    auto c = reed_muller(2, 4);
    BitMatrix q = quotient_basis(reed_muller(3, 4).generator, c.generator);
    std::vector<BitVector> tx{BitVector(16), q[0]}, tz{BitVector(16), q[1], q[2]};
    auto u = css_like_union(c, c, tx, tz);
    EXPECT_EQ(u.K(), 6u);
    EXPECT_EQ(u.k(), 6u);
    EXPECT_TRUE(u.is_product());
    EXPECT_EQ(u.translation(4), PauliVector(make_coset_code(c, tx).translations[1], make_coset_code(c, tz).translations[1]));
    auto ux = make_coset_code(c, tx), uz = make_coset_code(c, tz);
    std::size_t d = std::min(min_distance(ux, DistanceStrategy::CosetBrute), min_distance(uz, DistanceStrategy::CosetBrute));
    EXPECT_EQ(u.params.d, std::optional<std::size_t>(std::min<std::size_t>(d, 4)));
    EXPECT_TRUE(u.params.d_is_bound);
}

TEST(CssLikeUnion, base_must_contain_its_dual) {
    auto nr = nordstrom_robinson();
    EXPECT_THROW(css_like_union(nr, nr), Error);
}

TEST(Family, m6_rows) {
    auto g = family_build(FamilyKind::Goethals, 6);
    EXPECT_EQ(g.params.to_string(), "((64, 2^30, 8 [enumerator]))");
    EXPECT_TRUE(g.params.d_is_bound);
    auto p = family_build(FamilyKind::Preparata, 6);
    EXPECT_EQ(p.params.to_string(), "((64, 2^40, 6 [enumerator]))");
    EXPECT_EQ(p.K(), 1024u * 1024u);
}

TEST(Family, symbolic_table_rows) {
    EXPECT_EQ(family_log2_dimension(FamilyKind::Goethals, 6), 30u);
    EXPECT_EQ(family_log2_dimension(FamilyKind::Preparata, 6), 40u);
    EXPECT_EQ(family_log2_dimension(FamilyKind::Goethals, 8), 210u);
    EXPECT_EQ(family_log2_dimension(FamilyKind::Preparata, 8), 224u);
    EXPECT_EQ(family_log2_dimension(FamilyKind::Goethals, 10), 966u);
    EXPECT_EQ(family_log2_dimension(FamilyKind::Preparata, 10), 984u);
    EXPECT_EQ(enlarged_rm_dimension(6), 35u);
    EXPECT_EQ(enlarged_rm_dimension(8), 210u);
    EXPECT_EQ(enlarged_rm_dimension(10), 957u);
    for (std::size_t m = 6; m <= 12; m += 2) {
        std::size_t n = std::size_t{1} << m;
        EXPECT_EQ(family_log2_dimension(FamilyKind::Goethals, m), n - 6 * m + 2);
        EXPECT_EQ(family_log2_dimension(FamilyKind::Preparata, m), n - 4 * m);
    }
}

TEST(Family, parameter_errors) {
    EXPECT_THROW(family_build(FamilyKind::Preparata, 5), Error);
    EXPECT_THROW(family_build(FamilyKind::Goethals, 8), Error);
    EXPECT_THROW(family_build(FamilyKind::Preparata, 6, FamilyRoute::Z4), Error);
    EXPECT_THROW(parse_family_kind("kerdock"), Error);
}

TEST(UnionIo, round_trip_explicit_and_product) {
    auto u = five_six_two();
    std::stringstream ss;
    write_union_code(ss, u);
    auto back = read_union_code(ss);
    EXPECT_EQ(back.K(), 6u);
    for (std::uint64_t i = 0; i < 6; ++i) EXPECT_EQ(back.translation(i), u.translation(i));

    auto g = family_build(FamilyKind::Goethals, 6);
    std::stringstream fs;
    write_union_code(fs, g);
    auto gb = read_union_code(fs);
    EXPECT_TRUE(gb.is_product());
    EXPECT_EQ(gb.K(), g.K());
    EXPECT_EQ(gb.params.to_string(), g.params.to_string());
}
