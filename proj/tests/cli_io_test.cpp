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

// The shipped data files and the text formats the command line reads.

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "unionstab/sim.hpp"

using namespace unionstab;

namespace {

std::ifstream open_data(const std::string &name) {
    std::ifstream in(std::string(UNIONSTAB_DATA_DIR) + "/" + name);
    if (!in) throw std::runtime_error("cannot open " + name);
    return in;
}

}  // namespace

TEST(DataFiles, five_zero_three_state) {
    auto in = open_data("five_zero_three.stab");
    auto c = read_stabilizer_code(in);
    EXPECT_EQ(c.n, 5u);
    EXPECT_EQ(c.k, 0u);
    EXPECT_EQ(stabilizer_params(c).to_string(), "[[5,0,3 [brute]]]");
}

TEST(DataFiles, five_one_three_code) {
    auto in = open_data("five_one_three.stab");
    auto c = read_stabilizer_code(in);
    EXPECT_EQ(c.k, 1u);
    EXPECT_EQ(stabilizer_params(c).to_string(), "[[5,1,3 [brute]]]");
}

TEST(DataFiles, five_six_two_union_and_relabelling) {
    auto in = open_data("five_six_two.union");
    auto u = read_union_code(in);
    EXPECT_EQ(union_distance_bound(u).to_string(), "((5, 6, 2 [coset-brute]))");
    auto cin = open_data("five_six_two_qc.circuit");
    auto qc = read_circuit(cin);
    EXPECT_EQ(qc.size(), 7u);
    EXPECT_EQ(qc.count(GateType::CCX), 2u);
    EXPECT_TRUE(full_encoder_check(u, synth_q1(u.base()), qc).ok);
}

TEST(DataFiles, full_space) {
    auto in = open_data("full_space_2.union");
    auto u = read_union_code(in);
    EXPECT_EQ(u.K(), 4u);
    EXPECT_EQ(true_distance(u), 1u);
}

TEST(DataFiles, hamming_matrix) {
    auto in = open_data("hamming7.mat");
    auto g = read_matrix(in);
    auto h = LinearCode::from_generator(g);
    EXPECT_EQ(min_distance(h, DistanceStrategy::Brute), 3u);
    EXPECT_EQ(css(h, h).k, 1u);
}

TEST(TextFormats, comments_and_blank_lines_are_skipped) {
    std::stringstream ss("# header\n\n  2 0  \nS\n# first\nXX\n\nZZ\n");
    auto c = read_stabilizer_code(ss);
    EXPECT_EQ(c.stab.size(), 2u);
}

TEST(TextFormats, stabilizer_round_trip_keeps_signs) {
    std::vector<PauliVector> g{PauliVector::parse("-XX"), PauliVector::parse("ZZ")};
    auto c = stabilizer_from_generators(g);
    std::stringstream ss;
    write_stabilizer_code(ss, c);
    EXPECT_NE(ss.str().find("-XX"), std::string::npos);
    auto back = read_stabilizer_code(ss);
    EXPECT_TRUE(back.stab[0].negative());
}

TEST(TextFormats, malformed_inputs) {
    for (const char *bad : {"", "5\nS\n", "2 0\nQ\nXX\nZZ\n", "2 0\nS\nXX\n", "2 0\nS\nXX\nZZZ\n", "2 1\nS\nZZ\nZ\nZI\nX\nZI\n"}) {
        std::stringstream ss(bad);
        EXPECT_THROW(read_stabilizer_code(ss), Error) << bad;
    }
    for (const char *bad : {"2 0\nS\nXX\nZZ\n", "2 0\nS\nXX\nZZ\nT 2\nII\n", "2 0\nS\nXX\nZZ\nU 1\nII\n",
                            "2 0\nS\nXX\nZZ\nT 2\nII\nXX\n", "2 0\nS\nXX\nZZ\nTX 1\n00\n"}) {
        std::stringstream ss(bad);
        EXPECT_THROW(read_union_code(ss), Error) << bad;
    }
    for (const char *bad : {"2 3\n110\n", "1 3\n1101\n", "x y\n"}) {
        std::stringstream ss(bad);
        EXPECT_THROW(read_matrix(ss), Error) << bad;
    }
}

TEST(TextFormats, error_kinds_are_parse_errors) {
    std::stringstream ss("qubits 2\nCNOT 1 1\n");
    try {
        read_circuit(ss);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::Parse);
    }
}
