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

#include "unionstab/sim.hpp"

#include <gtest/gtest.h>

#include <random>

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

Circuit drawn_qc() {
    Circuit c;
    c.n = 5;
    c.add(GateType::CCX, 0, 1, 2);
    c.add(GateType::CNOT, 3, 1);
    c.add(GateType::CNOT, 0, 4);
    c.add(GateType::CCX, 0, 4, 1);
    c.add(GateType::CNOT, 2, 0);
    c.add(GateType::CNOT, 4, 0);
    c.add(GateType::CNOT, 2, 3);
    return c;
}

double gram_deviation(const std::vector<StateVector> &s) {
    double dev = 0;
    for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = 0; b < s.size(); ++b) dev = std::max(dev, std::abs(inner(s[a], s[b]) - Amplitude(a == b)));
    }
    return dev;
}

}  // namespace

TEST(StateVector, pauli_action_matches_dense_matrix) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = checks::random_pauli(3, rng);
        if (rng() & 1) p.set_negative(true);
        auto m = pauli_matrix(p);
        for (std::size_t col = 0; col < 8; ++col) {
            auto out = apply_pauli(p, StateVector::basis(3, col));
            for (std::size_t row = 0; row < 8; ++row) EXPECT_LT(std::abs(out.amp[row] - m[row * 8 + col]), 1e-12);
        }
    }
}

TEST(StateVector, gates_preserve_norm_and_qubit_order) {
    // X on qubit 0 moves |000> to |100>, index 4
    Circuit c;
    c.n = 3;
    c.add(GateType::X, 0);
    EXPECT_EQ(std::abs(simulate(c, StateVector::basis(3, 0)).amp[4]), 1.0);
    std::mt19937_64 rng(4);
    Circuit big;
    big.n = 4;
    for (int i = 0; i < 40; ++i) {
        std::size_t a = rng() % 4, b = (a + 1) % 4, t = (a + 2) % 4;
        switch (rng() % 4) {
            case 0: big.add(GateType::H, a); break;
            case 1: big.add(GateType::P, a); break;
            case 2: big.add(GateType::CNOT, a, b); break;
            default: big.add(GateType::CCX, a, b, t); break;
        }
    }
    auto s = simulate(big, StateVector::basis(4, 5));
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
    EXPECT_THROW(StateVector::basis(kMaxSimQubits + 1, 0), Error);
}

TEST(CodeBasis, states_are_orthonormal_and_stabilized) {
    auto u = five_six_two();
    auto states = code_basis(u);
    ASSERT_EQ(states.size(), 6u);
    EXPECT_LT(gram_deviation(states), 1e-10);
    // t_i|c> is stabilized by t_i S t_i^dagger; the identity translation by S itself
    for (const auto &s : u.base().stab) {
        auto v = apply_pauli(s, states[0]);
        EXPECT_LT(std::abs(inner(states[0], v) - Amplitude(1)), 1e-10);
    }
    EXPECT_THROW(code_basis(union_code(css(reed_muller(1, 4), reed_muller(2, 4)), {})), Error);
}

TEST(KnillLaflamme, five_six_two_detects_single_errors) {
    auto states = code_basis(five_six_two());
    auto kl2 = kl_verify(states, 2);
    EXPECT_TRUE(kl2.ok);
    EXPECT_EQ(kl2.errors_checked, 15u);
    auto kl3 = kl_verify(states, 3);
    EXPECT_FALSE(kl3.ok);
    EXPECT_FALSE(kl3.violations.empty());
}

TEST(KnillLaflamme, five_qubit_code_corrects_single_errors) {
    auto base = stabilizer_from_generators(ops({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}));
    auto kl = kl_verify(code_basis(union_code(base, {})), 3);
    EXPECT_TRUE(kl.ok);
    EXPECT_EQ(kl.errors_checked, 15u + 90u);
}

TEST(KnillLaflamme, full_space_detects_nothing) {
    auto bell = stabilizer_from_generators(ops({"XX", "ZZ"}));
    auto states = code_basis(union_code(bell, ops({"II", "XI", "ZI", "YI"})));
    EXPECT_LT(gram_deviation(states), 1e-10);
    EXPECT_FALSE(kl_verify(states, 2).ok);
}

TEST(Encoder, five_six_two_end_to_end) {
    auto u = five_six_two();
    auto q1 = synth_q1(u.base());
    auto rep = full_encoder_check(u, q1, drawn_qc());
    EXPECT_TRUE(rep.ok);
    EXPECT_LT(rep.worst_deviation, 1e-10);
    EXPECT_EQ(rep.order, (std::vector<std::size_t>{0, 2, 4, 5, 1, 3}));

    auto qc = synth_qc(canonicalize_translations(u, q1), 8, 7, true);
    EXPECT_TRUE(full_encoder_check(u, q1, qc).ok);
}

TEST(Encoder, corrupted_circuits_fail) {
    auto u = five_six_two();
    auto q1 = synth_q1(u.base());
    auto qc = drawn_qc();
    qc.gates.pop_back();
    EXPECT_FALSE(full_encoder_check(u, q1, qc).ok);

    // a valid relabelling behind a broken Clifford stage
    auto bad_q1 = q1;
    bad_q1.add(GateType::H, 0);
    auto rep = full_encoder_check(u, bad_q1, drawn_qc());
    EXPECT_FALSE(rep.ok);
}

TEST(Encoder, stabilizer_code_with_logical_qubit) {
    auto base = stabilizer_from_generators(ops({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}));
    auto u = union_code(base, {});
    Circuit empty;
    empty.n = 1;
    auto rep = full_encoder_check(u, synth_q1(base), empty);
    EXPECT_TRUE(rep.ok);
}
