// Copyright 2026 The cyclesep Authors
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

#include "cyclesep/circuits.h"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "cyclesep/errors.h"
#include "cyclesep/resources.h"

using namespace cyclesep;

namespace {

double unitarity_defect(const Eigen::MatrixXd &m) {
    return (m.transpose() * m - Eigen::MatrixXd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(ControlCondition, QubitOrdering) {
    auto c = ControlCondition::qubit(3, 0);
    EXPECT_EQ(c.mask, 4u);
    EXPECT_TRUE(c.fires(0b100));
    EXPECT_FALSE(c.fires(0b011));
    EXPECT_EQ(ControlCondition::qubit(3, 2).mask, 1u);
    auto v = ControlCondition::qudit_value(5);
    EXPECT_TRUE(v.fires(5));
    EXPECT_FALSE(v.fires(4));
    EXPECT_FALSE(v.fires(13));
    EXPECT_THROW(ControlCondition::qubit(3, 3), std::invalid_argument);
}

TEST(CyclicBinary, SwapTest) {
    auto plan = build_cyclic_binary(2, 2);
    EXPECT_EQ(plan.kind, ControlKind::CyclicBinary);
    EXPECT_EQ(plan.control_qubits, 1u);
    ASSERT_EQ(plan.gates.size(), 1u);
    EXPECT_EQ(plan.gates[0].action.str(), "(1 2)");
    EXPECT_EQ(count_gates(plan), 1u);
    Eigen::VectorXd plus = plan.control_state();
    EXPECT_NEAR(plus(0), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(plus(1), 1 / std::sqrt(2.0), 1e-15);
}

TEST(CyclicBinary, PowersOfTwo) {
    auto plan = build_cyclic_binary(5, 2);
    EXPECT_EQ(plan.control_qubits, 3u);
    EXPECT_EQ(plan.control_dim, 8u);
    ASSERT_EQ(plan.gates.size(), 3u);
    auto r = Permutation::rotation(5);
    for (size_t j = 0; j < 3; j++) {
        EXPECT_EQ(plan.gates[j].action, r.pow(int64_t{1} << j));
        EXPECT_EQ(plan.gates[j].control_qubits, std::vector<uint32_t>{static_cast<uint32_t>(j)});
        EXPECT_EQ(plan.gates[j].swap_count(), 4u);
    }
    EXPECT_EQ(count_gates(plan), 12u);

    auto four = build_cyclic_binary(4, 2);
    ASSERT_EQ(four.gates.size(), 2u);
    EXPECT_EQ(four.gates[0].swap_count(), 3u);
    EXPECT_EQ(four.gates[1].action.str(), "(1 3)(2 4)");
    EXPECT_EQ(four.gates[1].swap_count(), 2u);
    EXPECT_THROW(build_cyclic_binary(1, 2), std::invalid_argument);
}

TEST(CyclicBinary, ControlStateIsUniform) {
    auto plan = build_cyclic_binary(6, 2);
    Eigen::VectorXd c = plan.control_state();
    ASSERT_EQ(c.size(), 8);
    for (Eigen::Index i = 0; i < 8; i++) {
        EXPECT_NEAR(c(i), 1 / std::sqrt(8.0), 1e-15);
    }
}

TEST(SymmetricRecursive, CountsAndLayout) {
    auto four = build_symmetric_recursive(4, 2);
    EXPECT_EQ(count_gates(four), 6u);
    EXPECT_EQ(four.control_qubits, 6u);
    ASSERT_EQ(four.registers.size(), 3u);
    EXPECT_EQ(four.registers[0], (std::vector<uint32_t>{0}));
    EXPECT_EQ(four.registers[1], (std::vector<uint32_t>{1, 2}));
    EXPECT_EQ(four.registers[2], (std::vector<uint32_t>{3, 4, 5}));
    EXPECT_EQ(four.gates[3].action.str(), "(1 4)");
    EXPECT_EQ(four.gates[5].action.str(), "(3 4)");
    EXPECT_EQ(count_gates(build_symmetric_recursive(2, 2)), 1u);
    EXPECT_EQ(count_gates(build_symmetric_recursive(6, 2)), 15u);
    for (size_t k = 2; k <= 12; k++) {
        auto plan = build_symmetric_recursive(k, 2);
        EXPECT_EQ(count_gates(plan), k * (k - 1) / 2);
        EXPECT_EQ(plan.control_qubits, k * (k - 1) / 2);
    }
}

TEST(SymmetricRecursive, WideRegistersAreCountOnly) {
    auto plan = build_symmetric_recursive(12, 2);
    EXPECT_EQ(plan.control_qubits, 66u);
    EXPECT_EQ(plan.control_dim, 0u);
    EXPECT_THROW(plan.control_state(), CapExceeded);
}

TEST(SymmetricRecursive, ControlStateIsProductOfLayerStates) {
    auto plan = build_symmetric_recursive(3, 2);
    Eigen::VectorXd c = plan.control_state();
    ASSERT_EQ(c.size(), 8);
    // Layer 2 holds (|0> + |1>)/sqrt 2, layer 3 holds (|00> + |10> + |01>)/sqrt 3.
    Eigen::VectorXd first = layer_state_closed_form(1), second = layer_state_closed_form(2);
    Eigen::VectorXd expected(8);
    for (Eigen::Index hi = 0; hi < 2; hi++) {
        for (Eigen::Index lo = 0; lo < 4; lo++) {
            expected(hi * 4 + lo) = first(hi) * second(lo);
        }
    }
    EXPECT_LT((c - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(LayerState, SmallCases) {
    Eigen::VectorXd one = prepare_layer_state(1);
    EXPECT_NEAR(one(0), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(one(1), 1 / std::sqrt(2.0), 1e-15);

    Eigen::VectorXd two = prepare_layer_state(2);
    double a = 1 / std::sqrt(3.0);
    EXPECT_NEAR(two(0b00), a, 1e-15);
    EXPECT_NEAR(two(0b10), a, 1e-15);
    EXPECT_NEAR(two(0b01), a, 1e-15);
    EXPECT_NEAR(two(0b11), 0, 1e-15);

    Eigen::VectorXd three = prepare_layer_state(3);
    EXPECT_NEAR(three.norm(), 1, 1e-15);
    for (int idx : {0b000, 0b100, 0b010, 0b001}) {
        EXPECT_NEAR(three(idx), 0.5, 1e-15);
    }
}

TEST(LayerState, MatchesClosedFormUpToEight) {
    for (size_t i = 1; i <= 8; i++) {
        EXPECT_LT((prepare_layer_state(i) - layer_state_closed_form(i)).cwiseAbs().maxCoeff(), 1e-12) << i;
    }
}

TEST(PrepGates, AreUnitary) {
    EXPECT_LT(unitarity_defect(hadamard()), 1e-15);
    for (size_t i = 1; i <= 10; i++) {
        EXPECT_LT(unitarity_defect(layer_rotation(i)), 1e-12);
        for (size_t j = 1; j < i; j++) {
            EXPECT_LT(unitarity_defect(layer_spread(i, j)), 1e-12);
        }
    }
    EXPECT_THROW(layer_spread(3, 3), std::invalid_argument);
    EXPECT_THROW(layer_spread(3, 0), std::invalid_argument);
}

TEST(PrepGates, RotationMatrix) {
    Eigen::Matrix2d u = layer_rotation(3);
    EXPECT_NEAR(u(0, 0), 0.5, 1e-15);
    EXPECT_NEAR(u(0, 1), -std::sqrt(3.0) / 2, 1e-15);
    EXPECT_NEAR(u(1, 0), std::sqrt(3.0) / 2, 1e-15);
}

TEST(Dihedral, FlipChoice) {
    EXPECT_EQ(dihedral_flip(3).str(), "(2 3)");
    EXPECT_EQ(dihedral_flip(4).str(), "(1 2)(3 4)");
    for (size_t k = 3; k <= 16; k++) {
        auto flip = dihedral_flip(k);
        auto group = realize(GroupSpec::dihedral(k));
        EXPECT_TRUE(group.contains(flip)) << k;
        EXPECT_TRUE((flip * flip).is_identity());
        EXPECT_EQ(flip.transpositions().size(), k / 2) << k;
        // A reflection never commutes with the rotation for k >= 3.
        EXPECT_NE(flip * Permutation::rotation(k), Permutation::rotation(k) * flip);
    }
}

TEST(Dihedral, GateCounts) {
    auto four = build_dihedral(4, 2);
    EXPECT_EQ(four.control_qubits, 3u);
    ASSERT_EQ(four.gates.size(), 3u);
    EXPECT_EQ(four.gates[0].swap_count() + four.gates[1].swap_count(), 5u);
    EXPECT_EQ(four.gates[2].action.str(), "(1 2)(3 4)");
    EXPECT_EQ(count_gates(four), 7u);
    auto three = build_dihedral(3, 2);
    EXPECT_EQ(three.gates.back().action.str(), "(2 3)");
    EXPECT_EQ(three.gates.back().swap_count(), 1u);
    for (size_t k : {4, 8, 16, 32}) {
        EXPECT_LE(static_cast<double>(count_gates(build_dihedral(k, 2))), 2 * k * std::log2(k));
    }
    EXPECT_THROW(build_dihedral(2, 2), std::invalid_argument);
}

TEST(QuditExact, OneGatePerNonIdentityElement) {
    auto plan = build_qudit_exact(GroupSpec::quaternion(), 2);
    EXPECT_EQ(plan.kind, ControlKind::QuditExact);
    EXPECT_EQ(plan.control_dim, 8u);
    EXPECT_EQ(plan.control_qubits, 0u);
    EXPECT_EQ(plan.gates.size(), 7u);
    Eigen::VectorXd c = plan.control_state();
    EXPECT_NEAR(c.norm(), 1, 1e-15);
    EXPECT_NEAR(c(3), 1 / std::sqrt(8.0), 1e-15);
}

TEST(BuildPlan, ChoosesLiteralCircuits) {
    EXPECT_EQ(build_plan(GroupSpec::symmetric(4), 2).kind, ControlKind::SymmetricRecursive);
    EXPECT_EQ(build_plan(GroupSpec::cyclic(5), 2).kind, ControlKind::CyclicBinary);
    EXPECT_EQ(build_plan(GroupSpec::dihedral(5), 2).kind, ControlKind::DihedralBinary);
    EXPECT_EQ(build_plan(GroupSpec::alternating(4), 2).kind, ControlKind::QuditExact);
    EXPECT_EQ(build_plan(GroupSpec::symmetric(1), 2).kind, ControlKind::QuditExact);
}

TEST(PlanJson, ListsGatesWithSwapCounts) {
    auto json = plan_to_json(build_cyclic_binary(4, 3));
    EXPECT_EQ(json["kind"], "CyclicBinary");
    EXPECT_EQ(json["group"], "C:4");
    EXPECT_EQ(json["local_dim"], 3);
    ASSERT_EQ(json["gates"].size(), 2u);
    EXPECT_EQ(json["gates"][1]["permutation"], "(1 3)(2 4)");
    EXPECT_EQ(json["gates"][1]["swaps"], 2);
    EXPECT_EQ(json["gates"][1]["control"]["qubits"], nlohmann::json::array({1}));
    EXPECT_EQ(json["total_swaps"], 5);
    auto qudit = plan_to_json(build_qudit_exact(GroupSpec::symmetric(2), 2));
    EXPECT_EQ(qudit["gates"][0]["control"]["value"], 1);
}
