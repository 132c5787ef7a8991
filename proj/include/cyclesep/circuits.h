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

#ifndef CYCLESEP_CIRCUITS_H
#define CYCLESEP_CIRCUITS_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "cyclesep/group.h"
#include "cyclesep/permutation.h"

namespace cyclesep {

enum class ControlKind {
    /// One control qudit of dimension |G|, one basis value per group element.
    QuditExact,
    /// Qubit j controls the rotation raised to the power 2^j.
    CyclicBinary,
    /// One register per layer i = 2..k holding |+>_{S_{i-1}}; its one-hot
    /// qubits control the transpositions (j i).
    SymmetricRecursive,
    /// CyclicBinary plus one flip qubit controlling a reflection.
    DihedralBinary,
};

std::string control_kind_name(ControlKind kind);

/// Registers wider than this are still described (for gate counting) but
/// cannot be indexed by a 64-bit basis label; their gates never fire and
/// their control_dim is 0.
inline constexpr size_t kMaxAddressableQubits = 62;

/// A gate fires on control basis state c when (c & mask) == value. Qubit q of an
/// n-qubit register is bit n-1-q of c, so kets read |q0 q1 ... q_{n-1}>.
struct ControlCondition {
    uint64_t mask = 0;
    uint64_t value = 0;

    bool fires(uint64_t c) const {
        return (c & mask) == value;
    }
    static ControlCondition qubit(size_t num_qubits, size_t q);
    static ControlCondition qudit_value(uint64_t v);
};

/// Applies the slot permutation `action` to the k subsystems when the
/// control condition holds.
struct ControlledPermGate {
    ControlCondition control;
    /// Control qubit indices (empty for qudit control).
    std::vector<uint32_t> control_qubits;
    Permutation action;
    std::string label;

    /// Controlled-SWAPs needed for this gate.
    size_t swap_count() const {
        return action.transpositions().size();
    }
};

/// A one- or two-qubit gate used to prepare the control register. For two
/// qubits the matrix acts on |qubits[0] qubits[1]> with qubits[0] as the
/// high bit.
struct PrepOp {
    std::vector<uint32_t> qubits;
    Eigen::MatrixXd matrix;
    std::string label;
};

struct CircuitPlan {
    ControlKind kind;
    GroupSpec group;
    size_t copies;
    size_t local_dim;
    /// Zero when the register is too wide to store.
    size_t control_dim;
    /// Zero for QuditExact.
    size_t control_qubits;
    /// Qubit ranges of the control sub-registers, in order.
    std::vector<std::vector<uint32_t>> registers;
    /// Gates taking |0...0> to the control state (empty for QuditExact, whose
    /// control starts in the uniform superposition).
    std::vector<PrepOp> control_prep;
    std::vector<ControlledPermGate> gates;
    std::string control_prep_description;
    std::string accept_description;

    /// Runs control_prep on |0...0>. The test accepts when the control register
    /// is found back in this state.
    Eigen::VectorXd control_state() const;
};

Eigen::Matrix2d hadamard();
/// U_i = (1/sqrt(i+1)) [[1, -sqrt(i)], [sqrt(i), 1]].
Eigen::Matrix2d layer_rotation(size_t i);
/// T_{j,j+1} for a layer of i qubits, 1 <= j <= i-1, in the basis
/// |00>, |01>, |10>, |11> of qubits (j, j+1).
Eigen::Matrix4d layer_spread(size_t i, size_t j);

/// Applies a prep gate to an n-qubit real state in place.
void apply_prep_op(Eigen::VectorXd &state, size_t num_qubits, const PrepOp &op);

/// U_i on the first qubit of |0>^i, then T_{j,j+1} for j = 1..i-1.
Eigen::VectorXd prepare_layer_state(size_t i);
/// (|0...0> + |10...0> + |010...0> + ... + |0...01>) / sqrt(i+1), from the definition.
Eigen::VectorXd layer_state_closed_form(size_t i);

CircuitPlan build_cyclic_binary(size_t k, size_t d);
CircuitPlan build_symmetric_recursive(size_t k, size_t d);
CircuitPlan build_dihedral(size_t k, size_t d);
CircuitPlan build_qudit_exact(const GroupSpec &spec, size_t d);
/// The literal qubit circuit for S, C and D families; QuditExact otherwise.
CircuitPlan build_plan(const GroupSpec &spec, size_t d);

/// The reflection used as the dihedral flip: fixes vertex 1 for odd k, swaps
/// 1 and 2 (edge axis) for even k.
Permutation dihedral_flip(size_t k);

nlohmann::json plan_to_json(const CircuitPlan &plan);

}  // namespace cyclesep

#endif
