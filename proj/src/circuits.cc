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

#include <cmath>
#include <stdexcept>

#include "cyclesep/errors.h"

namespace cyclesep {

namespace {

size_t ceil_log2(size_t n) {
    size_t m = 0;
    while ((size_t{1} << m) < n) {
        m++;
    }
    return m;
}

size_t floor_log2(size_t n) {
    size_t m = 0;
    while ((n >> (m + 1)) != 0) {
        m++;
    }
    return m;
}

PrepOp single(uint32_t q, const Eigen::Matrix2d &m, std::string label) {
    return PrepOp{{q}, m, std::move(label)};
}

// Qubits [offset, offset + n) prepared in |+>_{S_n}.
void append_layer_prep(std::vector<PrepOp> &ops, uint32_t offset, size_t n) {
    ops.push_back(single(offset, layer_rotation(n), "U_" + std::to_string(n)));
    for (size_t j = 1; j < n; j++) {
        ops.push_back(PrepOp{{offset + static_cast<uint32_t>(j - 1), offset + static_cast<uint32_t>(j)},
                             layer_spread(n, j),
                             "T_" + std::to_string(j) + "," + std::to_string(j + 1)});
    }
}

void append_rotation_gates(CircuitPlan &plan, size_t k, size_t num_qubits) {
    Permutation rotation = Permutation::rotation(k);
    std::vector<uint32_t> reg;
    size_t last = floor_log2(k - 1);
    for (size_t j = 0; j <= last; j++) {
        plan.gates.push_back(ControlledPermGate{ControlCondition::qubit(num_qubits, j),
                                                {static_cast<uint32_t>(j)},
                                                rotation.pow(int64_t{1} << j),
                                                "2^" + std::to_string(j)});
        plan.control_prep.push_back(single(static_cast<uint32_t>(j), hadamard(), "H"));
        reg.push_back(static_cast<uint32_t>(j));
    }
    plan.registers.push_back(std::move(reg));
}

void check_plan_args(size_t k, size_t d, size_t min_k, const char *who) {
    if (k < min_k) {
        throw std::invalid_argument(std::string(who) + ": k must be at least " + std::to_string(min_k));
    }
    if (d < 1) {
        throw std::invalid_argument(std::string(who) + ": local dimension must be at least 1");
    }
}

}  // namespace

std::string control_kind_name(ControlKind kind) {
    switch (kind) {
        case ControlKind::QuditExact:
            return "QuditExact";
        case ControlKind::CyclicBinary:
            return "CyclicBinary";
        case ControlKind::SymmetricRecursive:
            return "SymmetricRecursive";
        case ControlKind::DihedralBinary:
            return "DihedralBinary";
    }
    return "?";
}

ControlCondition ControlCondition::qubit(size_t num_qubits, size_t q) {
    if (q >= num_qubits) {
        throw std::invalid_argument("ControlCondition::qubit: qubit out of range");
    }
    if (num_qubits > kMaxAddressableQubits) {
        return {0, 1};
    }
    uint64_t bit = uint64_t{1} << (num_qubits - 1 - q);
    return {bit, bit};
}

ControlCondition ControlCondition::qudit_value(uint64_t v) {
    return {~uint64_t{0}, v};
}

Eigen::VectorXd CircuitPlan::control_state() const {
    if (control_dim == 0) {
        throw CapExceeded("control register of " + std::to_string(control_qubits) + " qubits is too large to store");
    }
    if (kind == ControlKind::QuditExact) {
        return Eigen::VectorXd::Constant(static_cast<Eigen::Index>(control_dim),
                                         1 / std::sqrt(static_cast<double>(control_dim)));
    }
    Eigen::VectorXd state = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(control_dim));
    state(0) = 1;
    for (const auto &op : control_prep) {
        apply_prep_op(state, control_qubits, op);
    }
    return state;
}

Eigen::Matrix2d hadamard() {
    Eigen::Matrix2d h;
    h << 1, 1, 1, -1;
    return h / std::sqrt(2.0);
}

Eigen::Matrix2d layer_rotation(size_t i) {
    if (i < 1) {
        throw std::invalid_argument("layer_rotation: i must be at least 1");
    }
    double s = std::sqrt(static_cast<double>(i));
    Eigen::Matrix2d u;
    u << 1, -s, s, 1;
    return u / std::sqrt(static_cast<double>(i + 1));
}

Eigen::Matrix4d layer_spread(size_t i, size_t j) {
    if (j < 1 || j + 1 > i) {
        throw std::invalid_argument("layer_spread: need 1 <= j <= i-1");
    }
    double a = std::sqrt(static_cast<double>(i - j + 1));
    double b = std::sqrt(static_cast<double>(i - j));
    Eigen::Matrix4d t;
    t << a, 0, 0, 0,
         0, 1, b, 0,
         0, -b, 1, 0,
         0, 0, 0, a;
    return t / a;
}

void apply_prep_op(Eigen::VectorXd &state, size_t num_qubits, const PrepOp &op) {
    auto dim = static_cast<uint64_t>(state.size());
    if (dim != (uint64_t{1} << num_qubits)) {
        throw std::invalid_argument("apply_prep_op: state size does not match the qubit count");
    }
    for (uint32_t q : op.qubits) {
        if (q >= num_qubits) {
            throw std::invalid_argument("apply_prep_op: qubit out of range");
        }
    }
    if (op.qubits.size() == 1) {
        uint64_t bit = uint64_t{1} << (num_qubits - 1 - op.qubits[0]);
        for (uint64_t x = 0; x < dim; x++) {
            if (x & bit) {
                continue;
            }
            double a0 = state(static_cast<Eigen::Index>(x));
            double a1 = state(static_cast<Eigen::Index>(x | bit));
            state(static_cast<Eigen::Index>(x)) = op.matrix(0, 0) * a0 + op.matrix(0, 1) * a1;
            state(static_cast<Eigen::Index>(x | bit)) = op.matrix(1, 0) * a0 + op.matrix(1, 1) * a1;
        }
        return;
    }
    if (op.qubits.size() != 2 || op.qubits[0] == op.qubits[1]) {
        throw std::invalid_argument("apply_prep_op: expected one qubit or two distinct qubits");
    }
    uint64_t hi = uint64_t{1} << (num_qubits - 1 - op.qubits[0]);
    uint64_t lo = uint64_t{1} << (num_qubits - 1 - op.qubits[1]);
    for (uint64_t x = 0; x < dim; x++) {
        if (x & (hi | lo)) {
            continue;
        }
        const uint64_t idx[4] = {x, x | lo, x | hi, x | hi | lo};
        double in[4];
        for (int r = 0; r < 4; r++) {
            in[r] = state(static_cast<Eigen::Index>(idx[r]));
        }
        for (int r = 0; r < 4; r++) {
            double acc = 0;
            for (int c = 0; c < 4; c++) {
                acc += op.matrix(r, c) * in[c];
            }
            state(static_cast<Eigen::Index>(idx[r])) = acc;
        }
    }
}

Eigen::VectorXd prepare_layer_state(size_t i) {
    if (i < 1 || i > 30) {
        throw std::invalid_argument("prepare_layer_state: need 1 <= i <= 30");
    }
    Eigen::VectorXd state = Eigen::VectorXd::Zero(Eigen::Index{1} << i);
    state(0) = 1;
    std::vector<PrepOp> ops;
    append_layer_prep(ops, 0, i);
    for (const auto &op : ops) {
        apply_prep_op(state, i, op);
    }
    return state;
}

Eigen::VectorXd layer_state_closed_form(size_t i) {
    Eigen::VectorXd state = Eigen::VectorXd::Zero(Eigen::Index{1} << i);
    double amp = 1 / std::sqrt(static_cast<double>(i + 1));
    state(0) = amp;
    for (size_t q = 0; q < i; q++) {
        state(Eigen::Index{1} << (i - 1 - q)) = amp;
    }
    return state;
}

CircuitPlan build_cyclic_binary(size_t k, size_t d) {
    check_plan_args(k, d, 2, "build_cyclic_binary");
    size_t m = ceil_log2(k);
    CircuitPlan plan{ControlKind::CyclicBinary, GroupSpec::cyclic(k), k, d, size_t{1} << m, m, {}, {}, {}, "", ""};
    append_rotation_gates(plan, k, m);
    plan.control_prep_description = "|+> on each of " + std::to_string(m) + " control qubits";
    plan.accept_description = "project every control qubit onto |+>";
    return plan;
}

CircuitPlan build_symmetric_recursive(size_t k, size_t d) {
    check_plan_args(k, d, 2, "build_symmetric_recursive");
    size_t n = k * (k - 1) / 2;
    size_t control_dim = n < kMaxAddressableQubits ? size_t{1} << n : 0;
    CircuitPlan plan{ControlKind::SymmetricRecursive, GroupSpec::symmetric(k), k, d, control_dim, n, {}, {}, {},
                     "", ""};
    uint32_t offset = 0;
    for (size_t layer = 2; layer <= k; layer++) {
        size_t width = layer - 1;
        append_layer_prep(plan.control_prep, offset, width);
        std::vector<uint32_t> reg;
        for (size_t j = 1; j <= width; j++) {
            auto q = static_cast<uint32_t>(offset + j - 1);
            reg.push_back(q);
            plan.gates.push_back(ControlledPermGate{
                ControlCondition::qubit(n, q),
                {q},
                Permutation::from_cycles(k, {{static_cast<uint32_t>(j), static_cast<uint32_t>(layer)}}),
                "(" + std::to_string(j) + " " + std::to_string(layer) + ")"});
        }
        plan.registers.push_back(std::move(reg));
        offset += static_cast<uint32_t>(width);
    }
    plan.control_prep_description = "|+>_{S_i} on layer registers of 1.." + std::to_string(k - 1) +
                                    " qubits via U_i and T_{j,j+1}";
    plan.accept_description = "project each layer register onto its prepared state";
    return plan;
}

Permutation dihedral_flip(size_t k) {
    return polygon_reflection(k, k % 2 == 1 ? 2 : 3);
}

CircuitPlan build_dihedral(size_t k, size_t d) {
    check_plan_args(k, d, 3, "build_dihedral");
    size_t m = ceil_log2(k);
    size_t n = m + 1;
    CircuitPlan plan{ControlKind::DihedralBinary, GroupSpec::dihedral(k), k, d, size_t{1} << n, n, {}, {}, {}, "", ""};
    append_rotation_gates(plan, k, n);
    auto flip_qubit = static_cast<uint32_t>(m);
    plan.gates.push_back(
        ControlledPermGate{ControlCondition::qubit(n, flip_qubit), {flip_qubit}, dihedral_flip(k), "flip"});
    plan.control_prep.push_back(single(flip_qubit, hadamard(), "H"));
    plan.registers.push_back({flip_qubit});
    plan.control_prep_description = "|+> on " + std::to_string(m) + " rotation qubits and 1 flip qubit";
    plan.accept_description = "project every control qubit onto |+>";
    return plan;
}

CircuitPlan build_qudit_exact(const GroupSpec &spec, size_t d) {
    auto group = realize(spec);
    CircuitPlan plan{ControlKind::QuditExact, spec, group.degree(), d, group.order(), 0, {}, {}, {}, "", ""};
    if (d < 1) {
        throw std::invalid_argument("build_qudit_exact: local dimension must be at least 1");
    }
    for (size_t v = 0; v < group.order(); v++) {
        const auto &g = group.elements()[v];
        if (g.is_identity()) {
            continue;
        }
        plan.gates.push_back(ControlledPermGate{ControlCondition::qudit_value(v), {}, g, g.str()});
    }
    plan.control_prep_description = "uniform superposition over " + std::to_string(group.order()) + " group labels";
    plan.accept_description = "project the control qudit onto the uniform superposition";
    return plan;
}

CircuitPlan build_plan(const GroupSpec &spec, size_t d) {
    size_t k = spec.parameter();
    switch (spec.family()) {
        case GroupFamily::Symmetric:
            if (k >= 2) {
                return build_symmetric_recursive(k, d);
            }
            break;
        case GroupFamily::Cyclic:
            if (k >= 2) {
                return build_cyclic_binary(k, d);
            }
            break;
        case GroupFamily::Dihedral:
            return build_dihedral(k, d);
        default:
            break;
    }
    return build_qudit_exact(spec, d);
}

nlohmann::json plan_to_json(const CircuitPlan &plan) {
    nlohmann::json gates = nlohmann::json::array();
    size_t total = 0;
    for (const auto &gate : plan.gates) {
        nlohmann::json control;
        if (gate.control_qubits.empty()) {
            control["value"] = gate.control.value;
        } else {
            control["qubits"] = gate.control_qubits;
        }
        size_t swaps = gate.swap_count();
        total += swaps;
        gates.push_back({{"label", gate.label}, {"control", control}, {"permutation", gate.action.str()},
                         {"swaps", swaps}});
    }
    nlohmann::json prep = nlohmann::json::array();
    for (const auto &op : plan.control_prep) {
        prep.push_back({{"label", op.label}, {"qubits", op.qubits}});
    }
    return {
        {"kind", control_kind_name(plan.kind)},
        {"group", plan.group.str()},
        {"copies", plan.copies},
        {"local_dim", plan.local_dim},
        {"control_dim", plan.control_dim},
        {"control_qubits", plan.control_qubits},
        {"registers", plan.registers},
        {"control_prep", prep},
        {"control_prep_description", plan.control_prep_description},
        {"gates", gates},
        {"total_swaps", total},
        {"accept", plan.accept_description},
    };
}

}  // namespace cyclesep
