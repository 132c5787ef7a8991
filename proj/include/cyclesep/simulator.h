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

#ifndef CYCLESEP_SIMULATOR_H
#define CYCLESEP_SIMULATOR_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "cyclesep/circuits.h"
#include "cyclesep/group.h"
#include "cyclesep/permutation.h"
#include "cyclesep/states.h"

namespace cyclesep {

/// Largest d^k for which the dense projector is built.
inline constexpr uint64_t kProjectorDimCap = 4096;
/// Largest (control dimension) x d^k handled by the statevector simulator.
inline constexpr uint64_t kStatevectorDimCap = uint64_t{1} << 22;

/// d^k, or CapExceeded if it passes `cap`.
uint64_t tensor_dim(size_t d, size_t k, uint64_t cap);

/// Basis-index action of W(pi) on (C^d)^{(x)k}: tensor slot s moves to slot
/// pi(s). Slot 0 is the most significant base-d digit.
std::vector<uint32_t> tensor_permutation_map(const Permutation &pi, size_t d);

/// Pi_G = (1/|G|) sum_g W(g) as a dense d^k x d^k matrix.
Eigen::MatrixXd projector_matrix(const PermutationGroup &group, size_t d);

/// tr[Pi_G rho^{(x)k}] for an arbitrary d x d density matrix.
double projector_trace(const PermutationGroup &group, const Eigen::MatrixXcd &rho);

/// tr[Pi_G rho^{(x)k}] with rho = diag(spectrum padded to d). Throws
/// std::invalid_argument if the group degree is not k or the spectrum has
/// more than d nonzero eigenvalues, CapExceeded if d^k > kProjectorDimCap.
double projector_trace(const GroupSpec &spec, const Spectrum &s, size_t k, size_t d);

/// Runs the plan on rho^{(x)k}, rho = diag(spectrum padded to plan.local_dim),
/// as a mixture over product basis inputs, and returns the probability that
/// the control register is found back in its prepared state.
double simulate(const CircuitPlan &plan, const Spectrum &s);

/// |simulate(build_cyclic_binary(k, d)) - Z(C_k)(t)| with d = max(2, rank).
double binary_discrepancy(size_t k, const Spectrum &s);

}  // namespace cyclesep

#endif
