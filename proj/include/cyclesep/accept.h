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

#ifndef CYCLESEP_ACCEPT_H
#define CYCLESEP_ACCEPT_H

#include <cstddef>
#include <string>
#include <vector>

#include "cyclesep/cycle_index.h"
#include "cyclesep/group.h"
#include "cyclesep/states.h"

namespace cyclesep {

enum class AcceptMethod {
    PartitionSum,
    Recurrence,
    Bell,
    Determinant,
    Permanent,
    ClosedForm,
    Simulation,
};

std::string method_name(AcceptMethod method);
AcceptMethod parse_method(const std::string &name);

/// Acceptance probability p_G = tr[Pi_G rho^{(x)k}] of one symmetry test.
struct AcceptanceReport {
    GroupSpec group;
    size_t k;
    double value;
    AcceptMethod method;
};

// Symmetric-group acceptance probability p^(k) by five independent routes.
// All take power traces t_1..t_K with K >= k.

/// sum over partitions of k of prod_j t_j^{a_j} / (j^{a_j} a_j!).
double accept_symmetric_partition(const PowerTraces &t, size_t k);
/// p^(k) = (1/k) sum_{j=1}^k t_j p^(k-j), with p^(0) = 1.
double accept_symmetric_recurrence(const PowerTraces &t, size_t k);
/// B_k(x_1, ..., x_k) / k! with x_j = (j-1)! t_j. Needs k <= 170.
double accept_symmetric_bell(const PowerTraces &t, size_t k);
/// det(D_k) / k! by partial-pivot LU. For k above kDeterminantMaxK the
/// recurrence value is returned instead.
double accept_symmetric_determinant(const PowerTraces &t, size_t k);
/// perm(P_k) / k! by Ryser's formula in Gray-code order. k <= kPermanentMaxK.
double accept_symmetric_permanent(const PowerTraces &t, size_t k);

inline constexpr size_t kDeterminantMaxK = 12;
inline constexpr size_t kPermanentMaxK = 12;
inline constexpr size_t kBellMaxK = 170;

/// The matrices whose determinant / permanent give k! p^(k): t_{i-j+1} on and
/// below the diagonal, and -i (D_k) or +i (P_k) on the superdiagonal of row i.
Eigen::MatrixXd newton_determinant_matrix(const PowerTraces &t, size_t k);
Eigen::MatrixXd newton_permanent_matrix(const PowerTraces &t, size_t k);
double permanent(const Eigen::MatrixXd &a);

/// p^(0), p^(1), ..., p^(k_max) by the recurrence.
std::vector<double> symmetric_sequence(const PowerTraces &t, size_t k_max);

/// Z(G) evaluated at the power traces. Uses the closed form for named families
/// (method ClosedForm) and enumeration otherwise (method PartitionSum).
AcceptanceReport accept_group(const GroupSpec &spec, const PowerTraces &t);
AcceptanceReport accept_group(const GroupSpec &spec, const Spectrum &s);

/// 1 - p_G, computed term by term so that it stays accurate for nearly pure
/// spectra: 1 - Z(G)(t) = sum_types c * (1 - prod_j t_j^{a_j}).
double rejection_probability(const CycleIndexPolynomial &z, const Spectrum &s);
double rejection_probability(const GroupSpec &spec, const Spectrum &s);

/// (1/k) sum_j t_j written as sum_i (1/k) ((1 - lambda_i^{k+1}) / (1 - lambda_i) - 1).
/// Upper-bounds p^(k); 1 for a pure spectrum.
double acceptance_upper_bound(const Spectrum &s, size_t k);

/// Whether p(k_min), p(k_min+1), ..., p(k_max) decreases strictly for a
/// parameterized family. Informational for families other than S_k.
struct MonotonicityReport {
    GroupFamily family;
    std::vector<double> values;  // values[i] = p at k_min + i
    bool strictly_decreasing;
};
MonotonicityReport check_monotonicity(GroupFamily family, const Spectrum &s, size_t k_min, size_t k_max);

}  // namespace cyclesep

#endif
