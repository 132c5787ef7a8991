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

#ifndef CYCLESEP_RESOURCES_H
#define CYCLESEP_RESOURCES_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "cyclesep/circuits.h"
#include "cyclesep/group.h"
#include "cyclesep/states.h"

namespace cyclesep {

/// Controlled-SWAPs in the plan: the transposition count of every gate.
uint64_t count_gates(const CircuitPlan &plan);

/// Textbook controlled-SWAP estimates: k(k-1)/2 for S_k, (k-1) log2 k for C_k
/// and 2k log2 k for D_k (an upper bound). Throws std::invalid_argument for
/// other families.
double closed_form_count(GroupFamily family, size_t k);

/// Depth estimate: ceil(log2 k) + 2 for C_k (GHZ-assisted fan-out),
/// ceil(log2 k) + 3 for D_k, and the sequential gate count for S_k.
double depth_estimate(const CircuitPlan &plan);

struct ResourceRow {
    GroupSpec group;
    size_t k;
    uint64_t cswap_count;
    double cswap_closed_form;
    double depth_estimate;
    double p_acc;
    /// 1 - p_acc, evaluated without cancellation.
    double rejection;
    /// cswap_count / (1 - p_acc); empty when the test never rejects.
    std::optional<double> ratio;
};

ResourceRow resource_row(const GroupSpec &spec, const Spectrum &s);

/// One row per (family, k), family-major in the given order, k ascending.
/// Pairs without a circuit (k < 2, or k < 3 for D) are skipped.
std::vector<ResourceRow> sweep(const std::vector<GroupFamily> &families, const Spectrum &s, size_t k_min,
                               size_t k_max);

/// Header "group,k,cswap_actual,cswap_formula,depth,p_acc,ratio"; reals in
/// 12 significant digits; "NA" for an undefined ratio.
void write_csv(const std::vector<ResourceRow> &rows, std::ostream &out);

}  // namespace cyclesep

#endif
