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

#include "cyclesep/resources.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cyclesep/accept.h"
#include "cyclesep/exact.h"

namespace cyclesep {

namespace {

double ceil_log2(size_t k) {
    return std::ceil(std::log2(static_cast<double>(k)));
}

}  // namespace

uint64_t count_gates(const CircuitPlan &plan) {
    uint64_t total = 0;
    for (const auto &gate : plan.gates) {
        total += gate.swap_count();
    }
    return total;
}

double closed_form_count(GroupFamily family, size_t k) {
    auto kd = static_cast<double>(k);
    switch (family) {
        case GroupFamily::Symmetric:
            return kd * (kd - 1) / 2;
        case GroupFamily::Cyclic:
            return (kd - 1) * std::log2(kd);
        case GroupFamily::Dihedral:
            return 2 * kd * std::log2(kd);
        default:
            throw std::invalid_argument("closed_form_count: no gate formula for family " + family_letter(family));
    }
}

double depth_estimate(const CircuitPlan &plan) {
    switch (plan.kind) {
        case ControlKind::CyclicBinary:
            return ceil_log2(plan.copies) + 2;
        case ControlKind::DihedralBinary:
            return ceil_log2(plan.copies) + 3;
        default:
            return static_cast<double>(plan.gates.size());
    }
}

ResourceRow resource_row(const GroupSpec &spec, const Spectrum &s) {
    size_t k = spec.degree();
    CircuitPlan plan = build_plan(spec, std::max<size_t>(1, s.rank()));
    ResourceRow row{spec, k, count_gates(plan), 0, depth_estimate(plan), 0, 0, std::nullopt};
    row.cswap_closed_form = closed_form_count(spec.family(), k);
    row.p_acc = accept_group(spec, s).value;
    row.rejection = rejection_probability(spec, s);
    if (row.rejection > 0) {
        row.ratio = static_cast<double>(row.cswap_count) / row.rejection;
    }
    return row;
}

std::vector<ResourceRow> sweep(const std::vector<GroupFamily> &families, const Spectrum &s, size_t k_min,
                               size_t k_max) {
    if (k_min > k_max) {
        throw std::invalid_argument("sweep: empty k range");
    }
    std::vector<ResourceRow> rows;
    for (GroupFamily family : families) {
        closed_form_count(family, 2);
        size_t lowest = family == GroupFamily::Dihedral ? 3 : 2;
        for (size_t k = std::max(k_min, lowest); k <= k_max; k++) {
            rows.push_back(resource_row(GroupSpec::family_member(family, k), s));
        }
    }
    return rows;
}

void write_csv(const std::vector<ResourceRow> &rows, std::ostream &out) {
    out << "group,k,cswap_actual,cswap_formula,depth,p_acc,ratio\n";
    for (const auto &row : rows) {
        out << family_letter(row.group.family()) << ',' << row.k << ',' << row.cswap_count << ','
            << format_real(row.cswap_closed_form) << ',' << format_real(row.depth_estimate) << ','
            << format_real(row.p_acc) << ',' << (row.ratio ? format_real(*row.ratio) : std::string("NA")) << '\n';
    }
}

}  // namespace cyclesep
