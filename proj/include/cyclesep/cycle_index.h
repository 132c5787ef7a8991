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

#ifndef CYCLESEP_CYCLE_INDEX_H
#define CYCLESEP_CYCLE_INDEX_H

#include <cstddef>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cyclesep/exact.h"
#include "cyclesep/group.h"
#include "cyclesep/permutation.h"

namespace cyclesep {

/// Z(G) = (1/|G|) sum_g prod_j x_j^{c_j(g)}, kept as exact rational
/// coefficients keyed by cycle type. Immutable once built.
class CycleIndexPolynomial {
   public:
    /// Zero coefficients are dropped; negative ones and keys of the wrong
    /// degree are rejected.
    CycleIndexPolynomial(size_t degree, std::unordered_map<CycleType, Rational> terms);

    size_t degree() const {
        return degree_;
    }
    const std::unordered_map<CycleType, Rational> &terms() const {
        return terms_;
    }
    /// Terms ordered by cycle type (identity type first).
    const std::vector<std::pair<CycleType, Rational>> &sorted_terms() const {
        return sorted_;
    }
    Rational coefficient(const CycleType &type) const;
    Rational coefficient_sum() const;
    /// Largest j with x_j appearing in some term.
    size_t max_variable() const {
        return max_variable_;
    }

    bool operator==(const CycleIndexPolynomial &other) const {
        return degree_ == other.degree_ && terms_ == other.terms_;
    }

   private:
    size_t degree_;
    size_t max_variable_ = 0;
    std::unordered_map<CycleType, Rational> terms_;
    std::vector<std::pair<CycleType, Rational>> sorted_;
    std::vector<double> float_coefficients_;

    friend double evaluate(const CycleIndexPolynomial &z, std::span<const double> x);
};

/// Counts cycle types over the element list.
CycleIndexPolynomial cycle_index(const PermutationGroup &group);

/// Builds Z(G) from the family's closed-form sum, without enumerating the
/// group. Throws std::invalid_argument for explicit generator lists, and
/// CapExceeded when the partition sum for S_k / A_k would be too large.
CycleIndexPolynomial cycle_index_closed_form(const GroupSpec &spec);

/// Closed form for named families, enumeration of the realized group otherwise.
CycleIndexPolynomial cycle_index_of(const GroupSpec &spec);

/// x[j-1] holds x_j. Throws std::invalid_argument when a variable used by the
/// polynomial is missing.
double evaluate(const CycleIndexPolynomial &z, std::span<const double> x);
Rational evaluate_exact(const CycleIndexPolynomial &z, std::span<const Rational> x);

/// Number of colorings of the points with r colors, up to the group action.
Rational polya_colorings(const CycleIndexPolynomial &z, uint64_t r);

}  // namespace cyclesep

#endif
