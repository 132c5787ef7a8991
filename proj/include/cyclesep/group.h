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

#ifndef CYCLESEP_GROUP_H
#define CYCLESEP_GROUP_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cyclesep/permutation.h"

namespace cyclesep {

enum class GroupFamily {
    Identity,
    Symmetric,
    Cyclic,
    Dihedral,
    Alternating,
    Quaternion,
    ProductCyclic,
    Generators,
};

/// Selects the group a symmetry test averages over: a named family with its
/// parameter, or an explicit list of generating permutations.
///
/// Text form (see parse): "I:k", "S:k", "C:k", "D:k", "A:k", "Q8", "Zmk:m,k",
/// "gen:[(1 2 3),(1 2)]" or "gen:k:[...]" with an explicit degree.
class GroupSpec {
   public:
    static GroupSpec identity(size_t k);
    static GroupSpec symmetric(size_t k);
    static GroupSpec cyclic(size_t k);
    static GroupSpec dihedral(size_t k);
    static GroupSpec alternating(size_t k);
    static GroupSpec quaternion();
    /// Z_m^copies acting regularly on its m^copies elements.
    static GroupSpec product_cyclic(size_t modulus, size_t copies);
    static GroupSpec generators(std::vector<Permutation> gens);

    /// Parameterized family constructor used for sweeps ("S", "C", "D", "A", "I").
    static GroupSpec family_member(GroupFamily family, size_t k);

    static GroupSpec parse(std::string_view text);

    GroupFamily family() const {
        return family_;
    }
    /// Number of points acted on.
    size_t degree() const;
    size_t parameter() const {
        return k_;
    }
    size_t modulus() const {
        return m_;
    }
    const std::vector<Permutation> &generator_list() const {
        return gens_;
    }
    bool is_named() const {
        return family_ != GroupFamily::Generators;
    }

    std::string str() const;

    bool operator==(const GroupSpec &other) const = default;

   private:
    GroupSpec(GroupFamily family, size_t k, size_t m) : family_(family), k_(k), m_(m) {
    }

    GroupFamily family_ = GroupFamily::Identity;
    size_t k_ = 0;
    size_t m_ = 0;
    std::vector<Permutation> gens_;
};

std::string family_letter(GroupFamily family);
/// Inverse of family_letter for the parameterized families.
GroupFamily parse_family(std::string_view letter);

/// A finite permutation group, stored as its full deduplicated element list.
class PermutationGroup {
   public:
    PermutationGroup(size_t degree, std::vector<Permutation> elements);

    size_t degree() const {
        return degree_;
    }
    size_t order() const {
        return elements_.size();
    }
    const std::vector<Permutation> &elements() const {
        return elements_;
    }
    bool contains(const Permutation &p) const;
    /// Checks identity membership, closure under products and inverses.
    bool is_closed() const;

   private:
    size_t degree_;
    std::vector<Permutation> elements_;
};

inline constexpr size_t kDefaultElementCap = 1'000'000;

/// Builds the full element list. Throws CapExceeded ("group too large") when the
/// order would exceed `element_cap`.
PermutationGroup realize(const GroupSpec &spec, size_t element_cap = kDefaultElementCap);

/// Breadth-first closure of the generators under composition.
PermutationGroup generate_closure(size_t degree, const std::vector<Permutation> &gens,
                                  size_t element_cap = kDefaultElementCap);

/// Order of the group without building it (closure for Generators).
Integer group_order(const GroupSpec &spec);

/// The eight elements {1,-1,i,-i,j,-j,k,-k} of Q8 inside S_8.
std::vector<Permutation> quaternion_elements();

/// Reflection of the labeled k-gon i -> axis - i (mod k), one-based labels.
Permutation polygon_reflection(size_t k, size_t axis);

}  // namespace cyclesep

#endif
