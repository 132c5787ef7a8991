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

#ifndef CYCLESEP_PERMUTATION_H
#define CYCLESEP_PERMUTATION_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclesep/exact.h"

namespace cyclesep {

class CycleType;

/// A bijection on {1, ..., k}, stored densely as zero-based images.
///
/// Cycle notation and the `from_*` helpers use one-based labels, like the
/// usual textbook notation; `operator[]` and `images()` are zero-based.
/// Products compose right to left: (p * q)(i) = p(q(i)).
class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<uint32_t> zero_based_images);

    static Permutation identity(size_t degree);
    static Permutation from_one_based(std::span<const uint32_t> images);
    static Permutation from_cycles(size_t degree, const std::vector<std::vector<uint32_t>> &cycles);
    /// The full cycle (1 2 ... k).
    static Permutation rotation(size_t degree);
    /// Parses cycle notation such as "(1 2 3)(4 5)"; "()" or "e" is the identity.
    static Permutation parse(std::string_view text, size_t degree);

    size_t degree() const {
        return images_.size();
    }
    uint32_t operator[](size_t i) const {
        return images_[i];
    }
    std::span<const uint32_t> images() const {
        return images_;
    }

    Permutation inverse() const;
    Permutation pow(int64_t exponent) const;
    bool is_identity() const;
    bool is_even() const;
    /// Multiplicative order (lcm of cycle lengths).
    uint64_t order() const;

    /// Nontrivial cycles, one-based, each rotated to start at its smallest label.
    std::vector<std::vector<uint32_t>> cycles() const;
    CycleType cycle_type() const;

    /// Transpositions whose product (applied in the returned order) equals this
    /// permutation. An m-cycle (i1 ... im) contributes (i1 i2), (i1 i3), ...,
    /// (i1 im), so it costs m - 1 SWAPs. One-based labels.
    std::vector<std::pair<uint32_t, uint32_t>> transpositions() const;

    /// Cycle notation, e.g. "(1 2 3)(4 5)"; the identity prints as "()".
    std::string str() const;

    bool operator==(const Permutation &other) const = default;
    auto operator<=>(const Permutation &other) const = default;

   private:
    std::vector<uint32_t> images_;
};

/// p * q, i.e. i -> p(q(i)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation &p, const Permutation &q);
inline Permutation operator*(const Permutation &p, const Permutation &q) {
    return compose(p, q);
}

/// Multiset of cycle lengths of a permutation of {1..k}: counts[j] = a_j, the
/// number of j-cycles (fixed points are 1-cycles). Zero counts are never stored.
class CycleType {
   public:
    CycleType() = default;
    CycleType(size_t degree, std::map<uint32_t, uint32_t> counts);
    static CycleType from_parts(std::span<const uint32_t> parts);

    size_t degree() const {
        return degree_;
    }
    const std::map<uint32_t, uint32_t> &counts() const {
        return counts_;
    }
    uint32_t count(uint32_t length) const;
    uint32_t max_length() const;
    size_t num_cycles() const;
    /// Parts in descending order, e.g. {1:2, 2:1} -> [2, 1, 1].
    std::vector<uint32_t> parts() const;
    /// Sign of any permutation with this type: even iff a_2 + a_4 + ... is even.
    bool is_even() const;

    /// Exponent notation, e.g. "1^2 2^1".
    std::string str() const;

    bool operator==(const CycleType &other) const = default;
    /// Orders by descending part list, lexicographically (so 1^k comes first).
    std::strong_ordering operator<=>(const CycleType &other) const;

   private:
    size_t degree_ = 0;
    std::map<uint32_t, uint32_t> counts_;
};

/// Number of elements of S_k with the given cycle type: k! / prod_j j^{a_j} a_j!.
Integer cycle_count(const CycleType &type);

/// All integer partitions of k, each once, ordered lexicographically descending
/// on their descending part lists: k, (k-1)+1, ..., 1+...+1.
std::vector<CycleType> partitions(size_t k);

/// Number of partitions of k, without enumerating them.
uint64_t partition_count(size_t k);

uint64_t euler_phi(uint64_t m);
/// Jordan's totient J_e(n): number of elements of order exactly n in Z_n^e.
Integer jordan_totient(uint64_t n, uint64_t e);
std::vector<uint64_t> divisors(uint64_t n);

size_t hash_combine(size_t seed, size_t value);

}  // namespace cyclesep

template <>
struct std::hash<cyclesep::CycleType> {
    size_t operator()(const cyclesep::CycleType &type) const noexcept;
};

template <>
struct std::hash<cyclesep::Permutation> {
    size_t operator()(const cyclesep::Permutation &perm) const noexcept;
};

#endif
