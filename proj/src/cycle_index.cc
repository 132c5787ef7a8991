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

#include "cyclesep/cycle_index.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cyclesep/errors.h"

namespace cyclesep {

namespace {

constexpr uint64_t kMaxPartitionTerms = 250'000;

CycleType single_length(uint32_t length, uint32_t count) {
    return CycleType(static_cast<size_t>(length) * count, {{length, count}});
}

CycleType two_lengths(uint32_t l1, uint32_t c1, uint32_t l2, uint32_t c2) {
    return CycleType(static_cast<size_t>(l1) * c1 + static_cast<size_t>(l2) * c2, {{l1, c1}, {l2, c2}});
}

void add(std::unordered_map<CycleType, Rational> &terms, const CycleType &type, const Rational &coef) {
    terms[type] += coef;
}

// sum_{d | k} phi(d) x_d^{k/d}, scaled by `scale`.
void add_rotations(std::unordered_map<CycleType, Rational> &terms, size_t k, const Rational &scale) {
    for (uint64_t d : divisors(k)) {
        add(terms, single_length(static_cast<uint32_t>(d), static_cast<uint32_t>(k / d)),
            scale * Integer(euler_phi(d)));
    }
}

Rational symmetric_weight(const CycleType &type) {
    Integer denom = 1;
    for (const auto &[length, count] : type.counts()) {
        denom *= int_pow(Integer(length), count) * factorial(count);
    }
    return Rational(Integer(1), denom);
}

void check_partition_terms(size_t k) {
    if (partition_count(k) > kMaxPartitionTerms) {
        throw CapExceeded("closed form for degree " + std::to_string(k) + " needs " +
                          std::to_string(partition_count(k)) + " partition terms (cap " +
                          std::to_string(kMaxPartitionTerms) + ")");
    }
}

}  // namespace

CycleIndexPolynomial::CycleIndexPolynomial(size_t degree, std::unordered_map<CycleType, Rational> terms)
    : degree_(degree) {
    for (auto &[type, coef] : terms) {
        if (type.degree() != degree) {
            throw std::invalid_argument("CycleIndexPolynomial: term " + type.str() + " has the wrong degree");
        }
        if (coef < 0) {
            throw std::invalid_argument("CycleIndexPolynomial: negative coefficient");
        }
        if (coef == 0) {
            continue;
        }
        max_variable_ = std::max<size_t>(max_variable_, type.max_length());
        terms_.emplace(type, coef);
    }
    sorted_.assign(terms_.begin(), terms_.end());
    std::sort(sorted_.begin(), sorted_.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    float_coefficients_.reserve(sorted_.size());
    for (const auto &[type, coef] : sorted_) {
        float_coefficients_.push_back(to_double(coef));
    }
}

Rational CycleIndexPolynomial::coefficient(const CycleType &type) const {
    auto it = terms_.find(type);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational CycleIndexPolynomial::coefficient_sum() const {
    Rational total = 0;
    for (const auto &[type, coef] : sorted_) {
        total += coef;
    }
    return total;
}

CycleIndexPolynomial cycle_index(const PermutationGroup &group) {
    std::unordered_map<CycleType, Integer> counts;
    for (const auto &g : group.elements()) {
        counts[g.cycle_type()] += 1;
    }
    std::unordered_map<CycleType, Rational> terms;
    Integer order = group.order();
    for (auto &[type, count] : counts) {
        terms.emplace(type, Rational(count, order));
    }
    return CycleIndexPolynomial(group.degree(), std::move(terms));
}

CycleIndexPolynomial cycle_index_closed_form(const GroupSpec &spec) {
    size_t k = spec.parameter();
    std::unordered_map<CycleType, Rational> terms;
    switch (spec.family()) {
        case GroupFamily::Identity:
            add(terms, single_length(1, static_cast<uint32_t>(k)), 1);
            break;
        case GroupFamily::Symmetric:
            check_partition_terms(k);
            for (const auto &type : partitions(k)) {
                add(terms, type, symmetric_weight(type));
            }
            break;
        case GroupFamily::Alternating:
            if (k == 1) {
                // A_1 = S_1; the parity-doubling below assumes index 2.
                add(terms, single_length(1, 1), 1);
                break;
            }
            check_partition_terms(k);
            for (const auto &type : partitions(k)) {
                // (1 + (-1)^{a_2 + a_4 + ...}) / prod_j j^{a_j} a_j!
                if (type.is_even()) {
                    add(terms, type, 2 * symmetric_weight(type));
                }
            }
            break;
        case GroupFamily::Cyclic:
            add_rotations(terms, k, Rational(Integer(1), Integer(k)));
            break;
        case GroupFamily::Dihedral: {
            auto kk = static_cast<uint32_t>(k);
            add_rotations(terms, k, Rational(Integer(1), Integer(2 * k)));
            if (k % 2 == 0) {
                add(terms, two_lengths(1, 2, 2, (kk - 2) / 2), Rational(1, 4));
                add(terms, single_length(2, kk / 2), Rational(1, 4));
            } else {
                add(terms, two_lengths(1, 1, 2, (kk - 1) / 2), Rational(1, 2));
            }
            break;
        }
        case GroupFamily::Quaternion:
            add(terms, single_length(1, 8), Rational(1, 8));
            add(terms, single_length(2, 4), Rational(1, 8));
            add(terms, single_length(4, 2), Rational(6, 8));
            break;
        case GroupFamily::ProductCyclic: {
            // Translations of Z_m^k are fixed-point free, so an element of
            // order n is a product of N/n disjoint n-cycles. There are J_k(n)
            // elements of order n (Jordan's totient).
            size_t m = spec.modulus();
            size_t n_points = spec.degree();
            Integer order = n_points;
            for (uint64_t n : divisors(m)) {
                add(terms, single_length(static_cast<uint32_t>(n), static_cast<uint32_t>(n_points / n)),
                    Rational(jordan_totient(n, k), order));
            }
            break;
        }
        case GroupFamily::Generators:
            throw std::invalid_argument("cycle_index_closed_form: no closed form for an explicit generator list");
    }
    return CycleIndexPolynomial(spec.degree(), std::move(terms));
}

CycleIndexPolynomial cycle_index_of(const GroupSpec &spec) {
    if (spec.is_named()) {
        return cycle_index_closed_form(spec);
    }
    return cycle_index(realize(spec));
}

double evaluate(const CycleIndexPolynomial &z, std::span<const double> x) {
    if (x.size() < z.max_variable()) {
        throw std::invalid_argument("evaluate: x_" + std::to_string(z.max_variable()) +
                                    " is required but only " + std::to_string(x.size()) + " values were given");
    }
    double total = 0;
    for (size_t i = 0; i < z.sorted_.size(); i++) {
        double term = z.float_coefficients_[i];
        for (const auto &[length, count] : z.sorted_[i].first.counts()) {
            term *= std::pow(x[length - 1], static_cast<double>(count));
        }
        total += term;
    }
    return total;
}

Rational evaluate_exact(const CycleIndexPolynomial &z, std::span<const Rational> x) {
    if (x.size() < z.max_variable()) {
        throw std::invalid_argument("evaluate_exact: x_" + std::to_string(z.max_variable()) + " is required");
    }
    Rational total = 0;
    for (const auto &[type, coef] : z.sorted_terms()) {
        Rational term = coef;
        for (const auto &[length, count] : type.counts()) {
            term *= rational_pow(x[length - 1], count);
        }
        total += term;
    }
    return total;
}

Rational polya_colorings(const CycleIndexPolynomial &z, uint64_t r) {
    Rational total = 0;
    for (const auto &[type, coef] : z.sorted_terms()) {
        total += coef * int_pow(Integer(r), type.num_cycles());
    }
    return total;
}

}  // namespace cyclesep
