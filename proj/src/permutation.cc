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

#include "cyclesep/permutation.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cyclesep {

size_t hash_combine(size_t seed, size_t value) {
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

namespace {

void partitions_rec(uint32_t remaining, uint32_t max_part, std::vector<uint32_t> &prefix,
                    std::vector<CycleType> &out) {
    if (remaining == 0) {
        out.push_back(CycleType::from_parts(prefix));
        return;
    }
    for (uint32_t part = std::min(remaining, max_part); part >= 1; part--) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

Permutation::Permutation(std::vector<uint32_t> zero_based_images) : images_(std::move(zero_based_images)) {
    std::vector<bool> seen(images_.size(), false);
    for (uint32_t v : images_) {
        if (v >= images_.size() || seen[v]) {
            throw std::invalid_argument("Permutation: images are not a bijection on {1..k}");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(size_t degree) {
    std::vector<uint32_t> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(std::span<const uint32_t> images) {
    std::vector<uint32_t> zero(images.size());
    for (size_t i = 0; i < images.size(); i++) {
        if (images[i] == 0) {
            throw std::invalid_argument("Permutation: one-based image 0");
        }
        zero[i] = images[i] - 1;
    }
    return Permutation(std::move(zero));
}

Permutation Permutation::from_cycles(size_t degree, const std::vector<std::vector<uint32_t>> &cycles) {
    std::vector<uint32_t> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    std::vector<bool> used(degree, false);
    for (const auto &cycle : cycles) {
        for (size_t i = 0; i < cycle.size(); i++) {
            uint32_t a = cycle[i];
            if (a < 1 || a > degree) {
                throw std::invalid_argument("Permutation: cycle label " + std::to_string(a) + " outside 1.." +
                                            std::to_string(degree));
            }
            if (used[a - 1]) {
                throw std::invalid_argument("Permutation: label " + std::to_string(a) + " repeated in cycles");
            }
            used[a - 1] = true;
            images[a - 1] = cycle[(i + 1) % cycle.size()] - 1;
        }
    }
    return Permutation(std::move(images));
}

Permutation Permutation::rotation(size_t degree) {
    std::vector<uint32_t> images(degree);
    for (size_t i = 0; i < degree; i++) {
        images[i] = static_cast<uint32_t>((i + 1) % degree);
    }
    return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, size_t degree) {
    std::vector<std::vector<uint32_t>> cycles;
    size_t i = 0;
    auto skip_space = [&]() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            i++;
        }
    };
    skip_space();
    if (text.substr(i) == "e") {
        return identity(degree);
    }
    while (true) {
        skip_space();
        if (i >= text.size()) {
            break;
        }
        if (text[i] != '(') {
            throw std::invalid_argument("Permutation: expected '(' in \"" + std::string(text) + "\"");
        }
        i++;
        std::vector<uint32_t> cycle;
        while (true) {
            while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) {
                i++;
            }
            if (i >= text.size()) {
                throw std::invalid_argument("Permutation: unterminated cycle in \"" + std::string(text) + "\"");
            }
            if (text[i] == ')') {
                i++;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
                throw std::invalid_argument("Permutation: unexpected character in \"" + std::string(text) + "\"");
            }
            uint64_t v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + static_cast<uint64_t>(text[i] - '0');
                if (v > 0xFFFFFFFFu) {
                    throw std::invalid_argument("Permutation: label too large");
                }
                i++;
            }
            cycle.push_back(static_cast<uint32_t>(v));
        }
        if (cycle.size() > 1) {
            cycles.push_back(std::move(cycle));
        } else if (cycle.size() == 1 && (cycle[0] < 1 || cycle[0] > degree)) {
            throw std::invalid_argument("Permutation: label outside 1..k");
        }
    }
    return from_cycles(degree, cycles);
}

Permutation Permutation::inverse() const {
    std::vector<uint32_t> inv(images_.size());
    for (size_t i = 0; i < images_.size(); i++) {
        inv[images_[i]] = static_cast<uint32_t>(i);
    }
    return Permutation(std::move(inv));
}

Permutation Permutation::pow(int64_t exponent) const {
    Permutation base = exponent < 0 ? inverse() : *this;
    uint64_t e = exponent < 0 ? static_cast<uint64_t>(-exponent) : static_cast<uint64_t>(exponent);
    Permutation result = identity(degree());
    while (e) {
        if (e & 1) {
            result = compose(result, base);
        }
        e >>= 1;
        if (e) {
            base = compose(base, base);
        }
    }
    return result;
}

bool Permutation::is_identity() const {
    for (size_t i = 0; i < images_.size(); i++) {
        if (images_[i] != i) {
            return false;
        }
    }
    return true;
}

bool Permutation::is_even() const {
    return cycle_type().is_even();
}

uint64_t Permutation::order() const {
    uint64_t result = 1;
    CycleType type = cycle_type();
    for (const auto &[length, count] : type.counts()) {
        result = std::lcm(result, static_cast<uint64_t>(length));
    }
    return result;
}

std::vector<std::vector<uint32_t>> Permutation::cycles() const {
    std::vector<std::vector<uint32_t>> result;
    std::vector<bool> seen(images_.size(), false);
    for (uint32_t start = 0; start < images_.size(); start++) {
        if (seen[start] || images_[start] == start) {
            continue;
        }
        std::vector<uint32_t> cycle;
        for (uint32_t x = start; !seen[x]; x = images_[x]) {
            seen[x] = true;
            cycle.push_back(x + 1);
        }
        result.push_back(std::move(cycle));
    }
    return result;
}

CycleType Permutation::cycle_type() const {
    std::map<uint32_t, uint32_t> counts;
    std::vector<bool> seen(images_.size(), false);
    for (uint32_t start = 0; start < images_.size(); start++) {
        if (seen[start]) {
            continue;
        }
        uint32_t length = 0;
        for (uint32_t x = start; !seen[x]; x = images_[x]) {
            seen[x] = true;
            length++;
        }
        counts[length]++;
    }
    return CycleType(images_.size(), std::move(counts));
}

std::vector<std::pair<uint32_t, uint32_t>> Permutation::transpositions() const {
    std::vector<std::pair<uint32_t, uint32_t>> result;
    for (const auto &cycle : cycles()) {
        for (size_t i = 1; i < cycle.size(); i++) {
            result.emplace_back(cycle[0], cycle[i]);
        }
    }
    return result;
}

std::string Permutation::str() const {
    auto cs = cycles();
    if (cs.empty()) {
        return "()";
    }
    std::ostringstream out;
    for (const auto &cycle : cs) {
        out << '(';
        for (size_t i = 0; i < cycle.size(); i++) {
            if (i) {
                out << ' ';
            }
            out << cycle[i];
        }
        out << ')';
    }
    return out.str();
}

Permutation compose(const Permutation &p, const Permutation &q) {
    if (p.degree() != q.degree()) {
        throw std::invalid_argument("compose: degree mismatch (" + std::to_string(p.degree()) + " vs " +
                                    std::to_string(q.degree()) + ")");
    }
    std::vector<uint32_t> images(p.degree());
    for (size_t i = 0; i < images.size(); i++) {
        images[i] = p[q[i]];
    }
    return Permutation(std::move(images));
}

CycleType::CycleType(size_t degree, std::map<uint32_t, uint32_t> counts) : degree_(degree) {
    size_t total = 0;
    for (const auto &[length, count] : counts) {
        if (length == 0) {
            throw std::invalid_argument("CycleType: zero cycle length");
        }
        if (count != 0) {
            counts_.emplace(length, count);
            total += static_cast<size_t>(length) * count;
        }
    }
    if (total != degree) {
        throw std::invalid_argument("CycleType: sum of j*a_j is " + std::to_string(total) + ", expected " +
                                    std::to_string(degree));
    }
}

CycleType CycleType::from_parts(std::span<const uint32_t> parts) {
    std::map<uint32_t, uint32_t> counts;
    size_t degree = 0;
    for (uint32_t part : parts) {
        counts[part]++;
        degree += part;
    }
    return CycleType(degree, std::move(counts));
}

uint32_t CycleType::count(uint32_t length) const {
    auto it = counts_.find(length);
    return it == counts_.end() ? 0 : it->second;
}

uint32_t CycleType::max_length() const {
    return counts_.empty() ? 0 : counts_.rbegin()->first;
}

size_t CycleType::num_cycles() const {
    size_t n = 0;
    for (const auto &[length, count] : counts_) {
        n += count;
    }
    return n;
}

std::vector<uint32_t> CycleType::parts() const {
    std::vector<uint32_t> result;
    for (auto it = counts_.rbegin(); it != counts_.rend(); ++it) {
        result.insert(result.end(), it->second, it->first);
    }
    return result;
}

bool CycleType::is_even() const {
    uint64_t even_cycles = 0;
    for (const auto &[length, count] : counts_) {
        if (length % 2 == 0) {
            even_cycles += count;
        }
    }
    return even_cycles % 2 == 0;
}

std::string CycleType::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto &[length, count] : counts_) {
        if (!first) {
            out << ' ';
        }
        first = false;
        out << length << '^' << count;
    }
    return out.str();
}

std::strong_ordering CycleType::operator<=>(const CycleType &other) const {
    if (auto c = degree_ <=> other.degree_; c != 0) {
        return c;
    }
    auto a = parts();
    auto b = other.parts();
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

Integer cycle_count(const CycleType &type) {
    Integer denom = 1;
    for (const auto &[length, count] : type.counts()) {
        denom *= int_pow(Integer(length), count) * factorial(count);
    }
    return factorial(type.degree()) / denom;
}

std::vector<CycleType> partitions(size_t k) {
    if (k == 0) {
        throw std::invalid_argument("partitions: k must be at least 1");
    }
    std::vector<CycleType> out;
    std::vector<uint32_t> prefix;
    partitions_rec(static_cast<uint32_t>(k), static_cast<uint32_t>(k), prefix, out);
    return out;
}

uint64_t partition_count(size_t k) {
    std::vector<uint64_t> ways(k + 1, 0);
    ways[0] = 1;
    for (size_t part = 1; part <= k; part++) {
        for (size_t n = part; n <= k; n++) {
            ways[n] += ways[n - part];
        }
    }
    return ways[k];
}

uint64_t euler_phi(uint64_t m) {
    if (m == 0) {
        throw std::invalid_argument("euler_phi: m must be at least 1");
    }
    uint64_t result = m;
    uint64_t n = m;
    for (uint64_t p = 2; p * p <= n; p++) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            result -= result / p;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

Integer jordan_totient(uint64_t n, uint64_t e) {
    if (n == 0) {
        throw std::invalid_argument("jordan_totient: n must be at least 1");
    }
    // J_e(n) = n^e prod_{p | n} (1 - p^-e)
    Integer result = int_pow(Integer(n), e);
    uint64_t rest = n;
    for (uint64_t p = 2; p * p <= rest; p++) {
        if (rest % p == 0) {
            while (rest % p == 0) {
                rest /= p;
            }
            result -= result / int_pow(Integer(p), e);
        }
    }
    if (rest > 1) {
        result -= result / int_pow(Integer(rest), e);
    }
    return result;
}

std::vector<uint64_t> divisors(uint64_t n) {
    std::vector<uint64_t> small;
    std::vector<uint64_t> large;
    for (uint64_t d = 1; d * d <= n; d++) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace cyclesep

size_t std::hash<cyclesep::CycleType>::operator()(const cyclesep::CycleType &type) const noexcept {
    size_t h = type.degree();
    for (const auto &[length, count] : type.counts()) {
        h = cyclesep::hash_combine(h, (static_cast<size_t>(length) << 32) | count);
    }
    return h;
}

size_t std::hash<cyclesep::Permutation>::operator()(const cyclesep::Permutation &perm) const noexcept {
    size_t h = perm.degree();
    for (uint32_t v : perm.images()) {
        h = cyclesep::hash_combine(h, v);
    }
    return h;
}
