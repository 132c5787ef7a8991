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

#include "cyclesep/group.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "cyclesep/errors.h"

namespace cyclesep {

namespace {

size_t parse_size(std::string_view text, std::string_view what) {
    size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("GroupSpec: bad " + std::string(what) + " \"" + std::string(text) + "\"");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

uint32_t max_label(std::string_view cycles) {
    uint32_t best = 0;
    uint32_t cur = 0;
    bool in_number = false;
    for (char c : cycles) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            cur = cur * 10 + static_cast<uint32_t>(c - '0');
            in_number = true;
        } else {
            if (in_number) {
                best = std::max(best, cur);
            }
            cur = 0;
            in_number = false;
        }
    }
    if (in_number) {
        best = std::max(best, cur);
    }
    return best;
}

void check_order(const Integer &order, size_t degree, size_t element_cap) {
    if (order > element_cap) {
        throw CapExceeded("group too large: order " + order.str() + " exceeds the element cap " +
                          std::to_string(element_cap));
    }
    // Dense storage of every element.
    if (order * degree > (Integer(1) << 28)) {
        throw CapExceeded("group too large: " + order.str() + " elements of degree " + std::to_string(degree) +
                          " exceed the storage cap");
    }
}

}  // namespace

GroupSpec GroupSpec::identity(size_t k) {
    if (k < 1) {
        throw std::invalid_argument("Identity group needs k >= 1");
    }
    return GroupSpec(GroupFamily::Identity, k, 0);
}

GroupSpec GroupSpec::symmetric(size_t k) {
    if (k < 1) {
        throw std::invalid_argument("Symmetric group needs k >= 1");
    }
    return GroupSpec(GroupFamily::Symmetric, k, 0);
}

GroupSpec GroupSpec::cyclic(size_t k) {
    if (k < 1) {
        throw std::invalid_argument("Cyclic group needs k >= 1");
    }
    return GroupSpec(GroupFamily::Cyclic, k, 0);
}

GroupSpec GroupSpec::dihedral(size_t k) {
    if (k < 3) {
        throw std::invalid_argument("Dihedral group needs k >= 3");
    }
    return GroupSpec(GroupFamily::Dihedral, k, 0);
}

GroupSpec GroupSpec::alternating(size_t k) {
    if (k < 1) {
        throw std::invalid_argument("Alternating group needs k >= 1");
    }
    return GroupSpec(GroupFamily::Alternating, k, 0);
}

GroupSpec GroupSpec::quaternion() {
    return GroupSpec(GroupFamily::Quaternion, 8, 0);
}

GroupSpec GroupSpec::product_cyclic(size_t modulus, size_t copies) {
    if (modulus < 1 || copies < 1) {
        throw std::invalid_argument("Zmk needs m >= 1 and k >= 1");
    }
    Integer degree = int_pow(Integer(modulus), copies);
    if (degree > Integer(1) << 32) {
        throw CapExceeded("Zmk: degree m^k = " + degree.str() + " is too large");
    }
    return GroupSpec(GroupFamily::ProductCyclic, copies, modulus);
}

GroupSpec GroupSpec::generators(std::vector<Permutation> gens) {
    if (gens.empty()) {
        throw std::invalid_argument("Generators: need at least one generator");
    }
    size_t degree = gens.front().degree();
    if (degree == 0) {
        throw std::invalid_argument("Generators: degree must be at least 1");
    }
    for (const auto &g : gens) {
        if (g.degree() != degree) {
            throw std::invalid_argument("Generators: generators have different degrees");
        }
    }
    GroupSpec spec(GroupFamily::Generators, degree, 0);
    spec.gens_ = std::move(gens);
    return spec;
}

GroupSpec GroupSpec::family_member(GroupFamily family, size_t k) {
    switch (family) {
        case GroupFamily::Identity:
            return identity(k);
        case GroupFamily::Symmetric:
            return symmetric(k);
        case GroupFamily::Cyclic:
            return cyclic(k);
        case GroupFamily::Dihedral:
            return dihedral(k);
        case GroupFamily::Alternating:
            return alternating(k);
        default:
            throw std::invalid_argument("family_member: family " + family_letter(family) +
                                        " is not parameterized by k");
    }
}

GroupSpec GroupSpec::parse(std::string_view text) {
    text = trim(text);
    if (text == "Q8") {
        return quaternion();
    }
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("GroupSpec: cannot parse \"" + std::string(text) +
                                    "\" (expected S:k, C:k, D:k, A:k, I:k, Q8, Zmk:m,k or gen:[...])");
    }
    auto head = trim(text.substr(0, colon));
    auto rest = trim(text.substr(colon + 1));
    if (head == "Zmk") {
        auto comma = rest.find(',');
        if (comma == std::string_view::npos) {
            throw std::invalid_argument("GroupSpec: Zmk needs \"Zmk:m,k\"");
        }
        return product_cyclic(parse_size(trim(rest.substr(0, comma)), "m"),
                              parse_size(trim(rest.substr(comma + 1)), "k"));
    }
    if (head == "gen") {
        size_t degree = 0;
        if (!rest.empty() && rest.front() != '[') {
            auto c2 = rest.find(':');
            if (c2 == std::string_view::npos) {
                throw std::invalid_argument("GroupSpec: gen needs \"gen:[cycles,...]\" or \"gen:k:[...]\"");
            }
            degree = parse_size(trim(rest.substr(0, c2)), "degree");
            rest = trim(rest.substr(c2 + 1));
        }
        if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']') {
            throw std::invalid_argument("GroupSpec: generator list must be bracketed, e.g. gen:[(1 2),(1 2 3)]");
        }
        auto body = rest.substr(1, rest.size() - 2);
        if (degree == 0) {
            degree = max_label(body);
        }
        if (degree == 0) {
            throw std::invalid_argument("GroupSpec: cannot infer degree of an empty generator list");
        }
        std::vector<Permutation> gens;
        int depth = 0;
        size_t start = 0;
        for (size_t i = 0; i <= body.size(); i++) {
            if (i == body.size() || (body[i] == ',' && depth == 0)) {
                auto piece = trim(body.substr(start, i - start));
                if (!piece.empty()) {
                    gens.push_back(Permutation::parse(piece, degree));
                }
                start = i + 1;
            } else if (body[i] == '(') {
                depth++;
            } else if (body[i] == ')') {
                depth--;
            }
        }
        return generators(std::move(gens));
    }
    size_t k = parse_size(rest, "k");
    return family_member(parse_family(head), k);
}

size_t GroupSpec::degree() const {
    if (family_ == GroupFamily::ProductCyclic) {
        return static_cast<size_t>(int_pow(Integer(m_), k_));
    }
    return k_;
}

std::string GroupSpec::str() const {
    switch (family_) {
        case GroupFamily::Quaternion:
            return "Q8";
        case GroupFamily::ProductCyclic:
            return "Zmk:" + std::to_string(m_) + "," + std::to_string(k_);
        case GroupFamily::Generators: {
            std::string s = "gen:" + std::to_string(k_) + ":[";
            for (size_t i = 0; i < gens_.size(); i++) {
                if (i) {
                    s += ",";
                }
                s += gens_[i].str();
            }
            return s + "]";
        }
        default:
            return family_letter(family_) + ":" + std::to_string(k_);
    }
}

std::string family_letter(GroupFamily family) {
    switch (family) {
        case GroupFamily::Identity:
            return "I";
        case GroupFamily::Symmetric:
            return "S";
        case GroupFamily::Cyclic:
            return "C";
        case GroupFamily::Dihedral:
            return "D";
        case GroupFamily::Alternating:
            return "A";
        case GroupFamily::Quaternion:
            return "Q8";
        case GroupFamily::ProductCyclic:
            return "Zmk";
        case GroupFamily::Generators:
            return "gen";
    }
    return "?";
}

GroupFamily parse_family(std::string_view letter) {
    letter = trim(letter);
    if (letter == "I") {
        return GroupFamily::Identity;
    }
    if (letter == "S") {
        return GroupFamily::Symmetric;
    }
    if (letter == "C") {
        return GroupFamily::Cyclic;
    }
    if (letter == "D") {
        return GroupFamily::Dihedral;
    }
    if (letter == "A") {
        return GroupFamily::Alternating;
    }
    throw std::invalid_argument("unknown group family \"" + std::string(letter) + "\"");
}

PermutationGroup::PermutationGroup(size_t degree, std::vector<Permutation> elements) : degree_(degree) {
    std::unordered_set<Permutation> seen;
    seen.reserve(elements.size());
    for (auto &e : elements) {
        if (e.degree() != degree) {
            throw std::invalid_argument("PermutationGroup: element degree mismatch");
        }
        if (seen.insert(e).second) {
            elements_.push_back(std::move(e));
        }
    }
    if (elements_.empty()) {
        throw std::invalid_argument("PermutationGroup: empty element list");
    }
}

bool PermutationGroup::contains(const Permutation &p) const {
    return std::find(elements_.begin(), elements_.end(), p) != elements_.end();
}

bool PermutationGroup::is_closed() const {
    std::unordered_set<Permutation> index(elements_.begin(), elements_.end());
    if (!index.contains(Permutation::identity(degree_))) {
        return false;
    }
    for (const auto &a : elements_) {
        if (!index.contains(a.inverse())) {
            return false;
        }
        for (const auto &b : elements_) {
            if (!index.contains(a * b)) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Permutation> quaternion_elements() {
    const char *cycles[] = {
        "()",
        "(1 2)(3 4)(5 6)(7 8)",
        "(1 3 2 4)(5 7 6 8)",
        "(1 4 2 3)(5 8 6 7)",
        "(1 5 2 6)(3 8 4 7)",
        "(1 6 2 5)(3 7 4 8)",
        "(1 7 2 8)(3 5 4 6)",
        "(1 8 2 7)(3 6 4 5)",
    };
    std::vector<Permutation> result;
    for (const char *c : cycles) {
        result.push_back(Permutation::parse(c, 8));
    }
    return result;
}

Permutation polygon_reflection(size_t k, size_t axis) {
    std::vector<uint32_t> images(k);
    for (size_t i = 0; i < k; i++) {
        // One-based label i+1 maps to axis - (i+1) mod k, brought back into 1..k.
        long long target = (static_cast<long long>(axis) - static_cast<long long>(i + 1)) % static_cast<long long>(k);
        if (target <= 0) {
            target += static_cast<long long>(k);
        }
        images[i] = static_cast<uint32_t>(target - 1);
    }
    return Permutation(std::move(images));
}

PermutationGroup generate_closure(size_t degree, const std::vector<Permutation> &gens, size_t element_cap) {
    for (const auto &g : gens) {
        if (g.degree() != degree) {
            throw std::invalid_argument("generate_closure: generator degree mismatch");
        }
    }
    std::vector<Permutation> elements{Permutation::identity(degree)};
    std::unordered_set<Permutation> seen{elements.front()};
    std::deque<size_t> frontier{0};
    while (!frontier.empty()) {
        size_t index = frontier.front();
        frontier.pop_front();
        for (const auto &g : gens) {
            Permutation next = g * elements[index];
            if (seen.insert(next).second) {
                if (elements.size() >= element_cap) {
                    throw CapExceeded("group too large: closure exceeds the element cap " +
                                      std::to_string(element_cap));
                }
                elements.push_back(std::move(next));
                frontier.push_back(elements.size() - 1);
            }
        }
    }
    return PermutationGroup(degree, std::move(elements));
}

Integer group_order(const GroupSpec &spec) {
    size_t k = spec.parameter();
    switch (spec.family()) {
        case GroupFamily::Identity:
            return 1;
        case GroupFamily::Symmetric:
            return factorial(k);
        case GroupFamily::Cyclic:
            return k;
        case GroupFamily::Dihedral:
            return 2 * Integer(k);
        case GroupFamily::Alternating:
            return k < 2 ? Integer(1) : factorial(k) / 2;
        case GroupFamily::Quaternion:
            return 8;
        case GroupFamily::ProductCyclic:
            return int_pow(Integer(spec.modulus()), k);
        case GroupFamily::Generators:
            return realize(spec).order();
    }
    return 0;
}

PermutationGroup realize(const GroupSpec &spec, size_t element_cap) {
    size_t k = spec.parameter();
    size_t degree = spec.degree();
    if (spec.family() != GroupFamily::Generators) {
        check_order(group_order(spec), degree, element_cap);
    }
    std::vector<Permutation> elements;
    switch (spec.family()) {
        case GroupFamily::Identity:
            elements.push_back(Permutation::identity(k));
            break;
        case GroupFamily::Symmetric:
        case GroupFamily::Alternating: {
            std::vector<uint32_t> images(k);
            std::iota(images.begin(), images.end(), 0u);
            do {
                Permutation p(images);
                if (spec.family() == GroupFamily::Symmetric || p.is_even()) {
                    elements.push_back(std::move(p));
                }
            } while (std::next_permutation(images.begin(), images.end()));
            break;
        }
        case GroupFamily::Cyclic: {
            Permutation r = Permutation::rotation(k);
            Permutation x = Permutation::identity(k);
            for (size_t i = 0; i < k; i++) {
                elements.push_back(x);
                x = r * x;
            }
            break;
        }
        case GroupFamily::Dihedral: {
            Permutation r = Permutation::rotation(k);
            Permutation x = Permutation::identity(k);
            for (size_t i = 0; i < k; i++) {
                elements.push_back(x);
                x = r * x;
            }
            for (size_t axis = 0; axis < k; axis++) {
                elements.push_back(polygon_reflection(k, axis));
            }
            break;
        }
        case GroupFamily::Quaternion:
            elements = quaternion_elements();
            break;
        case GroupFamily::ProductCyclic: {
            // Points and group elements are both vectors in Z_m^k, encoded in
            // mixed radix; element g acts by x -> x + g.
            size_t m = spec.modulus();
            std::vector<uint32_t> digits_g(k);
            for (size_t g = 0; g < degree; g++) {
                size_t t = g;
                for (size_t c = 0; c < k; c++) {
                    digits_g[c] = static_cast<uint32_t>(t % m);
                    t /= m;
                }
                std::vector<uint32_t> images(degree);
                for (size_t x = 0; x < degree; x++) {
                    size_t u = x;
                    size_t image = 0;
                    size_t place = 1;
                    for (size_t c = 0; c < k; c++) {
                        size_t d = (u % m + digits_g[c]) % m;
                        u /= m;
                        image += d * place;
                        place *= m;
                    }
                    images[x] = static_cast<uint32_t>(image);
                }
                elements.emplace_back(std::move(images));
            }
            break;
        }
        case GroupFamily::Generators:
            return generate_closure(degree, spec.generator_list(), element_cap);
    }
    return PermutationGroup(degree, std::move(elements));
}

}  // namespace cyclesep
