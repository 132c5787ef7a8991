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

#include "cyclesep/accept.h"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "cyclesep/errors.h"

namespace cyclesep {

namespace {

constexpr uint64_t kMaxPartitionTerms = 250'000;

void require_traces(const PowerTraces &t, size_t k, const char *who) {
    if (k < 1) {
        throw std::invalid_argument(std::string(who) + ": k must be at least 1");
    }
    if (t.size() < k) {
        throw std::invalid_argument(std::string(who) + ": need t_1..t_" + std::to_string(k) + ", got " +
                                    std::to_string(t.size()));
    }
}

double factorial_double(size_t n) {
    double f = 1;
    for (size_t i = 2; i <= n; i++) {
        f *= static_cast<double>(i);
    }
    return f;
}

// Neumaier's variant of Kahan summation.
class CompensatedSum {
   public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const {
        return sum_ + comp_;
    }

   private:
    double sum_ = 0;
    double comp_ = 0;
};

}  // namespace

std::string method_name(AcceptMethod method) {
    switch (method) {
        case AcceptMethod::PartitionSum:
            return "PartitionSum";
        case AcceptMethod::Recurrence:
            return "Recurrence";
        case AcceptMethod::Bell:
            return "Bell";
        case AcceptMethod::Determinant:
            return "Determinant";
        case AcceptMethod::Permanent:
            return "Permanent";
        case AcceptMethod::ClosedForm:
            return "ClosedForm";
        case AcceptMethod::Simulation:
            return "Simulation";
    }
    return "?";
}

AcceptMethod parse_method(const std::string &name) {
    if (name == "partition") {
        return AcceptMethod::PartitionSum;
    }
    if (name == "recurrence") {
        return AcceptMethod::Recurrence;
    }
    if (name == "bell") {
        return AcceptMethod::Bell;
    }
    if (name == "determinant") {
        return AcceptMethod::Determinant;
    }
    if (name == "permanent") {
        return AcceptMethod::Permanent;
    }
    if (name == "closed-form" || name == "group") {
        return AcceptMethod::ClosedForm;
    }
    if (name == "simulation") {
        return AcceptMethod::Simulation;
    }
    throw std::invalid_argument("unknown method \"" + name +
                                "\" (partition, recurrence, bell, determinant, permanent, closed-form, simulation)");
}

double accept_symmetric_partition(const PowerTraces &t, size_t k) {
    require_traces(t, k, "accept_symmetric_partition");
    if (partition_count(k) > kMaxPartitionTerms) {
        throw CapExceeded("accept_symmetric_partition: too many partitions of " + std::to_string(k));
    }
    double total = 0;
    for (const auto &type : partitions(k)) {
        double term = 1;
        for (const auto &[j, a] : type.counts()) {
            // t_j^a / (j^a a!)
            term *= std::pow(t(j) / static_cast<double>(j), static_cast<double>(a)) / factorial_double(a);
        }
        total += term;
    }
    return total;
}

std::vector<double> symmetric_sequence(const PowerTraces &t, size_t k_max) {
    if (t.size() < k_max) {
        throw std::invalid_argument("symmetric_sequence: need t_1..t_" + std::to_string(k_max));
    }
    std::vector<double> p(k_max + 1, 0.0);
    p[0] = 1;
    for (size_t n = 1; n <= k_max; n++) {
        double acc = 0;
        for (size_t j = 1; j <= n; j++) {
            acc += t(j) * p[n - j];
        }
        p[n] = acc / static_cast<double>(n);
    }
    return p;
}

double accept_symmetric_recurrence(const PowerTraces &t, size_t k) {
    require_traces(t, k, "accept_symmetric_recurrence");
    return symmetric_sequence(t, k)[k];
}

double accept_symmetric_bell(const PowerTraces &t, size_t k) {
    require_traces(t, k, "accept_symmetric_bell");
    if (k > kBellMaxK) {
        throw CapExceeded("accept_symmetric_bell: k! overflows for k > " + std::to_string(kBellMaxK));
    }
    // x_j = (j-1)! t_j, one-based.
    std::vector<double> x(k + 1, 0.0);
    for (size_t j = 1; j <= k; j++) {
        x[j] = factorial_double(j - 1) * t(j);
    }
    // B_{n+1} = sum_{j=0}^n C(n, j) B_{n-j} x_{j+1}
    std::vector<double> bell(k + 1, 0.0);
    bell[0] = 1;
    for (size_t n = 0; n < k; n++) {
        double binom = 1;
        double acc = 0;
        for (size_t j = 0; j <= n; j++) {
            acc += binom * bell[n - j] * x[j + 1];
            binom = binom * static_cast<double>(n - j) / static_cast<double>(j + 1);
        }
        bell[n + 1] = acc;
    }
    return bell[k] / factorial_double(k);
}

Eigen::MatrixXd newton_determinant_matrix(const PowerTraces &t, size_t k) {
    require_traces(t, k, "newton_determinant_matrix");
    auto n = static_cast<Eigen::Index>(k);
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; i++) {
        for (Eigen::Index j = 0; j <= i; j++) {
            d(i, j) = t(static_cast<size_t>(i - j + 1));
        }
        if (i + 1 < n) {
            d(i, i + 1) = -static_cast<double>(i + 1);
        }
    }
    return d;
}

Eigen::MatrixXd newton_permanent_matrix(const PowerTraces &t, size_t k) {
    Eigen::MatrixXd p = newton_determinant_matrix(t, k);
    for (Eigen::Index i = 0; i + 1 < p.rows(); i++) {
        p(i, i + 1) = -p(i, i + 1);
    }
    return p;
}

double accept_symmetric_determinant(const PowerTraces &t, size_t k) {
    require_traces(t, k, "accept_symmetric_determinant");
    if (k > kDeterminantMaxK) {
        return accept_symmetric_recurrence(t, k);
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(newton_determinant_matrix(t, k));
    return lu.determinant() / factorial_double(k);
}

double permanent(const Eigen::MatrixXd &a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("permanent: matrix is not square");
    }
    auto n = static_cast<size_t>(a.rows());
    if (n == 0) {
        return 1;
    }
    if (n > 30) {
        throw CapExceeded("permanent: order " + std::to_string(n) + " is too large");
    }
    // Ryser: perm(A) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij,
    // visiting column subsets in Gray-code order so each step flips one column.
    std::vector<double> row_sums(n, 0.0);
    double total = 0;
    uint64_t prev = 0;
    for (uint64_t step = 1; step < (uint64_t{1} << n); step++) {
        uint64_t gray = step ^ (step >> 1);
        uint64_t flipped = gray ^ prev;
        auto col = static_cast<Eigen::Index>(std::countr_zero(flipped));
        double sign = (gray & flipped) ? 1.0 : -1.0;
        double prod = 1;
        for (size_t i = 0; i < n; i++) {
            row_sums[i] += sign * a(static_cast<Eigen::Index>(i), col);
            prod *= row_sums[i];
        }
        total += (std::popcount(gray) % 2 ? -prod : prod);
        prev = gray;
    }
    return n % 2 ? -total : total;
}

double accept_symmetric_permanent(const PowerTraces &t, size_t k) {
    require_traces(t, k, "accept_symmetric_permanent");
    if (k > kPermanentMaxK) {
        throw CapExceeded("accept_symmetric_permanent: k = " + std::to_string(k) + " exceeds the cap " +
                          std::to_string(kPermanentMaxK));
    }
    return permanent(newton_permanent_matrix(t, k)) / factorial_double(k);
}

AcceptanceReport accept_group(const GroupSpec &spec, const PowerTraces &t) {
    auto z = cycle_index_of(spec);
    return {spec, spec.degree(), evaluate(z, t.values()),
            spec.is_named() ? AcceptMethod::ClosedForm : AcceptMethod::PartitionSum};
}

AcceptanceReport accept_group(const GroupSpec &spec, const Spectrum &s) {
    auto z = cycle_index_of(spec);
    auto t = power_traces(s, std::max<size_t>(1, z.max_variable()));
    return {spec, spec.degree(), evaluate(z, t.values()),
            spec.is_named() ? AcceptMethod::ClosedForm : AcceptMethod::PartitionSum};
}

double rejection_probability(const CycleIndexPolynomial &z, const Spectrum &s) {
    auto deficits = power_trace_deficits(s, std::max<size_t>(1, z.max_variable()));
    CompensatedSum total;
    for (const auto &[type, coef] : z.sorted_terms()) {
        double log_prod = 0;
        for (const auto &[j, a] : type.counts()) {
            log_prod += static_cast<double>(a) * std::log1p(-deficits[j - 1]);
        }
        total.add(to_double(coef) * -std::expm1(log_prod));
    }
    return total.value();
}

double rejection_probability(const GroupSpec &spec, const Spectrum &s) {
    return rejection_probability(cycle_index_of(spec), s);
}

double acceptance_upper_bound(const Spectrum &s, size_t k) {
    if (k < 1) {
        throw std::invalid_argument("acceptance_upper_bound: k must be at least 1");
    }
    if (s.rank() <= 1) {
        return 1;
    }
    auto kd = static_cast<double>(k);
    double total = 0;
    for (double lambda : s.eigenvalues()) {
        if (lambda <= 0) {
            continue;
        }
        total += ((1 - std::pow(lambda, kd + 1)) / (1 - lambda) - 1) / kd;
    }
    return total;
}

MonotonicityReport check_monotonicity(GroupFamily family, const Spectrum &s, size_t k_min, size_t k_max) {
    if (k_min < 1 || k_max < k_min) {
        throw std::invalid_argument("check_monotonicity: bad k range");
    }
    MonotonicityReport report{family, {}, true};
    for (size_t k = k_min; k <= k_max; k++) {
        report.values.push_back(accept_group(GroupSpec::family_member(family, k), s).value);
        if (report.values.size() > 1 && !(report.values.back() < report.values[report.values.size() - 2])) {
            report.strictly_decreasing = false;
        }
    }
    return report;
}

}  // namespace cyclesep
