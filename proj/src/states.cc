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

#include "cyclesep/states.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cyclesep {

namespace {

std::vector<double> clamp_and_sort(std::vector<double> values) {
    if (values.empty()) {
        throw std::invalid_argument("Spectrum: no eigenvalues");
    }
    for (double &v : values) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("Spectrum: non-finite eigenvalue");
        }
        if (v < -kEigenvalueFloor) {
            throw std::invalid_argument("Spectrum: negative eigenvalue " + std::to_string(v));
        }
        if (v < kEigenvalueFloor) {
            v = 0;
        }
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

void rescale(std::vector<double> &values) {
    double total = std::accumulate(values.begin(), values.end(), 0.0);
    if (total <= 0) {
        throw std::invalid_argument("Spectrum: eigenvalues sum to zero");
    }
    for (double &v : values) {
        v /= total;
    }
}

}  // namespace

PureBipartiteState::PureBipartiteState(Eigen::MatrixXcd amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) {
        throw std::invalid_argument("PureBipartiteState: empty amplitude matrix");
    }
    double norm = amplitudes_.norm();
    if (std::abs(norm - 1) > 1e-10) {
        throw std::invalid_argument("PureBipartiteState: state is not normalized (norm " + std::to_string(norm) +
                                    ")");
    }
}

PureBipartiteState PureBipartiteState::product(const Eigen::VectorXcd &a, const Eigen::VectorXcd &b) {
    return PureBipartiteState(a * b.transpose());
}

Spectrum Spectrum::from_eigenvalues(std::vector<double> values) {
    values = clamp_and_sort(std::move(values));
    double total = std::accumulate(values.begin(), values.end(), 0.0);
    if (std::abs(total - 1) > 1e-10) {
        throw std::invalid_argument("Spectrum: eigenvalues sum to " + std::to_string(total) + ", expected 1");
    }
    rescale(values);
    return Spectrum(std::move(values));
}

Spectrum Spectrum::normalized(std::vector<double> values, double *shift) {
    values = clamp_and_sort(std::move(values));
    double total = std::accumulate(values.begin(), values.end(), 0.0);
    if (shift) {
        *shift = std::abs(total - 1);
    }
    rescale(values);
    return Spectrum(std::move(values));
}

Spectrum Spectrum::pure() {
    return Spectrum({1.0});
}

size_t Spectrum::rank() const {
    return static_cast<size_t>(std::count_if(values_.begin(), values_.end(), [](double v) { return v > 0; }));
}

double Spectrum::max_eigenvalue_deficit() const {
    double rest = 0;
    for (size_t i = 1; i < values_.size(); i++) {
        rest += values_[i];
    }
    return rest;
}

std::vector<double> Spectrum::padded(size_t d) const {
    if (rank() > d) {
        throw std::invalid_argument("Spectrum: rank " + std::to_string(rank()) + " does not fit in dimension " +
                                    std::to_string(d));
    }
    std::vector<double> out(d, 0.0);
    for (size_t i = 0; i < std::min(d, values_.size()); i++) {
        out[i] = values_[i];
    }
    return out;
}

PowerTraces::PowerTraces(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("PowerTraces: need at least t_1");
    }
}

Spectrum reduced_spectrum(const PureBipartiteState &psi) {
    const auto &m = psi.amplitudes();
    // Squared singular values from the smaller Gram matrix.
    Eigen::MatrixXcd gram = m.rows() <= m.cols() ? Eigen::MatrixXcd(m * m.adjoint())
                                                 : Eigen::MatrixXcd(m.adjoint() * m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("reduced_spectrum: eigendecomposition failed");
    }
    const auto &ev = solver.eigenvalues();
    std::vector<double> values(ev.data(), ev.data() + ev.size());
    for (double &v : values) {
        if (v < kEigenvalueFloor) {
            v = 0;
        }
    }
    return Spectrum::normalized(std::move(values));
}

PowerTraces power_traces(const Spectrum &s, size_t count) {
    if (count < 1) {
        throw std::invalid_argument("power_traces: K must be at least 1");
    }
    std::vector<double> t(count, 0.0);
    for (double lambda : s.eigenvalues()) {
        double p = lambda;
        for (size_t j = 0; j < count; j++) {
            t[j] += p;
            p *= lambda;
        }
    }
    return PowerTraces(std::move(t));
}

std::vector<double> power_trace_deficits(const Spectrum &s, size_t count) {
    // 1 - t_j = sum_i lambda_i (1 - lambda_i^{j-1}), with 1 - lambda^n taken as
    // -expm1(n log lambda) and log lambda_max from log1p(-(1 - lambda_max)).
    std::vector<double> deficits(count, 0.0);
    auto ev = s.eigenvalues();
    for (size_t i = 0; i < ev.size(); i++) {
        double lambda = ev[i];
        if (lambda <= 0) {
            continue;
        }
        double log_lambda = i == 0 ? std::log1p(-s.max_eigenvalue_deficit()) : std::log(lambda);
        for (size_t j = 2; j <= count; j++) {
            deficits[j - 1] += lambda * -std::expm1(static_cast<double>(j - 1) * log_lambda);
        }
    }
    return deficits;
}

bool is_pure(const Spectrum &s, double tol) {
    return power_traces(s, 2)(2) >= 1 - tol;
}

Spectrum random_spectrum(std::mt19937_64 &rng, size_t dim) {
    std::exponential_distribution<double> exp(1.0);
    std::vector<double> values(dim);
    for (double &v : values) {
        v = exp(rng);
    }
    return Spectrum::normalized(std::move(values));
}

Eigen::MatrixXcd random_unitary(std::mt19937_64 &rng, size_t dim) {
    std::normal_distribution<double> normal;
    Eigen::MatrixXcd z(dim, dim);
    for (Eigen::Index r = 0; r < z.rows(); r++) {
        for (Eigen::Index c = 0; c < z.cols(); c++) {
            z(r, c) = {normal(rng), normal(rng)};
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index c = 0; c < q.cols(); c++) {
        auto d = r(c, c);
        q.col(c) *= d / std::abs(d);
    }
    return q;
}

}  // namespace cyclesep
