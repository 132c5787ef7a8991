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

#include "cyclesep/simulator.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "cyclesep/accept.h"
#include "cyclesep/errors.h"

namespace cyclesep {

namespace {

constexpr double kAmplitudeFloor = 1e-15;

std::vector<uint64_t> digit_weights(size_t d, size_t k) {
    std::vector<uint64_t> w(k);
    uint64_t p = 1;
    for (size_t s = k; s-- > 0;) {
        w[s] = p;
        p *= d;
    }
    return w;
}

}  // namespace

uint64_t tensor_dim(size_t d, size_t k, uint64_t cap) {
    uint64_t dim = 1;
    for (size_t s = 0; s < k; s++) {
        if (d != 0 && dim > cap / d) {
            throw CapExceeded("dimension " + std::to_string(d) + "^" + std::to_string(k) + " exceeds cap " +
                              std::to_string(cap));
        }
        dim *= d;
    }
    if (dim > cap) {
        throw CapExceeded("dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap));
    }
    return dim;
}

std::vector<uint32_t> tensor_permutation_map(const Permutation &pi, size_t d) {
    size_t k = pi.degree();
    uint64_t dim = tensor_dim(d, k, kStatevectorDimCap);
    auto w = digit_weights(d, k);
    std::vector<uint32_t> out(dim);
    for (uint64_t x = 0; x < dim; x++) {
        uint64_t y = 0;
        for (size_t s = 0; s < k; s++) {
            y += ((x / w[s]) % d) * w[pi[s]];
        }
        out[x] = static_cast<uint32_t>(y);
    }
    return out;
}

Eigen::MatrixXd projector_matrix(const PermutationGroup &group, size_t d) {
    auto dim = static_cast<Eigen::Index>(tensor_dim(d, group.degree(), kProjectorDimCap));
    Eigen::MatrixXd pi = Eigen::MatrixXd::Zero(dim, dim);
    double weight = 1.0 / static_cast<double>(group.order());
    for (const auto &g : group.elements()) {
        auto map = tensor_permutation_map(g, d);
        for (Eigen::Index x = 0; x < dim; x++) {
            pi(map[static_cast<size_t>(x)], x) += weight;
        }
    }
    return pi;
}

double projector_trace(const PermutationGroup &group, const Eigen::MatrixXcd &rho) {
    if (rho.rows() != rho.cols() || rho.rows() < 1) {
        throw std::invalid_argument("projector_trace: rho must be a nonempty square matrix");
    }
    auto d = static_cast<size_t>(rho.rows());
    size_t k = group.degree();
    uint64_t dim = tensor_dim(d, k, kProjectorDimCap);
    auto w = digit_weights(d, k);
    // tr[W(g) rho^{(x)k}] = sum_x <x| rho^{(x)k} |W(g) x>.
    std::complex<double> total = 0;
    for (const auto &g : group.elements()) {
        auto map = tensor_permutation_map(g, d);
        std::complex<double> partial = 0;
        for (uint64_t x = 0; x < dim; x++) {
            uint64_t y = map[x];
            std::complex<double> term = 1;
            for (size_t s = 0; s < k && term != 0.0; s++) {
                term *= rho(static_cast<Eigen::Index>((x / w[s]) % d), static_cast<Eigen::Index>((y / w[s]) % d));
            }
            partial += term;
        }
        total += partial;
    }
    return total.real() / static_cast<double>(group.order());
}

double projector_trace(const GroupSpec &spec, const Spectrum &s, size_t k, size_t d) {
    if (spec.degree() != k) {
        throw std::invalid_argument("projector_trace: group acts on " + std::to_string(spec.degree()) +
                                    " points but k = " + std::to_string(k));
    }
    tensor_dim(d, k, kProjectorDimCap);
    auto lambda = s.padded(d);
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (size_t i = 0; i < d; i++) {
        rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = lambda[i];
    }
    return projector_trace(realize(spec), rho);
}

double simulate(const CircuitPlan &plan, const Spectrum &s) {
    size_t k = plan.copies;
    size_t d = plan.local_dim;
    uint64_t dim = tensor_dim(d, k, kStatevectorDimCap);
    if (plan.control_dim == 0 || plan.control_dim > kStatevectorDimCap / dim) {
        throw CapExceeded("statevector of " + std::to_string(plan.control_dim) + " x " + std::to_string(dim) +
                          " amplitudes exceeds cap " + std::to_string(kStatevectorDimCap));
    }
    for (const auto &gate : plan.gates) {
        if (gate.action.degree() != k) {
            throw std::invalid_argument("simulate: gate permutation degree differs from the copy count");
        }
    }
    auto lambda = s.padded(d);
    Eigen::VectorXd control = plan.control_state();

    // Only control basis states with nonzero amplitude are stored.
    std::vector<uint64_t> rows;
    for (Eigen::Index c = 0; c < control.size(); c++) {
        if (std::abs(control(c)) > kAmplitudeFloor) {
            rows.push_back(static_cast<uint64_t>(c));
        }
    }
    std::vector<std::vector<uint32_t>> maps;
    std::vector<std::vector<size_t>> firing;
    for (const auto &gate : plan.gates) {
        maps.push_back(tensor_permutation_map(gate.action, d));
        std::vector<size_t> which;
        for (size_t r = 0; r < rows.size(); r++) {
            if (gate.control.fires(rows[r])) {
                which.push_back(r);
            }
        }
        firing.push_back(std::move(which));
    }

    auto w = digit_weights(d, k);
    auto n_rows = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXd psi(n_rows, static_cast<Eigen::Index>(dim));
    Eigen::VectorXd scratch(static_cast<Eigen::Index>(dim));
    double total = 0;
    for (uint64_t y0 = 0; y0 < dim; y0++) {
        double weight = 1;
        for (size_t slot = 0; slot < k && weight != 0.0; slot++) {
            weight *= lambda[(y0 / w[slot]) % d];
        }
        if (weight == 0.0) {
            continue;
        }
        psi.setZero();
        for (Eigen::Index r = 0; r < n_rows; r++) {
            psi(r, static_cast<Eigen::Index>(y0)) = control(static_cast<Eigen::Index>(rows[r]));
        }
        for (size_t g = 0; g < plan.gates.size(); g++) {
            const auto &map = maps[g];
            for (size_t r : firing[g]) {
                auto ri = static_cast<Eigen::Index>(r);
                for (uint64_t y = 0; y < dim; y++) {
                    scratch(map[y]) = psi(ri, static_cast<Eigen::Index>(y));
                }
                psi.row(ri) = scratch.transpose();
            }
        }
        // Amplitude of <control| (x) <y| on the output, for each y.
        double accepted = 0;
        for (uint64_t y = 0; y < dim; y++) {
            double amp = 0;
            for (Eigen::Index r = 0; r < n_rows; r++) {
                amp += control(static_cast<Eigen::Index>(rows[r])) * psi(r, static_cast<Eigen::Index>(y));
            }
            accepted += amp * amp;
        }
        total += weight * accepted;
    }
    return total;
}

double binary_discrepancy(size_t k, const Spectrum &s) {
    if (k < 3) {
        throw std::invalid_argument("binary_discrepancy: k must be at least 3");
    }
    size_t d = std::max<size_t>(2, s.rank());
    double simulated = simulate(build_cyclic_binary(k, d), s);
    double formula = accept_group(GroupSpec::cyclic(k), s).value;
    return std::abs(simulated - formula);
}

}  // namespace cyclesep
