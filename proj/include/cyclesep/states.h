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

#ifndef CYCLESEP_STATES_H
#define CYCLESEP_STATES_H

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace cyclesep {

/// |psi>_AB as a d_A x d_B amplitude matrix, entry (a, b) = (<a| <b|) |psi>.
class PureBipartiteState {
   public:
    /// Throws std::invalid_argument unless the Frobenius norm is 1 within 1e-10.
    explicit PureBipartiteState(Eigen::MatrixXcd amplitudes);

    static PureBipartiteState product(const Eigen::VectorXcd &a, const Eigen::VectorXcd &b);

    const Eigen::MatrixXcd &amplitudes() const {
        return amplitudes_;
    }
    size_t dim_a() const {
        return static_cast<size_t>(amplitudes_.rows());
    }
    size_t dim_b() const {
        return static_cast<size_t>(amplitudes_.cols());
    }

   private:
    Eigen::MatrixXcd amplitudes_;
};

/// Eigenvalues of a reduced state, descending, nonnegative, summing to 1.
class Spectrum {
   public:
    /// Values below 1e-12 become zero. The sum must already be 1 within 1e-10.
    static Spectrum from_eigenvalues(std::vector<double> values);
    /// Rescales positive input to sum 1. `shift` (optional) receives |sum - 1|
    /// of the input after clamping.
    static Spectrum normalized(std::vector<double> values, double *shift = nullptr);
    static Spectrum pure();

    std::span<const double> eigenvalues() const {
        return values_;
    }
    size_t size() const {
        return values_.size();
    }
    double operator[](size_t i) const {
        return values_[i];
    }
    /// Number of nonzero eigenvalues.
    size_t rank() const;
    double max_eigenvalue() const {
        return values_.front();
    }
    /// 1 - lambda_max, computed as the sum of the other eigenvalues.
    double max_eigenvalue_deficit() const;

    /// Pads with zeros to length d; throws if nonzero eigenvalues would be dropped.
    std::vector<double> padded(size_t d) const;

   private:
    explicit Spectrum(std::vector<double> values) : values_(std::move(values)) {
    }
    std::vector<double> values_;
};

/// t_j = tr[rho^j] = sum_i lambda_i^j for j = 1..K.
class PowerTraces {
   public:
    explicit PowerTraces(std::vector<double> values);

    size_t size() const {
        return values_.size();
    }
    /// One-based: t(1) is the trace.
    double operator()(size_t j) const {
        return values_[j - 1];
    }
    std::span<const double> values() const {
        return values_;
    }

   private:
    std::vector<double> values_;
};

inline constexpr double kEigenvalueFloor = 1e-12;

Spectrum reduced_spectrum(const PureBipartiteState &psi);
PowerTraces power_traces(const Spectrum &s, size_t count);
/// 1 - t_j for j = 1..K, accurate when the spectrum is close to pure.
std::vector<double> power_trace_deficits(const Spectrum &s, size_t count);
bool is_pure(const Spectrum &s, double tol);

/// Flat-Dirichlet spectrum of the given dimension.
Spectrum random_spectrum(std::mt19937_64 &rng, size_t dim);
/// Haar-random unitary via QR of a complex Gaussian matrix.
Eigen::MatrixXcd random_unitary(std::mt19937_64 &rng, size_t dim);

}  // namespace cyclesep

#endif
