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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "cyclesep/accept.h"
#include "cyclesep/errors.h"
#include "oracles.h"

using namespace cyclesep;

namespace {

const Spectrum kHalf = Spectrum::from_eigenvalues({0.5, 0.5});

std::vector<size_t> digits(uint64_t x, size_t d, size_t k) {
    std::vector<size_t> out(k);
    for (size_t s = k; s-- > 0;) {
        out[s] = x % d;
        x /= d;
    }
    return out;
}

uint64_t undigits(const std::vector<size_t> &v, size_t d) {
    uint64_t x = 0;
    for (size_t digit : v) {
        x = x * d + digit;
    }
    return x;
}

Eigen::MatrixXcd diag_rho(const Spectrum &s, size_t d) {
    auto lambda = s.padded(d);
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (size_t i = 0; i < d; i++) {
        rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = lambda[i];
    }
    return rho;
}

}  // namespace

TEST(TensorPermutation, MovesSlotsAsDocumented) {
    for (size_t d : {2, 3}) {
        for (size_t k = 1; k <= 4; k++) {
            for (const auto &images : oracle::all_permutations(k)) {
                Permutation pi(images);
                auto map = tensor_permutation_map(pi, d);
                for (uint64_t x = 0; x < map.size(); x++) {
                    auto in = digits(x, d, k);
                    std::vector<size_t> out(k);
                    for (size_t s = 0; s < k; s++) {
                        out[images[s]] = in[s];
                    }
                    ASSERT_EQ(map[x], undigits(out, d));
                }
            }
        }
    }
}

TEST(TensorPermutation, IsARepresentation) {
    auto p = Permutation::parse("(1 2 3)", 4);
    auto q = Permutation::parse("(2 4)", 4);
    auto mp = tensor_permutation_map(p, 3), mq = tensor_permutation_map(q, 3), mpq = tensor_permutation_map(p * q, 3);
    for (size_t x = 0; x < mp.size(); x++) {
        EXPECT_EQ(mp[mq[x]], mpq[x]);
    }
}

TEST(ProjectorMatrix, SwapTestProjector) {
    Eigen::MatrixXd pi = projector_matrix(realize(GroupSpec::symmetric(2)), 2);
    Eigen::MatrixXd expected(4, 4);
    expected << 1, 0, 0, 0,
                0, 0.5, 0.5, 0,
                0, 0.5, 0.5, 0,
                0, 0, 0, 1;
    EXPECT_LT((pi - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(ProjectorMatrix, IdempotentSymmetricWithPolyaTrace) {
    std::vector<GroupSpec> specs = {GroupSpec::symmetric(3), GroupSpec::symmetric(4), GroupSpec::cyclic(4),
                                    GroupSpec::cyclic(5), GroupSpec::dihedral(4), GroupSpec::alternating(4),
                                    GroupSpec::quaternion()};
    for (const auto &spec : specs) {
        auto group = realize(spec);
        std::vector<oracle::Images> elements;
        for (const auto &g : group.elements()) {
            elements.emplace_back(g.images().begin(), g.images().end());
        }
        for (size_t d : {2, 3}) {
            if (std::pow(d, spec.degree()) > 4096) {
                continue;
            }
            Eigen::MatrixXd pi = projector_matrix(group, d);
            EXPECT_LT((pi * pi - pi).cwiseAbs().maxCoeff(), 1e-10) << spec.str();
            EXPECT_LT((pi - pi.transpose()).cwiseAbs().maxCoeff(), 1e-15) << spec.str();
            // Rank of Pi_G = number of orbits of d-colourings.
            EXPECT_NEAR(pi.trace(), static_cast<double>(oracle::colouring_orbits(elements, spec.degree(), d)), 1e-9)
                << spec.str() << " d=" << d;
        }
    }
    // Symmetric subspace dimension C(d+k-1, k).
    EXPECT_NEAR(projector_matrix(realize(GroupSpec::symmetric(5)), 3).trace(),
                static_cast<double>(oracle::binomial(7, 5)), 1e-9);
}

TEST(ProjectorTrace, Examples) {
    EXPECT_NEAR(projector_trace(GroupSpec::symmetric(2), kHalf, 2, 2), 0.75, 1e-15);
    EXPECT_NEAR(projector_trace(GroupSpec::identity(4), kHalf, 4, 2), 1.0, 1e-15);
    EXPECT_NEAR(projector_trace(GroupSpec::identity(3), Spectrum::from_eigenvalues({0.2, 0.3, 0.5}), 3, 3), 1.0,
                1e-15);
    EXPECT_NEAR(projector_trace(GroupSpec::cyclic(3), kHalf, 3, 2), 0.5, 1e-15);
}

TEST(ProjectorTrace, Errors) {
    EXPECT_THROW(projector_trace(GroupSpec::symmetric(3), kHalf, 4, 2), std::invalid_argument);
    EXPECT_THROW(projector_trace(GroupSpec::symmetric(3), Spectrum::from_eigenvalues({0.5, 0.3, 0.2}), 3, 2),
                 std::invalid_argument);
    EXPECT_THROW(projector_trace(GroupSpec::cyclic(13), kHalf, 13, 2), CapExceeded);
    EXPECT_THROW(projector_matrix(realize(GroupSpec::cyclic(8)), 3), CapExceeded);
}

TEST(ProjectorTrace, MatchesFormulaForNamedFamilies) {
    std::mt19937_64 rng(17);
    for (size_t d : {2, 3}) {
        for (int trial = 0; trial < 3; trial++) {
            auto s = random_spectrum(rng, d);
            for (size_t k = 1; k <= (d == 2 ? 6u : 4u); k++) {
                std::vector<GroupSpec> specs = {GroupSpec::symmetric(k), GroupSpec::cyclic(k),
                                                GroupSpec::alternating(k)};
                if (k >= 3) {
                    specs.push_back(GroupSpec::dihedral(k));
                }
                for (const auto &spec : specs) {
                    EXPECT_NEAR(projector_trace(spec, s, k, d), accept_group(spec, s).value, 1e-10)
                        << spec.str() << " d=" << d;
                }
            }
        }
    }
}

TEST(ProjectorTrace, DependsOnlyOnSpectrum) {
    std::mt19937_64 rng(23);
    auto s = random_spectrum(rng, 3);
    Eigen::MatrixXcd u = random_unitary(rng, 3);
    Eigen::MatrixXcd rho = u * diag_rho(s, 3) * u.adjoint();
    for (const auto &spec : {GroupSpec::symmetric(3), GroupSpec::cyclic(4), GroupSpec::dihedral(4)}) {
        EXPECT_NEAR(projector_trace(realize(spec), rho), projector_trace(realize(spec), diag_rho(s, 3)), 1e-12);
    }
}

TEST(Simulate, Examples) {
    EXPECT_NEAR(simulate(build_symmetric_recursive(3, 2), kHalf), 0.5, 1e-12);
    EXPECT_NEAR(simulate(build_cyclic_binary(4, 2), kHalf), 0.375, 1e-12);
    auto pure = Spectrum::pure();
    for (const auto &plan : {build_symmetric_recursive(4, 2), build_cyclic_binary(5, 2), build_dihedral(6, 2),
                             build_qudit_exact(GroupSpec::quaternion(), 2)}) {
        EXPECT_NEAR(simulate(plan, pure), 1.0, 1e-12);
    }
}

TEST(Simulate, SymmetricCircuitMatchesPartitionSum) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 4; trial++) {
        auto s = random_spectrum(rng, 2);
        auto t = power_traces(s, 5);
        for (size_t k = 2; k <= 5; k++) {
            EXPECT_NEAR(simulate(build_symmetric_recursive(k, 2), s), accept_symmetric_partition(t, k), 1e-9);
        }
    }
    auto s3 = Spectrum::from_eigenvalues({0.5, 0.3, 0.2});
    auto t3 = power_traces(s3, 3);
    EXPECT_NEAR(simulate(build_symmetric_recursive(3, 3), s3), accept_symmetric_partition(t3, 3), 1e-9);
}

TEST(Simulate, CyclicCircuitExactForPowersOfTwo) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 4; trial++) {
        auto s = random_spectrum(rng, 2);
        for (size_t k : {2, 4, 8}) {
            EXPECT_NEAR(simulate(build_cyclic_binary(k, 2), s), accept_group(GroupSpec::cyclic(k), s).value, 1e-9);
        }
        for (size_t k : {4, 8}) {
            EXPECT_NEAR(simulate(build_dihedral(k, 2), s), accept_group(GroupSpec::dihedral(k), s).value, 1e-9);
        }
    }
}

TEST(Simulate, QuditControlIsExactForEveryGroup) {
    auto s = Spectrum::from_eigenvalues({0.6, 0.3, 0.1});
    for (const auto &spec : {GroupSpec::cyclic(3), GroupSpec::cyclic(5), GroupSpec::dihedral(5),
                             GroupSpec::alternating(4), GroupSpec::parse("gen:[(1 2)(3 4)]")}) {
        EXPECT_NEAR(simulate(build_qudit_exact(spec, 3), s), accept_group(spec, s).value, 1e-10) << spec.str();
    }
}

TEST(Simulate, Caps) {
    EXPECT_THROW(simulate(build_symmetric_recursive(6, 4), kHalf), CapExceeded);
    EXPECT_THROW(simulate(build_symmetric_recursive(12, 2), kHalf), CapExceeded);
    EXPECT_THROW(simulate(build_cyclic_binary(4, 2), Spectrum::from_eigenvalues({0.5, 0.3, 0.2})),
                 std::invalid_argument);
}

TEST(BinaryDiscrepancy, ZeroForPowersOfTwo) {
    EXPECT_NEAR(binary_discrepancy(4, kHalf), 0, 1e-12);
    std::mt19937_64 rng(47);
    EXPECT_NEAR(binary_discrepancy(8, random_spectrum(rng, 2)), 0, 1e-12);
    double five = binary_discrepancy(5, kHalf);
    EXPECT_TRUE(std::isfinite(five));
    EXPECT_GE(five, 0);
    EXPECT_THROW(binary_discrepancy(2, kHalf), std::invalid_argument);
}
