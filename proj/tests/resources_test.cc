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

#include "cyclesep/resources.h"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cyclesep/accept.h"

using namespace cyclesep;

namespace {

const Spectrum kW = Spectrum::from_eigenvalues({2.0 / 3, 1.0 / 3});

}  // namespace

TEST(CountGates, Examples) {
    EXPECT_EQ(count_gates(build_symmetric_recursive(4, 2)), 6u);
    EXPECT_EQ(count_gates(build_cyclic_binary(5, 2)), 12u);
    EXPECT_EQ(count_gates(build_cyclic_binary(2, 2)), 1u);
}

TEST(CountGates, Bounds) {
    for (size_t k = 2; k <= 12; k++) {
        EXPECT_EQ(count_gates(build_symmetric_recursive(k, 2)), k * (k - 1) / 2);
    }
    for (size_t k = 2; k <= 64; k++) {
        auto count = count_gates(build_cyclic_binary(k, 2));
        EXPECT_LE(count, (k - 1) * (static_cast<size_t>(std::floor(std::log2(k - 1))) + 1)) << k;
        if ((k & (k - 1)) == 0) {
            EXPECT_LE(static_cast<double>(count), closed_form_count(GroupFamily::Cyclic, k)) << k;
        }
    }
    for (size_t k : {4, 8, 16, 32}) {
        EXPECT_LE(static_cast<double>(count_gates(build_dihedral(k, 2))), closed_form_count(GroupFamily::Dihedral, k));
    }
}

TEST(ClosedFormCount, Examples) {
    EXPECT_DOUBLE_EQ(closed_form_count(GroupFamily::Symmetric, 10), 45);
    EXPECT_DOUBLE_EQ(closed_form_count(GroupFamily::Cyclic, 8), 21);
    EXPECT_DOUBLE_EQ(closed_form_count(GroupFamily::Dihedral, 8), 48);
    EXPECT_THROW(closed_form_count(GroupFamily::Alternating, 4), std::invalid_argument);
    EXPECT_THROW(closed_form_count(GroupFamily::Quaternion, 8), std::invalid_argument);
}

TEST(DepthEstimate, PerFamily) {
    EXPECT_DOUBLE_EQ(depth_estimate(build_cyclic_binary(5, 2)), 5);
    EXPECT_DOUBLE_EQ(depth_estimate(build_cyclic_binary(8, 2)), 5);
    EXPECT_DOUBLE_EQ(depth_estimate(build_dihedral(8, 2)), 6);
    EXPECT_DOUBLE_EQ(depth_estimate(build_symmetric_recursive(5, 2)), 10);
}

TEST(Sweep, RowOrderAndSkips) {
    auto rows = sweep({GroupFamily::Symmetric, GroupFamily::Cyclic, GroupFamily::Dihedral}, kW, 2, 10);
    ASSERT_EQ(rows.size(), 9u + 9u + 8u);
    EXPECT_EQ(rows[0].group, GroupSpec::symmetric(2));
    EXPECT_EQ(rows[9].group, GroupSpec::cyclic(2));
    EXPECT_EQ(rows[18].group, GroupSpec::dihedral(3));
    EXPECT_EQ(rows.back().group, GroupSpec::dihedral(10));
    EXPECT_THROW(sweep({GroupFamily::Symmetric}, kW, 5, 4), std::invalid_argument);
    EXPECT_THROW(sweep({GroupFamily::Alternating}, kW, 2, 4), std::invalid_argument);
}

TEST(Sweep, ReducedWStateOrdering) {
    auto rows = sweep({GroupFamily::Symmetric, GroupFamily::Cyclic, GroupFamily::Dihedral}, kW, 3, 10);
    auto find = [&](GroupFamily f, size_t k) {
        for (const auto &r : rows) {
            if (r.group.family() == f && r.k == k) {
                return r;
            }
        }
        throw std::logic_error("missing row");
    };
    for (size_t k = 3; k <= 10; k++) {
        auto s = find(GroupFamily::Symmetric, k), c = find(GroupFamily::Cyclic, k), d = find(GroupFamily::Dihedral, k);
        EXPECT_GE(c.p_acc, d.p_acc - 1e-15) << k;
        EXPECT_GE(d.p_acc, s.p_acc - 1e-15) << k;
        EXPECT_LT(c.p_acc, 1);
        EXPECT_NEAR(s.p_acc, accept_group(GroupSpec::symmetric(k), kW).value, 0);
    }
    auto c10 = find(GroupFamily::Cyclic, 10), s10 = find(GroupFamily::Symmetric, 10);
    ASSERT_TRUE(c10.ratio && s10.ratio);
    EXPECT_LT(*c10.ratio, *s10.ratio);
}

TEST(Sweep, PureSpectrumHasNoRatio) {
    auto rows = sweep({GroupFamily::Symmetric, GroupFamily::Cyclic}, Spectrum::pure(), 2, 4);
    for (const auto &row : rows) {
        EXPECT_EQ(row.p_acc, 1.0);
        EXPECT_EQ(row.rejection, 0.0);
        EXPECT_FALSE(row.ratio.has_value());
    }
    std::ostringstream csv;
    write_csv(rows, csv);
    EXPECT_NE(csv.str().find("S,2,1,1,1,1,NA\n"), std::string::npos);
}

TEST(WriteCsv, HeaderAndFormatting) {
    auto rows = sweep({GroupFamily::Symmetric}, kW, 2, 3);
    std::ostringstream csv;
    write_csv(rows, csv);
    // p^(2) = (1 + 5/9)/2 = 7/9, ratio = 1 / (2/9); p^(3) = 5/9, ratio = 3 / (4/9).
    EXPECT_EQ(csv.str(),
              "group,k,cswap_actual,cswap_formula,depth,p_acc,ratio\n"
              "S,2,1,1,1,0.777777777778,4.5\n"
              "S,3,3,3,3,0.555555555556,6.75\n");
}
