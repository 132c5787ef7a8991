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

#ifndef CYCLESEP_VERIFY_H
#define CYCLESEP_VERIFY_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cyclesep {

/// Outcome of one cross-check. `max_error` is the largest deviation seen (or
/// the largest violation of an inequality); the check passes when every case
/// stays within `tolerance`.
struct IdentityCheck {
    std::string name;
    bool passed = true;
    double max_error = 0;
    double tolerance = 0;
    size_t cases = 0;
    std::string detail;
};

struct VerifyOptions {
    uint64_t seed = 1729;
    size_t random_spectra = 50;
    size_t max_dim = 6;
};

/// Runs every evaluator, circuit and projector identity on seeded random
/// spectra plus the fixed (1/2,1/2) and (2/3,1/3) spectra.
std::vector<IdentityCheck> run_identity_battery(const VerifyOptions &options = {});

bool all_passed(const std::vector<IdentityCheck> &checks);

}  // namespace cyclesep

#endif
