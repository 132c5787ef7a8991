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

#ifndef CYCLESEP_CLI_H
#define CYCLESEP_CLI_H

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cyclesep/cycle_index.h"
#include "cyclesep/group.h"
#include "cyclesep/states.h"

namespace cyclesep {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCapExceeded = 2;
inline constexpr int kExitVerificationFailed = 3;

/// Entry point shared by the binary and the tests. `args` excludes the program
/// name. Results go to `out` (or the --output file), diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// "0.5,0.5" or "2/3, 1/3". Renormalizes to sum 1; `shift` receives |sum - 1|.
Spectrum parse_spectrum_list(std::string_view text, double *shift = nullptr);

/// {"spectrum": [...]} or {"dims": [dA, dB], "amplitudes": [[re, im], ...]}
/// with amplitudes in row-major (a, b) order. Renormalizes; `shift` receives
/// the deviation of the input norm (or trace) from 1.
Spectrum spectrum_from_state_json(const nlohmann::json &state, double *shift = nullptr);

/// "a:b" with 1 <= a <= b.
std::pair<size_t, size_t> parse_k_range(std::string_view text);

/// {"degree": k, "terms": [{"type": {"j": a_j}, "num": p, "den": q}, ...]}.
nlohmann::json polynomial_to_json(const CycleIndexPolynomial &z);

/// Pretty JSON with every float printed to 12 significant digits.
void write_json(const nlohmann::json &value, std::ostream &out);

}  // namespace cyclesep

#endif
