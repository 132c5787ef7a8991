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

#ifndef CYCLESEP_ERRORS_H
#define CYCLESEP_ERRORS_H

#include <stdexcept>
#include <string>

namespace cyclesep {

/// Raised when a computation would exceed one of the size caps (group order,
/// dense matrix dimension, statevector dimension, permanent order).
class CapExceeded : public std::runtime_error {
   public:
    explicit CapExceeded(const std::string &what) : std::runtime_error(what) {
    }
};

}  // namespace cyclesep

#endif
