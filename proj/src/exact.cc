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

#include "cyclesep/exact.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace cyclesep {

Integer factorial(uint64_t n) {
    Integer result = 1;
    for (uint64_t i = 2; i <= n; i++) {
        result *= i;
    }
    return result;
}

Integer int_pow(const Integer &base, uint64_t exponent) {
    Integer result = 1;
    Integer b = base;
    while (exponent) {
        if (exponent & 1) {
            result *= b;
        }
        exponent >>= 1;
        if (exponent) {
            b *= b;
        }
    }
    return result;
}

Rational rational_pow(const Rational &base, uint64_t exponent) {
    Rational result = 1;
    Rational b = base;
    while (exponent) {
        if (exponent & 1) {
            result *= b;
        }
        exponent >>= 1;
        if (exponent) {
            b *= b;
        }
    }
    return result;
}

Rational exact_rational(double value) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument("exact_rational: non-finite value");
    }
    if (value == 0) {
        return 0;
    }
    int exp = 0;
    double mant = std::frexp(value, &exp);
    // 53 bits of mantissa scaled up to an integer.
    auto scaled = static_cast<int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    Rational result = Integer(scaled);
    if (exp > 0) {
        result *= int_pow(Integer(2), static_cast<uint64_t>(exp));
    } else if (exp < 0) {
        result /= int_pow(Integer(2), static_cast<uint64_t>(-exp));
    }
    return result;
}

double to_double(const Rational &value) {
    return value.convert_to<double>();
}

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

double round_to_12_digits(double value) {
    return std::strtod(format_real(value).c_str(), nullptr);
}

}  // namespace cyclesep
