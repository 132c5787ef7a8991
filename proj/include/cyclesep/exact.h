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

#ifndef CYCLESEP_EXACT_H
#define CYCLESEP_EXACT_H

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclesep {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(uint64_t n);
Integer int_pow(const Integer &base, uint64_t exponent);
Rational rational_pow(const Rational &base, uint64_t exponent);

/// Exact value of a finite double.
Rational exact_rational(double value);

double to_double(const Rational &value);

inline bool is_integer(const Rational &value) {
    return boost::multiprecision::denominator(value) == 1;
}

/// Formats with 12 significant digits ("%.12g").
std::string format_real(double value);

/// Rounds to the value that format_real prints.
double round_to_12_digits(double value);

}  // namespace cyclesep

#endif
