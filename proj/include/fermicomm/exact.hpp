// Copyright 2026 The fermicomm Authors
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

#ifndef FERMICOMM_EXACT_HPP
#define FERMICOMM_EXACT_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fermicomm {

using ExactInteger = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

ExactInteger factorial(std::int64_t m);

/// C(m, k); zero outside 0 <= k <= m. Negative m is rejected.
ExactInteger binomial(std::int64_t m, std::int64_t k);

/// Rising factorial (x)_k = x (x+1) ... (x+k-1) over the rationals.
ExactRational rising_factorial(const ExactRational& x, std::int64_t k);

ExactInteger pow_int(const ExactInteger& base, unsigned exponent);

/// Throws ConsistencyError naming `what` if q is not an integer.
ExactInteger require_integer(const ExactRational& q, const std::string& what);

std::string to_string(const ExactInteger& v);
/// "p/q", or "p" when the denominator is one.
std::string to_string(const ExactRational& v);
double to_double(const ExactRational& v);
double to_double(const ExactInteger& v);

/// Natural log of a positive integer, safe beyond double range.
double log_of(const ExactInteger& v);

}  // namespace fermicomm

#endif
