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

#include "fermicomm/exact.hpp"

#include <cmath>

#include "fermicomm/errors.hpp"

namespace fermicomm {

ExactInteger factorial(std::int64_t m) {
    if (m < 0) {
        throw DomainError("factorial of a negative number");
    }
    ExactInteger out = 1;
    for (std::int64_t i = 2; i <= m; i++) {
        out *= i;
    }
    return out;
}

ExactInteger binomial(std::int64_t m, std::int64_t k) {
    if (m < 0) {
        throw DomainError("binomial with negative upper argument");
    }
    if (k < 0 || k > m) {
        return 0;
    }
    if (k > m - k) {
        k = m - k;
    }
    ExactInteger out = 1;
    for (std::int64_t i = 1; i <= k; i++) {
        out *= m - k + i;
        out /= i;
    }
    return out;
}

ExactRational rising_factorial(const ExactRational& x, std::int64_t k) {
    if (k < 0) {
        throw DomainError("rising factorial with negative length");
    }
    ExactRational out = 1;
    for (std::int64_t i = 0; i < k; i++) {
        out *= x + i;
    }
    return out;
}

ExactInteger pow_int(const ExactInteger& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

ExactInteger require_integer(const ExactRational& q, const std::string& what) {
    if (boost::multiprecision::denominator(q) != 1) {
        throw ConsistencyError(what + " is not an integer: " + to_string(q));
    }
    return boost::multiprecision::numerator(q);
}

std::string to_string(const ExactInteger& v) {
    return v.str();
}

std::string to_string(const ExactRational& v) {
    const ExactInteger& num = boost::multiprecision::numerator(v);
    const ExactInteger& den = boost::multiprecision::denominator(v);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

double to_double(const ExactRational& v) {
    return v.convert_to<double>();
}

double to_double(const ExactInteger& v) {
    return v.convert_to<double>();
}

double log_of(const ExactInteger& v) {
    if (v <= 0) {
        throw DomainError("log of a non-positive integer");
    }
    // Shift down to a double-representable mantissa and add back the exponent.
    std::size_t bits = boost::multiprecision::msb(v) + 1;
    if (bits <= 900) {
        return std::log(v.convert_to<double>());
    }
    std::size_t shift = bits - 64;
    ExactInteger top = v >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

}  // namespace fermicomm
