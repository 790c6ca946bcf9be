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

#include "fermicomm/clifford.hpp"

#include <bit>
#include <string>
#include <vector>

#include "fermicomm/errors.hpp"

namespace fermicomm {

namespace {

constexpr int kMaxSingleCopyModes = 30;

}  // namespace

void check_mode_count(int n) {
    if (n < 1 || n > kMaxSingleCopyModes) {
        throw DomainError("mode count must be in [1, " + std::to_string(kMaxSingleCopyModes) + "], got " +
                          std::to_string(n));
    }
}

ComplexSparseOperator pauli_string(std::string_view letters) {
    const int n = static_cast<int>(letters.size());
    if (n == 0) {
        return ComplexSparseOperator::identity(1);
    }
    check_mode_count(n);
    std::uint64_t flip = 0;
    std::uint64_t zmask = 0;
    int y_count = 0;
    for (int k = 0; k < n; k++) {
        std::uint64_t bit = std::uint64_t{1} << (n - 1 - k);
        switch (letters[static_cast<std::size_t>(k)]) {
            case 'I':
                break;
            case 'X':
                flip |= bit;
                break;
            case 'Y':
                flip |= bit;
                zmask |= bit;
                y_count++;
                break;
            case 'Z':
                zmask |= bit;
                break;
            default:
                throw DomainError("pauli_string: unknown letter '" + std::string(1, letters[k]) + "'");
        }
    }
    // Y = i X Z, so P = i^{#Y} X^flip Z^zmask: column b maps to row b^flip
    // with phase i^{#Y} (-1)^{popcount(b & zmask)}.
    static const Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Complex base = kIPowers[y_count % 4];
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<OperatorEntry> entries;
    entries.reserve(dim);
    for (std::uint64_t col = 0; col < dim; col++) {
        Complex v = (std::popcount(col & zmask) & 1) ? -base : base;
        entries.push_back({col ^ flip, col, v});
    }
    return ComplexSparseOperator::from_entries(dim, entries);
}

ComplexSparseOperator majorana(int n, int mu) {
    check_mode_count(n);
    if (mu < 1 || mu > 2 * n) {
        throw DomainError("Majorana index " + std::to_string(mu) + " out of range [1, " + std::to_string(2 * n) +
                          "]");
    }
    const int p = (mu + 1) / 2;
    std::string letters(static_cast<std::size_t>(n), 'I');
    for (int k = 0; k < p - 1; k++) {
        letters[static_cast<std::size_t>(k)] = 'Z';
    }
    letters[static_cast<std::size_t>(p - 1)] = (mu % 2 == 1) ? 'X' : 'Y';
    return pauli_string(letters);
}

ComplexSparseOperator ladder(int n, int p, bool dagger) {
    check_mode_count(n);
    if (p < 1 || p > n) {
        throw DomainError("mode index " + std::to_string(p) + " out of range [1, " + std::to_string(n) + "]");
    }
    const Complex i(0.0, 1.0);
    ComplexSparseOperator a = 0.5 * (majorana(n, 2 * p - 1) + i * majorana(n, 2 * p));
    return dagger ? a.adjoint() : a;
}

ComplexSparseOperator parity_op(int n) {
    check_mode_count(n);
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<Complex> diag(dim);
    for (std::uint64_t b = 0; b < dim; b++) {
        diag[b] = (std::popcount(b) & 1) ? -1.0 : 1.0;
    }
    return ComplexSparseOperator::diagonal(diag);
}

ComplexSparseOperator number_op(int n) {
    check_mode_count(n);
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<Complex> diag(dim);
    for (std::uint64_t b = 0; b < dim; b++) {
        diag[b] = static_cast<double>(std::popcount(b));
    }
    return ComplexSparseOperator::diagonal(diag);
}

ComplexSparseOperator hopping(int n, int p, int q) {
    return ladder(n, p, true) * ladder(n, q, false);
}

}  // namespace fermicomm
