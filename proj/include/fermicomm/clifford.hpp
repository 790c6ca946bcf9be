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

#ifndef FERMICOMM_CLIFFORD_HPP
#define FERMICOMM_CLIFFORD_HPP

#include <cstdint>
#include <string_view>

#include "fermicomm/sparse_operator.hpp"

// Single-copy fermionic operators on n qubits under the Jordan-Wigner map.
//
// Bit convention: qubit (mode) 1 is the most significant bit of the basis
// index, so the occupation bitstring b_1 ... b_n sits at index
// sum_k b_k 2^(n-k). |0> is an empty mode, |1> an occupied one.

namespace fermicomm {

/// Occupation of mode p (1-based) in basis index `index` of an n-mode space.
inline bool occupied(std::uint64_t index, int n, int p) {
    return (index >> (n - p)) & 1u;
}

/// Builds a Pauli string from letters in {I, X, Y, Z}; letter k acts on qubit k+1.
ComplexSparseOperator pauli_string(std::string_view letters);

/// Jordan-Wigner Majorana c_mu, 1 <= mu <= 2n.
/// c_{2p-1} = Z..Z X I..I and c_{2p} = Z..Z Y I..I with the X/Y on qubit p.
ComplexSparseOperator majorana(int n, int mu);

/// a_p = (c_{2p-1} + i c_{2p}) / 2, or its adjoint when `dagger` is set.
ComplexSparseOperator ladder(int n, int p, bool dagger);

/// Gamma = (-i)^n c_1 ... c_{2n} = Z^{(x)n}.
ComplexSparseOperator parity_op(int n);

/// N = sum_p a_p^dagger a_p, diagonal with the Hamming weight of each index.
ComplexSparseOperator number_op(int n);

/// a_p^dagger a_q.
ComplexSparseOperator hopping(int n, int p, int q);

void check_mode_count(int n);

}  // namespace fermicomm

#endif
