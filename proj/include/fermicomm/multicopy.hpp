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

#ifndef FERMICOMM_MULTICOPY_HPP
#define FERMICOMM_MULTICOPY_HPP

#include <cstddef>
#include <vector>

#include "fermicomm/sparse_operator.hpp"

// Operators on t copies of an n-mode Fock space. Copy 1 is the leftmost
// tensor factor. Dressed operators carry the parities of all earlier copies,
// so operators on different copies anticommute.

namespace fermicomm {

/// Total qubit cap n*t. Default 22; FERMICOMM_MAX_QUBITS overrides it.
int max_total_qubits();

class CopySpace {
   public:
    /// Throws DomainError for n < 1 or t < 1, ResourceError past the qubit cap.
    CopySpace(int n, int t);

    int n() const { return n_; }
    int t() const { return t_; }
    int qubits() const { return n_ * t_; }
    std::size_t dim() const { return std::size_t{1} << (n_ * t_); }
    std::size_t copy_dim() const { return std::size_t{1} << n_; }

    bool operator==(const CopySpace&) const = default;

   private:
    int n_;
    int t_;
};

/// Gamma_1 x ... x Gamma_{j-1} x c_mu x I x ... x I.
ComplexSparseOperator dressed_majorana(const CopySpace& cs, int mu, int j);
/// Parity-dressed a_p on copy j, or its adjoint.
ComplexSparseOperator dressed_ladder(const CopySpace& cs, int p, int j, bool dagger);
/// Z^{(x)n} on copy j, identity elsewhere.
ComplexSparseOperator copy_parity(const CopySpace& cs, int j);
/// sum_p a~_p^dagger(j) a~_p(k). Memoized.
ComplexSparseOperator omega(const CopySpace& cs, int j, int k);
/// (1/2) sum_mu c~_mu(j) c~_mu(k) for j < k. Memoized.
ComplexSparseOperator qtilde(const CopySpace& cs, int j, int k);
/// Antisymmetric extension: Q~_{j,k} for j < k, -Q~_{k,j} for j > k, zero for j = k.
ComplexSparseOperator qtilde_antisymmetric(const CopySpace& cs, int j, int k);

/// All Omega~_{j,k}, row-major over (j, k).
std::vector<ComplexSparseOperator> pp_generators(const CopySpace& cs);
/// All Q~_{j,k} with j < k, plus Gamma_1.
std::vector<ComplexSparseOperator> gauss_generators(const CopySpace& cs);

/// Largest Frobenius residual of the u(t) bracket over all index quadruples.
double pp_lie_closure_residual(const CopySpace& cs);
/// Largest Frobenius residual of the so(t) bracket over all index quadruples.
double gauss_lie_closure_residual(const CopySpace& cs);

/// Drops all memoized generators.
void clear_generator_cache();

/// R^{(x)t} X for a single-copy matrix R and a d^t x d^t matrix X.
DenseMatrix apply_tensor_power(const DenseMatrix& r, int t, const DenseMatrix& x);
/// R^{(x)t} X R^{dagger (x)t}.
DenseMatrix conjugate_tensor_power(const DenseMatrix& r, int t, const DenseMatrix& x);
/// ||R^{(x)t} G R^{dagger (x)t} - G||_F / ||G||_F (0 for G = 0).
double commutation_residual(const ComplexSparseOperator& g, const DenseMatrix& r, int t);
double commutation_residual(const DenseMatrix& g, const DenseMatrix& r, int t);

}  // namespace fermicomm

#endif
