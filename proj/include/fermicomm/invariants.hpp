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


#ifndef FERMICOMM_INVARIANTS_HPP
#define FERMICOMM_INVARIANTS_HPP

#include <map>
#include <string>
#include <vector>

#include "fermicomm/dimensions.hpp"
#include "fermicomm/exact.hpp"
#include "fermicomm/sparse_operator.hpp"

// Two-copy invariants of single states: overlaps Tr[rho^{(x)2} X] with commutant elements.

namespace fermicomm {

struct InvariantEntry {
    std::vector<int> label;
    double value;
};

struct InvariantReport {
    std::string quantity;
    std::vector<std::string> label_names;
    std::vector<InvariantEntry> entries;
    std::map<std::string, double> residuals;
    int n = 0;
    int t = 2;
    std::string state;

    /// Value for `label`; throws DomainError if absent.
    double at(const std::vector<int>& label) const;
    double sum() const;
};

/// p_{k,i} = (-1)^{floor(k/2)} / d * Tr[rho^{(x)2} Q^i_k] for k = 0..2n, i = 0, 1.
/// Evaluated from single-copy Majorana monomial expectations. For pure states the
/// i = 0 family sums to one; residuals["sum_p0"] records |sum_k p_{k,0} - 1| and
/// residuals["imag"] the largest discarded imaginary part.
InvariantReport p_ki_spectrum(const StateVector& psi, int n);

/// ||(N - r) psi||. Fixed-particle states have residual below 1e-10.
double number_residual(const StateVector& psi, int n, int r);

/// p_j = Tr[rho^{(x)2} X^{(2r,j)}_{00}] for j = 0..min(r, n-r).
/// Throws DomainError unless psi is an N = r eigenstate.
InvariantReport spin_sector_probs(const StateVector& psi, int n, int r);

/// K-body reduced density matrix rho_{a a'} = <psi| C_{a'}^dagger C_a |psi>, with
/// C_a^dagger = a_{i1}^dagger ... a_{iK}^dagger over increasing K-tuples in lexicographic order.
DenseMatrix rdm(const StateVector& psi, int n, int k);

/// 1 - C(r, K)^{-2} tr[(rho^{(K)})^2] for an N = r eigenstate.
double quadratic_entropy(const StateVector& psi, int n, int k);

/// Increasing K-tuples of modes 1..n in lexicographic order.
std::vector<std::vector<int>> mode_tuples(int n, int k);

/// sum_{a,a'} C_{a'}^dagger C_a (x) C_a^dagger C_{a'} on two copies.
ComplexSparseOperator omega_k(int n, int k);

/// Minimal k >= 1 with ||Omega~_{12}^k psi^{(x)2}|| < 1e-9.
int plucker_rank(const StateVector& psi, int n);

struct AnnihilationReport {
    double max_residual = 0.0;
    int worst_i = 0;
    int worst_j = 0;
};

/// max over i != j of ||G_{ij} psi^{(x)t}|| with G = Omega~ (pp) or Q~ (gauss).
AnnihilationReport free_state_annihilation(const StateVector& psi, int n, int t, GroupKind kind);

/// (2j+1)/(r+j+1) C(n+1, r-j) C(n, r+j): dimension of the U(n) irrep (2^{r-j}, 1^{2j}).
ExactInteger d_rj(int n, int r, int j);

}  // namespace fermicomm

#endif
