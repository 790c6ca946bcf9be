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


#ifndef FERMICOMM_DIMENSIONS_HPP
#define FERMICOMM_DIMENSIONS_HPP

#include "fermicomm/exact.hpp"
#include "fermicomm/partition.hpp"

namespace fermicomm {

enum class GroupKind { pp, gauss };

/// prod_{j=0}^{n-1} j! (j+2t)! / (j+t)!^2.
ExactInteger pp_dim_product_formula(int t, int n);
/// prod_{i,j=1}^{t} (n+i+j-1) / (i+j-1).
ExactInteger pp_dim_double_product(int t, int n);
/// Dimension of the t-th commutant of the PP Gaussian unitaries on n modes.
/// Evaluates both product formulas and throws ConsistencyError if they differ.
ExactInteger dim_pp_commutant(int t, int n);

/// 2^{1-n} prod_{j=0}^{n-1} (2j)! (2t+2j)! / ((t+j)! (t+n+j-1)!), for t, n >= 1.
ExactInteger dim_gauss_commutant(int t, int n);

/// Coefficient of n^{t^2} in dim_pp_commutant(t, n): prod_{k=1}^t (k-1)!/(t+k-1)!.
ExactRational pp_dim_leading_coefficient(int t);

/// Large-t estimate K_n 4^{nt} t^{-n^2/2} with K_n = pi^{-n/2} 2^{n(n-1)/2} prod_{j<n} j!.
double pp_dim_large_t_estimate(int t, int n);
/// Natural log of the same estimate; finite where the estimate overflows.
double pp_dim_large_t_log_estimate(int t, int n);

/// Dimension of the U(t) irrep with highest weight lambda (at most t parts):
/// prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i).
ExactInteger weyl_ut_irrep_dim(const Partition& lambda, int t);

/// Nullspace dimension of the stacked commutator map of the lifted one-copy
/// Lie algebra on t copies. Throws ResourceError if n*t > max_qubits.
int brute_force_commutant_dim(int n, int t, GroupKind group, int max_qubits = 6);

}  // namespace fermicomm

#endif
