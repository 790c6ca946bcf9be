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


#ifndef FERMICOMM_GT_BASIS_HPP
#define FERMICOMM_GT_BASIS_HPP

#include <string>
#include <vector>

#include "fermicomm/dimensions.hpp"
#include "fermicomm/exact.hpp"
#include "fermicomm/multicopy.hpp"
#include "fermicomm/sparse_operator.hpp"

// Gelfand-Tsetlin bases of the commutants.
//
// PP weights are partitions inside an n x t box and patterns follow the
// U(t) > U(t-1) > ... > U(1) chain. Gaussian weights are so(t) highest
// weights with lambda_1 <= n and patterns follow so(t) > so(t-1) > ... > so(2).

namespace fermicomm {

/// Highest weight: a partition (pp) or an so(t) weight whose last entry may be
/// negative when t is even.
using Weight = std::vector<int>;

std::string weight_to_string(const Weight& w);

struct GTPattern {
    /// Top row first.
    std::vector<std::vector<int>> rows;

    std::string to_string() const;
    bool operator==(const GTPattern&) const = default;
    auto operator<=>(const GTPattern&) const = default;
};

/// All admissible weights, lexicographic.
std::vector<Weight> enumerate_weights(GroupKind group, int t, int n);

/// All GT patterns with top row lambda. Throws DomainError for inadmissible lambda.
std::vector<GTPattern> gt_patterns(const Weight& lambda, GroupKind group, int t);

/// sum over weights of (pattern count)^2, doubled for the Gaussian group.
ExactInteger gt_dimension_count(GroupKind group, int t, int n);

enum class ParityFlag { plain, gamma1 };

struct CommutantBasisElement {
    Weight lambda;
    GTPattern row;
    GTPattern col;
    ParityFlag parity = ParityFlag::plain;
    ComplexSparseOperator op;
};

// -- spectral tools ---------------------------------------------------------

/// Checks that every eigenvalue of the Hermitian operator a lies within tol of
/// some node. Throws VerificationFailure naming `what` otherwise.
void check_spectrum(const ComplexSparseOperator& a, const std::vector<double>& nodes, const std::string& what,
                    double tol = 1e-8);

/// prod_{s != target} (a - s) / (target - s) over the given nodes.
ComplexSparseOperator lagrange_projector(const ComplexSparseOperator& a, const std::vector<double>& nodes,
                                         double target);

// -- PP, t = 1 ----------------------------------------------------------------

/// Projector onto the Hamming-weight-r sector built by Lagrange interpolation in N.
ComplexSparseOperator pp_number_projector(int n, int r);

/// K_a(x; N) = sum_j (-1)^j C(x, j) C(N - x, a - j).
ExactInteger krawtchouk(int a, int x, int big_n);

/// E_a = sum over a-subsets of products of single-qubit Z.
ComplexSparseOperator pp_symmetric_basis(int n, int a);

/// {P_r}; weights and patterns are (r).
std::vector<CommutantBasisElement> pp_t1_basis(int n);

// -- PP, t = 2 ----------------------------------------------------------------

struct PPt2Operators {
    ComplexSparseOperator j_plus, j_minus, j_z, j_squared, number;
};
PPt2Operators pp_t2_operators(int n);

/// Matrix units X^{(l1,l2)}_{m,m'}; patterns are {{l1,l2},{m}}.
std::vector<CommutantBasisElement> pp_t2_basis(int n);

// -- Gaussian, t = 1, 2 -------------------------------------------------------

/// {I, Gamma}.
std::vector<CommutantBasisElement> gauss_t1_basis(int n);

/// P_m for m = -n..n, spectral projectors of M = -i Q~_{1,2}.
std::vector<ComplexSparseOperator> gauss_t2_projectors(int n);

/// {P_m} and {Gamma_1 P_m}; weights are (m).
std::vector<CommutantBasisElement> gauss_t2_basis(int n);

/// Q_k^0 = sum_{mu_1<...<mu_k} c_mu... (x) c_mu..., Q_k^1 with a Gamma prefix on copy 1.
/// Q_0^0 = I and Q_0^1 = Gamma (x) I.
ComplexSparseOperator qk_operator(int n, int k, int flavor);

/// E_{2k} = Q^0_{2k}, E_{2k+1} = i Q^1_{2k+1}: the k-th elementary symmetric polynomial
/// in y_mu = -i c~_mu(1) c~_mu(2), so that E_k = K_k(n - M; 2n).
ComplexSparseOperator gauss_t2_e_operator(int n, int k);

struct ChangeOfBasisReport {
    int n = 0;
    double max_forward_residual = 0.0;
    int worst_k = 0;
    double max_inverse_residual = 0.0;
    int worst_m = 0;
};
/// Checks E_k = sum_m K_k(n-m; 2n) P_m and its inversion.
/// Throws VerificationFailure when either residual exceeds tol.
ChangeOfBasisReport gauss_t2_change_of_basis(int n, double tol = 1e-9);

// -- Gaussian, t = 3 ----------------------------------------------------------

struct SpinOperators {
    ComplexSparseOperator j_z, j_plus, j_minus, j_squared;
};
/// J_z = -i Q~_{12}, J_+ = Q~_{13} + i Q~_{23}, J_- = J_+^dagger.
SpinOperators gauss_t3_operators(int n);

/// Matrix units X^{(l)}_{m,m'} with patterns {{l},{m}}, plus Gamma_1 X.
std::vector<CommutantBasisElement> gauss_t3_basis(int n);

struct EmergentFermionReport {
    double anticommutation_residual = 0.0;
    double number_relation_residual = 0.0;  ///< ||J_z - (n - N_f)||_F
    double ladder_residual = 0.0;           ///< J_+ and J_- in terms of f and c~(3)
    double vacuum_projector_residual = 0.0; ///< |0_f><0_f| (x) I vs the Lagrange P_{n,n}
    ComplexSparseOperator vacuum_projector;
};
EmergentFermionReport gauss_t3_emergent_fermions(int n);

// -- Gaussian, t = 4 ----------------------------------------------------------

struct T4Generators {
    /// j_plus_sector[i] = J_{i+1}^+, j_minus_sector[i] = J_{i+1}^-.
    std::vector<ComplexSparseOperator> j_plus_sector, j_minus_sector;
    ComplexSparseOperator raise_plus, lower_plus, raise_minus, lower_minus;
    ComplexSparseOperator casimir_plus, casimir_minus;
    double su2_bracket_residual = 0.0;
    double cross_commutator_residual = 0.0;
};
/// J_i^{+/-} = -(i/2)(Q~ +/- Q~) with the su(2) brackets verified.
T4Generators gauss_t4_generators(int n);

/// Matrix units labelled by (j+, j-) with weights (j+ + j-, j+ - j-) and
/// patterns {{l1, l2}, {2 m+, 2 m-}}, plus Gamma_1 X.
std::vector<CommutantBasisElement> gauss_t4_basis(int n);

/// Explicit basis for pp t <= 2 and gauss t <= 4. Throws DomainError otherwise.
std::vector<CommutantBasisElement> commutant_basis(GroupKind group, int t, int n);

// -- verification -------------------------------------------------------------

struct MatrixUnitReport {
    double product_residual = 0.0;      ///< X_{TT'} X_{SS'} - delta_{T'S} X_{TS'} inside a block
    double cross_block_residual = 0.0;  ///< products across blocks
    double orthogonality_residual = 0.0;///< tr(X^dagger Y) - c_lambda delta
    std::vector<double> block_constants;
};
/// Checks the plain elements of a basis as matrix units.
MatrixUnitReport verify_matrix_units(const std::vector<CommutantBasisElement>& basis);

/// Rank of the Hilbert-Schmidt Gram matrix (relative threshold 1e-9).
int gram_rank(const std::vector<CommutantBasisElement>& basis);

}  // namespace fermicomm

#endif
