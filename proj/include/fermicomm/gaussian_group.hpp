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

#ifndef FERMICOMM_GAUSSIAN_GROUP_HPP
#define FERMICOMM_GAUSSIAN_GROUP_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "fermicomm/rng.hpp"
#include "fermicomm/sparse_operator.hpp"

namespace fermicomm {

/// Element of SO(2n) acting on the Majorana vector.
class OrthogonalMatrix {
   public:
    /// Validates orthogonality and det = +1 to 1e-10.
    explicit OrthogonalMatrix(Eigen::MatrixXd m);
    static OrthogonalMatrix identity(int n);

    int modes() const { return static_cast<int>(m_.rows() / 2); }
    const Eigen::MatrixXd& matrix() const { return m_; }
    OrthogonalMatrix operator*(const OrthogonalMatrix& other) const;

   private:
    Eigen::MatrixXd m_;
};

/// Element of U(n) acting on the creation operators.
class UnitaryMatrix {
   public:
    /// Validates unitarity to 1e-10.
    explicit UnitaryMatrix(Eigen::MatrixXcd m);
    static UnitaryMatrix identity(int n);

    int modes() const { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXcd& matrix() const { return m_; }

   private:
    Eigen::MatrixXcd m_;
};

/// Coefficient matrix of a quadratic Hamiltonian.
///
/// general: H = (i/4) sum_{mu,nu} h_{mu nu} c_mu c_nu with h real antisymmetric 2n x 2n.
/// pp:      H = sum_{p,q} h_{pq} a_p^dagger a_q with h Hermitian n x n.
struct QuadraticHamiltonianSpec {
    enum class Kind { general, pp };

    Kind kind;
    Eigen::MatrixXcd h;

    /// Checks the (anti)symmetry invariant to 1e-12.
    void validate() const;
    ComplexSparseOperator to_operator() const;
};

OrthogonalMatrix sample_orthogonal(int n, Philox& rng);
/// Haar SO(2n) draw from substream `index` of `seed`.
OrthogonalMatrix sample_orthogonal(int n, std::uint64_t seed, std::uint64_t index = 0);
UnitaryMatrix sample_unitary(int n, Philox& rng);
UnitaryMatrix sample_unitary(int n, std::uint64_t seed, std::uint64_t index = 0);

/// Principal real logarithm of an SO(2n) element via the real Schur form.
/// Throws RetryError when an eigenvalue lies within 1e-8 of -1.
Eigen::MatrixXd orthogonal_log(const OrthogonalMatrix& u);
/// Principal logarithm of a unitary (anti-Hermitian result).
/// Throws RetryError when an eigenvalue lies within 1e-8 of -1.
Eigen::MatrixXcd unitary_log(const UnitaryMatrix& u);

/// The 2^n x 2^n Gaussian unitary R with R c_mu R^dagger = sum_nu U_{mu nu} c_nu.
/// Defined up to the global sign of the spin cover.
DenseMatrix compile_gaussian(int n, const OrthogonalMatrix& u);
/// The 2^n x 2^n PP Gaussian unitary R with R a_p^dagger R^dagger = sum_q U_{qp} a_q^dagger.
DenseMatrix compile_pp_gaussian(int n, const UnitaryMatrix& u);

/// max_mu || R c_mu R^dagger - sum_nu U_{mu nu} c_nu ||_F.
double majorana_covariance_residual(const DenseMatrix& r, const OrthogonalMatrix& u);
/// max_p || R a_p^dagger R^dagger - sum_q U_{qp} a_q^dagger ||_F.
double creation_covariance_residual(const DenseMatrix& r, const UnitaryMatrix& u);

/// a_{p_1}^dagger ... a_{p_r}^dagger |0> with p_1 < ... < p_r (sorted internally).
StateVector slater_state(int n, std::span<const int> occupied);

/// Random Gaussian unitary R(U) from substream `index`, resampling past branch cuts.
DenseMatrix sample_gaussian_unitary(int n, std::uint64_t seed, std::uint64_t index);
DenseMatrix sample_pp_gaussian_unitary(int n, std::uint64_t seed, std::uint64_t index);

/// Haar-random pure state on 2^n amplitudes (normalized complex Gaussian vector).
StateVector sample_haar_state(int n, Philox& rng);

}  // namespace fermicomm

#endif
