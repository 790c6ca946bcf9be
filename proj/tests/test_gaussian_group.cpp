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


#include <gtest/gtest.h>

#include <bit>
#include <cmath>

#include "fermicomm/clifford.hpp"
#include "fermicomm/errors.hpp"
#include "fermicomm/gaussian_group.hpp"
#include "test_util.hpp"

namespace fermicomm {
namespace {

using testing::dense_majorana;
using testing::max_abs;

DenseMatrix dense_creation(int n, int p) {
    const Complex i(0.0, 1.0);
    return 0.5 * (dense_majorana(n, 2 * p - 1) - i * dense_majorana(n, 2 * p));
}

// Independent evaluation of R c_mu R^dagger - sum_nu U_{mu nu} c_nu.
double covariance_oracle(int n, const DenseMatrix& r, const Eigen::MatrixXd& u) {
    double worst = 0.0;
    for (int mu = 1; mu <= 2 * n; mu++) {
        DenseMatrix expected = DenseMatrix::Zero(r.rows(), r.cols());
        for (int nu = 1; nu <= 2 * n; nu++) {
            expected += u(mu - 1, nu - 1) * dense_majorana(n, nu);
        }
        worst = std::max(worst, (r * dense_majorana(n, mu) * r.adjoint() - expected).norm());
    }
    return worst;
}

double pp_covariance_oracle(int n, const DenseMatrix& r, const Eigen::MatrixXcd& u) {
    double worst = 0.0;
    for (int p = 1; p <= n; p++) {
        DenseMatrix expected = DenseMatrix::Zero(r.rows(), r.cols());
        for (int q = 1; q <= n; q++) {
            expected += u(q - 1, p - 1) * dense_creation(n, q);
        }
        worst = std::max(worst, (r * dense_creation(n, p) * r.adjoint() - expected).norm());
    }
    return worst;
}

TEST(SampleOrthogonal, DeterministicAndSpecial) {
    const auto a = sample_orthogonal(3, 42, 7);
    const auto b = sample_orthogonal(3, 42, 7);
    EXPECT_EQ(a.matrix(), b.matrix());
    EXPECT_NE(a.matrix(), sample_orthogonal(3, 42, 8).matrix());
    for (int s = 0; s < 200; s++) {
        const auto u = sample_orthogonal(2, 1, static_cast<std::uint64_t>(s)).matrix();
        EXPECT_NEAR(u.determinant(), 1.0, 1e-10);
        EXPECT_LT((u.transpose() * u - Eigen::MatrixXd::Identity(4, 4)).norm(), 1e-10);
    }
}

TEST(SampleOrthogonal, FirstMomentVanishes) {
    constexpr int kSamples = 10000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int s = 0; s < kSamples; s++) {
        const double x = sample_orthogonal(2, 11, static_cast<std::uint64_t>(s)).matrix()(0, 0);
        sum += x;
        sum_sq += x * x;
    }
    const double mean = sum / kSamples;
    const double sigma = std::sqrt((sum_sq / kSamples - mean * mean) / kSamples);
    EXPECT_LT(std::abs(mean), 4.0 * sigma);
    // Second moment of a Haar SO(4) entry is 1/4.
    EXPECT_NEAR(sum_sq / kSamples, 0.25, 0.02);
}

TEST(SampleUnitary, DeterministicUnitaryAndSecondMoment) {
    EXPECT_EQ(sample_unitary(3, 5, 2).matrix(), sample_unitary(3, 5, 2).matrix());
    constexpr int kSamples = 10000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int s = 0; s < kSamples; s++) {
        const auto u = sample_unitary(3, 13, static_cast<std::uint64_t>(s)).matrix();
        EXPECT_LT((u.adjoint() * u - Eigen::MatrixXcd::Identity(3, 3)).norm(), 1e-10);
        const double x = std::norm(u(0, 1));
        sum += x;
        sum_sq += x * x;
    }
    const double mean = sum / kSamples;
    const double sigma = std::sqrt((sum_sq / kSamples - mean * mean) / kSamples);
    EXPECT_LT(std::abs(mean - 1.0 / 3.0), 4.0 * sigma);
}

TEST(OrthogonalMatrix, RejectsInvalidInput) {
    Eigen::MatrixXd reflect = Eigen::MatrixXd::Identity(2, 2);
    reflect(1, 1) = -1.0;
    EXPECT_THROW(OrthogonalMatrix{reflect}, DomainError);
    EXPECT_THROW(OrthogonalMatrix{Eigen::MatrixXd::Constant(2, 2, 0.5)}, DomainError);
    EXPECT_THROW(UnitaryMatrix{Eigen::MatrixXcd::Constant(2, 2, 1.0)}, DomainError);
}

TEST(QuadraticHamiltonian, Validation) {
    QuadraticHamiltonianSpec bad{QuadraticHamiltonianSpec::Kind::general, Eigen::MatrixXcd::Identity(2, 2)};
    EXPECT_THROW(bad.validate(), DomainError);
    QuadraticHamiltonianSpec pp{QuadraticHamiltonianSpec::Kind::pp, Eigen::MatrixXcd::Identity(2, 2)};
    EXPECT_NO_THROW(pp.validate());
    EXPECT_LT(frobenius_distance(pp.to_operator(), number_op(2)), 1e-14);
}

TEST(CompileGaussian, IdentityMapsToIdentity) {
    for (int n = 1; n <= 3; n++) {
        EXPECT_LT(max_abs(compile_gaussian(n, OrthogonalMatrix::identity(n)) -
                          DenseMatrix::Identity(1 << n, 1 << n)),
                  1e-14);
        EXPECT_LT(max_abs(compile_pp_gaussian(n, UnitaryMatrix::identity(n)) -
                          DenseMatrix::Identity(1 << n, 1 << n)),
                  1e-14);
    }
}

TEST(CompileGaussian, CovarianceAndParityOnFiftySamples) {
    const int n = 3;
    const DenseMatrix gamma = parity_op(n).to_dense();
    for (int s = 0; s < 50; s++) {
        const auto u = sample_orthogonal(n, 17, static_cast<std::uint64_t>(s));
        DenseMatrix r;
        try {
            r = compile_gaussian(n, u);
        } catch (const RetryError&) {
            continue;
        }
        EXPECT_LT(covariance_oracle(n, r, u.matrix()), 1e-9);
        EXPECT_LT(majorana_covariance_residual(r, u), 1e-9);
        EXPECT_LT(max_abs(r * gamma * r.adjoint() - gamma), 1e-10);
        EXPECT_LT(max_abs(r * r.adjoint() - DenseMatrix::Identity(8, 8)), 1e-10);
    }
}

TEST(CompileGaussian, BranchCutRaisesRetry) {
    Eigen::MatrixXd rot = Eigen::MatrixXd::Identity(4, 4);
    rot(0, 0) = -1.0;
    rot(1, 1) = -1.0;
    EXPECT_THROW(compile_gaussian(2, OrthogonalMatrix{rot}), RetryError);
}

TEST(CompilePpGaussian, SectorsAndCovariance) {
    const int n = 3;
    const DenseMatrix num = number_op(n).to_dense();
    for (int s = 0; s < 50; s++) {
        const auto u = sample_unitary(n, 23, static_cast<std::uint64_t>(s));
        const DenseMatrix r = compile_pp_gaussian(n, u);
        EXPECT_LT(pp_covariance_oracle(n, r, u.matrix()), 1e-9);
        EXPECT_LT(creation_covariance_residual(r, u), 1e-9);
        EXPECT_LT(max_abs(r * num - num * r), 1e-10);
        if (s < 20) {
            for (int a = 0; a < 8; a++) {
                for (int b = 0; b < 8; b++) {
                    if (std::popcount(unsigned(a)) != std::popcount(unsigned(b))) {
                        EXPECT_LT(std::abs(r(a, b)), 1e-12);
                    }
                }
            }
        }
    }
}

// With R c_mu R^dagger = sum_nu U_{mu nu} c_nu, products compose in reverse:
// R(U1) R(U2) = +-R(U2 U1).
TEST(CompileGaussian, HomomorphismUpToSign) {
    for (int n = 1; n <= 3; n++) {
        for (int s = 0; s < 20; s++) {
            const auto u1 = sample_orthogonal(n, 31, static_cast<std::uint64_t>(2 * s));
            const auto u2 = sample_orthogonal(n, 31, static_cast<std::uint64_t>(2 * s + 1));
            DenseMatrix a, b;
            try {
                a = compile_gaussian(n, u1) * compile_gaussian(n, u2);
                b = compile_gaussian(n, u2 * u1);
            } catch (const RetryError&) {
                continue;
            }
            EXPECT_NEAR(std::abs((a.adjoint() * b).trace()), std::pow(2.0, n), 1e-8);
        }
    }
}

TEST(CompilePpGaussian, HomomorphismUpToPhase) {
    for (int n = 1; n <= 3; n++) {
        for (int s = 0; s < 20; s++) {
            const auto u1 = sample_unitary(n, 37, static_cast<std::uint64_t>(2 * s));
            const auto u2 = sample_unitary(n, 37, static_cast<std::uint64_t>(2 * s + 1));
            const DenseMatrix a = compile_pp_gaussian(n, u1) * compile_pp_gaussian(n, u2);
            const DenseMatrix b = compile_pp_gaussian(n, UnitaryMatrix{u1.matrix() * u2.matrix()});
            EXPECT_NEAR(std::abs((a.adjoint() * b).trace()), std::pow(2.0, n), 1e-8);
        }
    }
}

TEST(SlaterState, Examples) {
    const std::vector<int> none;
    EXPECT_EQ(slater_state(2, none).amplitudes(), StateVector::basis(4, 0).amplitudes());
    const std::vector<int> occ{1, 2};
    EXPECT_EQ(slater_state(3, occ).amplitudes(), StateVector::basis(8, 0b110).amplitudes());
    const std::vector<int> occ3{3, 1};
    const auto psi = slater_state(4, occ3);
    EXPECT_LT((psi.apply(number_op(4)).amplitudes() - 2.0 * psi.amplitudes()).norm(), 1e-14);
    // a_1^dagger a_3^dagger |0> written through ladder operators.
    const auto built =
        StateVector::basis(16, 0).apply(ladder(4, 3, true)).apply(ladder(4, 1, true));
    EXPECT_LT((psi.amplitudes() - built.amplitudes()).norm(), 1e-15);
}

TEST(SlaterState, RejectsInvalid) {
    const std::vector<int> dup{1, 1};
    const std::vector<int> out{4};
    EXPECT_THROW(slater_state(3, dup), DomainError);
    EXPECT_THROW(slater_state(3, out), DomainError);
}

TEST(SampledUnitaries, Deterministic) {
    EXPECT_EQ(sample_gaussian_unitary(2, 9, 4), sample_gaussian_unitary(2, 9, 4));
    EXPECT_EQ(sample_pp_gaussian_unitary(2, 9, 4), sample_pp_gaussian_unitary(2, 9, 4));
}

}  // namespace
}  // namespace fermicomm
