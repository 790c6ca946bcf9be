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

#include <cmath>

#include "fermicomm/clifford.hpp"
#include "fermicomm/errors.hpp"
#include "fermicomm/gaussian_group.hpp"
#include "fermicomm/gt_basis.hpp"
#include "fermicomm/invariants.hpp"
#include "fermicomm/multicopy.hpp"
#include "fermicomm/state_spec.hpp"
#include "test_util.hpp"

namespace fermicomm {
namespace {

double binom(int m, int k) {
    return (k < 0 || k > m) ? 0.0 : to_double(binomial(m, k));
}

StateVector random_fixed(int n, int r, int seed) {
    return parse_state_spec("random:seed=" + std::to_string(seed) + ",r=" + std::to_string(r), n);
}

StateVector random_slater(int n, int r, int seed) {
    return parse_state_spec("pp-gaussian:seed=" + std::to_string(seed) + ",r=" + std::to_string(r), n);
}

StateVector rotate(const DenseMatrix& r, const StateVector& psi) {
    return StateVector(r * psi.amplitudes());
}

// -- p_{k,i} -------------------------------------------------------------------

TEST(PkiSpectrum, GaussianStatesGiveBinomialWeights) {
    for (int n = 1; n <= 3; n++) {
        for (int s = 0; s < 10; s++) {
            const auto psi = parse_state_spec("gaussian:seed=" + std::to_string(100 + s), n);
            const auto report = p_ki_spectrum(psi, n);
            for (int k = 0; k <= n; k++) {
                EXPECT_NEAR(report.at({2 * k, 0}), binom(n, k) / std::pow(2.0, n), 1e-9);
            }
            double total = 0.0;
            for (int k = 0; k <= n; k++) {
                total += report.at({2 * k, 0});
            }
            EXPECT_NEAR(total, 1.0, 1e-9);
            EXPECT_LT(report.residuals.at("sum_p0"), 1e-9);
        }
    }
}

TEST(PkiSpectrum, IdentityTermAndNormalization) {
    for (int n = 1; n <= 4; n++) {
        const auto report = p_ki_spectrum(random_fixed(n, n / 2, 3), n);
        EXPECT_NEAR(report.at({0, 0}), 1.0 / std::pow(2.0, n), 1e-12);
        EXPECT_LT(report.residuals.at("sum_p0"), 1e-9);
    }
    EXPECT_THROW(p_ki_spectrum(StateVector(DenseVector::Constant(4, 1.0)), 2), DomainError);
}

TEST(PkiSpectrum, MatchesDirectTwoCopyOverlap) {
    for (int n = 1; n <= 3; n++) {
        const auto psi = parse_state_spec("random:seed=9", n);
        const auto psi2 = psi.tensor_power(2);
        const auto report = p_ki_spectrum(psi, n);
        const double d = std::pow(2.0, n);
        for (int k = 0; k <= 2 * n; k++) {
            for (int i = 0; i <= 1; i++) {
                const double sign = ((k / 2) % 2) ? -1.0 : 1.0;
                const Complex direct = sign / d * psi2.expectation(qk_operator(n, k, i));
                EXPECT_NEAR(report.at({k, i}), direct.real(), 1e-10) << k << " " << i;
            }
        }
    }
}

TEST(PkiSpectrum, InvariantUnderGaussianUnitaries) {
    for (int n = 1; n <= 3; n++) {
        const auto psi = parse_state_spec("random:seed=21", n);
        const auto before = p_ki_spectrum(psi, n);
        for (int s = 0; s < 10; s++) {
            const auto after = p_ki_spectrum(rotate(sample_gaussian_unitary(n, 5, std::uint64_t(s)), psi), n);
            for (std::size_t e = 0; e < before.entries.size(); e++) {
                EXPECT_NEAR(before.entries[e].value, after.entries[e].value, 1e-9);
            }
        }
    }
}

// -- spin sectors ----------------------------------------------------------------

TEST(SpinSectors, SlaterVacuumAndRejection) {
    for (int n = 1; n <= 4; n++) {
        for (int r = 0; r <= n; r++) {
            const auto report = spin_sector_probs(random_slater(n, r, 7 * n + r), n, r);
            EXPECT_NEAR(report.at({0}), 1.0, 1e-9);
            for (const auto& e : report.entries) {
                if (e.label[0] > 0) {
                    EXPECT_NEAR(e.value, 0.0, 1e-9);
                }
            }
        }
    }
    const auto vac = spin_sector_probs(parse_state_spec("vacuum", 3), 3, 0);
    ASSERT_EQ(vac.entries.size(), 1u);
    EXPECT_NEAR(vac.entries[0].value, 1.0, 1e-12);
    EXPECT_THROW(spin_sector_probs(parse_state_spec("random:seed=1", 3), 3, 1), DomainError);
}

TEST(SpinSectors, PurityReconstructionAndSum) {
    for (int n = 2; n <= 4; n++) {
        for (int r = 1; r < n; r++) {
            for (int s = 0; s < 5; s++) {
                const auto psi = random_fixed(n, r, 100 * n + 10 * r + s);
                const auto report = spin_sector_probs(psi, n, r);
                EXPECT_NEAR(report.sum(), 1.0, 1e-9);
                double reconstructed = 0.0;
                for (const auto& e : report.entries) {
                    const int j = e.label[0];
                    reconstructed += (r - j * (j + 1)) * e.value;
                }
                const DenseMatrix rho = rdm(psi, n, 1);
                EXPECT_NEAR(reconstructed, (rho * rho).trace().real(), 1e-9);
            }
        }
    }
}

TEST(SpinSectors, OddSectorsVanishOnProductCopies) {
    for (int s = 0; s < 5; s++) {
        const auto report = spin_sector_probs(random_fixed(4, 2, 40 + s), 4, 2);
        EXPECT_NEAR(report.at({1}), 0.0, 1e-9);
    }
}

TEST(SpinSectors, InvariantUnderPpUnitaries) {
    const auto psi = random_fixed(4, 2, 77);
    const auto before = spin_sector_probs(psi, 4, 2);
    for (int s = 0; s < 10; s++) {
        const auto after = spin_sector_probs(rotate(sample_pp_gaussian_unitary(4, 8, std::uint64_t(s)), psi), 4, 2);
        for (std::size_t e = 0; e < before.entries.size(); e++) {
            EXPECT_NEAR(before.entries[e].value, after.entries[e].value, 1e-9);
        }
    }
}

// -- RDMs -------------------------------------------------------------------------

TEST(Rdm, SlaterAndZeroBody) {
    const std::vector<int> occ{1, 3};
    const auto psi = slater_state(4, occ);
    const DenseMatrix rho = rdm(psi, 4, 1);
    DenseMatrix expected = DenseMatrix::Zero(4, 4);
    expected(0, 0) = 1.0;
    expected(2, 2) = 1.0;
    EXPECT_LT(testing::max_abs(rho - expected), 1e-14);
    EXPECT_NEAR((rho * rho).trace().real(), 2.0, 1e-14);
    const DenseMatrix rho0 = rdm(psi, 4, 0);
    ASSERT_EQ(rho0.rows(), 1);
    EXPECT_NEAR(std::abs(rho0(0, 0) - 1.0), 0.0, 1e-14);
    EXPECT_THROW(rdm(psi, 4, 5), DomainError);
}

TEST(Rdm, HermitianPsdWithBinomialTrace) {
    for (int n = 2; n <= 4; n++) {
        for (int r = 0; r <= n; r++) {
            const auto psi = random_fixed(n, r, 300 + n * 10 + r);
            for (int k = 0; k <= n; k++) {
                const DenseMatrix rho = rdm(psi, n, k);
                EXPECT_EQ(rho.rows(), static_cast<Eigen::Index>(binom(n, k)));
                EXPECT_LT(testing::max_abs(rho - rho.adjoint()), 1e-12);
                Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(rho);
                EXPECT_GT(solver.eigenvalues().minCoeff(), -1e-12);
                EXPECT_NEAR(rho.trace().real(), binom(r, k), 1e-10);
            }
        }
    }
}

TEST(Rdm, PurityEqualsOmegaOverlap) {
    for (int n = 1; n <= 4; n++) {
        for (int k = 1; k <= std::min(2, n); k++) {
            const auto omega = omega_k(n, k);
            for (int s = 0; s < 5; s++) {
                const auto psi = random_fixed(n, (n + 1) / 2, 500 + 10 * n + s);
                const DenseMatrix rho = rdm(psi, n, k);
                EXPECT_NEAR((rho * rho).trace().real(), psi.tensor_power(2).expectation(omega).real(), 1e-9);
            }
        }
    }
}

TEST(Rdm, QuadraticEntropy) {
    const std::vector<int> occ{1, 2};
    EXPECT_NEAR(quadratic_entropy(slater_state(4, occ), 4, 1), 0.5, 1e-12);
    const auto psi = random_fixed(4, 2, 9);
    const DenseMatrix rho = rdm(psi, 4, 2);
    EXPECT_NEAR(quadratic_entropy(psi, 4, 2), 1.0 - (rho * rho).trace().real(), 1e-12);
}

// -- Omega_K ------------------------------------------------------------------------

TEST(OmegaK, OneBodyFormAndIdentity) {
    for (int n = 1; n <= 3; n++) {
        const CopySpace cs(n, 2);
        const auto jp = omega(cs, 1, 2);
        const auto jm = omega(cs, 2, 1);
        EXPECT_LT(frobenius_distance(omega_k(n, 1), omega(cs, 1, 1) - jp * jm), 1e-10);
        EXPECT_EQ(omega_k(n, 0), ComplexSparseOperator::identity(cs.dim()));
    }
}

TEST(OmegaK, CommutesWithPpUnitaries) {
    for (int n = 1; n <= 3; n++) {
        for (int k = 0; k <= n; k++) {
            const auto op = omega_k(n, k);
            for (int s = 0; s < 20; s++) {
                EXPECT_LT(commutation_residual(op, sample_pp_gaussian_unitary(n, 12, std::uint64_t(s)), 2), 1e-9);
            }
        }
    }
}

// -- Plücker rank -------------------------------------------------------------------

TEST(Plucker, SlaterAndVacuum) {
    EXPECT_EQ(plucker_rank(parse_state_spec("vacuum", 3), 3), 1);
    for (int s = 0; s < 10; s++) {
        EXPECT_EQ(plucker_rank(random_slater(4, 2, s), 4), 1);
    }
}

TEST(Plucker, PairSuperposition) {
    DenseVector v = DenseVector::Zero(16);
    v[0b1100] = 1.0 / std::sqrt(2.0);
    v[0b0011] = 1.0 / std::sqrt(2.0);
    const StateVector psi(v);
    // Direct powers of Omega~_{12} on psi (x) psi.
    const auto j = omega(CopySpace(4, 2), 1, 2);
    StateVector x = psi.tensor_power(2);
    std::vector<double> norms;
    for (int k = 1; k <= 3; k++) {
        x = x.apply(j);
        norms.push_back(x.norm());
    }
    EXPECT_GT(norms[0], 0.5);
    EXPECT_GT(norms[1], 0.5);
    EXPECT_LT(norms[2], 1e-12);
    EXPECT_EQ(plucker_rank(psi, 4), 3);
    const auto p = spin_sector_probs(psi, 4, 2);
    EXPECT_NEAR(p.at({0}), 5.0 / 6.0, 1e-12);
    EXPECT_NEAR(p.at({1}), 0.0, 1e-12);
    EXPECT_NEAR(p.at({2}), 1.0 / 6.0, 1e-12);
}

int support_rank(const InvariantReport& p) {
    int top = 0;
    for (const auto& e : p.entries) {
        if (e.value > 1e-9) {
            top = std::max(top, e.label[0]);
        }
    }
    return top + 1;
}

TEST(Plucker, SupportEquivalenceAndWitnessSoundness) {
    for (int s = 0; s < 50; s++) {
        const int n = 2 + s % 3;
        const int r = 1 + s % (n - 1);
        for (const auto& psi : {random_slater(n, r, 1000 + s), random_fixed(n, r, 2000 + s)}) {
            const int rank = plucker_rank(psi, n);
            EXPECT_EQ(rank, support_rank(spin_sector_probs(psi, n, r)));
            const double witness = free_state_annihilation(psi, n, 2, GroupKind::pp).max_residual;
            EXPECT_EQ(witness < 1e-9, rank == 1) << "witness " << witness << " rank " << rank;
        }
    }
}

// -- annihilation witnesses --------------------------------------------------------

TEST(Annihilation, FreeStatesAndWState) {
    const std::vector<int> occ{2};
    EXPECT_LT(free_state_annihilation(slater_state(2, occ), 2, 3, GroupKind::pp).max_residual, 1e-9);
    for (int s = 0; s < 10; s++) {
        const auto psi = parse_state_spec("gaussian:seed=" + std::to_string(s), 2);
        EXPECT_LT(free_state_annihilation(psi, 2, 3, GroupKind::gauss).max_residual, 1e-8);
    }
    // A one-particle W state is a Slater determinant, hence Gaussian.
    DenseVector w = DenseVector::Zero(8);
    w[0b100] = w[0b010] = w[0b001] = 1.0 / std::sqrt(3.0);
    EXPECT_LT(free_state_annihilation(StateVector(w), 3, 2, GroupKind::gauss).max_residual, 1e-12);
    EXPECT_LT(free_state_annihilation(StateVector(w), 3, 2, GroupKind::pp).max_residual, 1e-12);
    // Generic and pair-superposition states are witnessed.
    EXPECT_GT(free_state_annihilation(parse_state_spec("random:seed=4", 3), 3, 2, GroupKind::gauss).max_residual,
              0.1);
    DenseVector pair = DenseVector::Zero(16);
    pair[0b1100] = pair[0b0011] = 1.0 / std::sqrt(2.0);
    EXPECT_GT(free_state_annihilation(StateVector(pair), 4, 2, GroupKind::pp).max_residual, 0.1);
    EXPECT_THROW(free_state_annihilation(StateVector(w), 3, 12, GroupKind::gauss), ResourceError);
}

// -- d_{r,j} -------------------------------------------------------------------------

TEST(Drj, ExamplesAndSymmetry) {
    EXPECT_EQ(d_rj(4, 2, 0), ExactInteger(20));
    EXPECT_EQ(d_rj(5, 0, 0), ExactInteger(1));
    for (int n = 1; n <= 10; n++) {
        for (int r = 0; r <= n; r++) {
            EXPECT_EQ(d_rj(n, r, 0) * (r + 1), binomial(n, r) * binomial(n + 1, r));
            for (int j = 0; j <= std::min(r, n - r); j++) {
                EXPECT_EQ(d_rj(n, r, j), d_rj(n, n - r, j));
            }
        }
    }
    EXPECT_THROW(d_rj(4, 1, 2), DomainError);
}

TEST(Drj, MatchesMatrixUnitRanks) {
    // Rank of X^{(r+j, r-j)}_{m=r, m=r} in the PP t = 2 basis.
    const int n = 4;
    const auto basis = pp_t2_basis(n);
    for (int r = 0; r <= n; r++) {
        ExactInteger total = 0;
        for (int j = 0; j <= std::min(r, n - r); j++) {
            bool found = false;
            for (const auto& e : basis) {
                if (e.lambda == Weight{r + j, r - j} && e.row == e.col && e.row.rows.back()[0] == r) {
                    EXPECT_EQ(ExactInteger(std::lround(e.op.trace().real())), d_rj(n, r, j)) << r << " " << j;
                    found = true;
                }
            }
            EXPECT_TRUE(found);
            total += d_rj(n, r, j);
        }
        // Rank of the (N_1, N_2) = (r, r) sector, from the single-copy projectors.
        const auto sector = tensor(pp_number_projector(n, r), pp_number_projector(n, r));
        EXPECT_EQ(total, ExactInteger(std::lround(sector.trace().real())));
    }
}

TEST(Drj, GaussianProfileAtSixtyModes) {
    const int n = 60;
    const int half = n / 2;
    const double base = log_of(d_rj(n, half, 0));
    const int width = static_cast<int>(std::floor(std::sqrt(double(n))));
    for (int r = half - width; r <= half + width; r++) {
        if (r == half) {
            continue;
        }
        const double exact = log_of(d_rj(n, r, 0)) - base;
        const double model = -4.0 / n * (r - half) * (r - half);
        EXPECT_NEAR(exact / model, 1.0, 0.10) << "r=" << r;
    }
}

}  // namespace
}  // namespace fermicomm
