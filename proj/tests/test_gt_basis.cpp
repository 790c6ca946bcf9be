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

#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>
#include <map>
#include <optional>

#include "fermicomm/clifford.hpp"
#include "fermicomm/errors.hpp"
#include "fermicomm/gaussian_group.hpp"
#include "fermicomm/gt_basis.hpp"
#include "test_util.hpp"

namespace fermicomm {
namespace {

using testing::max_abs;

int binom(int m, int k) {
    if (k < 0 || k > m) {
        return 0;
    }
    long long out = 1;
    for (int i = 1; i <= k; i++) {
        out = out * (m - k + i) / i;
    }
    return static_cast<int>(out);
}

int rank_of(const ComplexSparseOperator& p) {
    return static_cast<int>(std::lround(p.trace().real()));
}

// -- enumeration ---------------------------------------------------------------

TEST(EnumerateWeights, Examples) {
    const std::vector<Weight> pp22 = {{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}};
    EXPECT_EQ(enumerate_weights(GroupKind::pp, 2, 2), pp22);
    for (int n = 0; n <= 4; n++) {
        const auto w = enumerate_weights(GroupKind::pp, 1, n);
        ASSERT_EQ(w.size(), static_cast<std::size_t>(n + 1));
        for (int r = 0; r <= n; r++) {
            EXPECT_EQ(w[static_cast<std::size_t>(r)], Weight{r});
        }
    }
    for (int n = 1; n <= 4; n++) {
        const auto w = enumerate_weights(GroupKind::gauss, 3, n);
        ASSERT_EQ(w.size(), static_cast<std::size_t>(n + 1));
        for (int l = 0; l <= n; l++) {
            EXPECT_EQ(w[static_cast<std::size_t>(l)], Weight{l});
        }
    }
}

TEST(EnumerateWeights, SortedAndDuplicateFree) {
    for (auto group : {GroupKind::pp, GroupKind::gauss}) {
        for (int t = 1; t <= 5; t++) {
            for (int n = 1; n <= 3; n++) {
                const auto w = enumerate_weights(group, t, n);
                for (std::size_t i = 1; i < w.size(); i++) {
                    EXPECT_LT(w[i - 1], w[i]);
                }
            }
        }
    }
    // D_2 weights carry a signed last entry.
    const std::vector<Weight> so4 = {{0, 0}, {1, -1}, {1, 0}, {1, 1}};
    EXPECT_EQ(enumerate_weights(GroupKind::gauss, 4, 1), so4);
}

TEST(GtPatterns, Examples) {
    EXPECT_EQ(gt_patterns({2, 0}, GroupKind::pp, 2).size(), 3u);
    EXPECT_EQ(gt_patterns({1, 1}, GroupKind::pp, 2).size(), 1u);
    const auto so3 = gt_patterns({2}, GroupKind::gauss, 3);
    ASSERT_EQ(so3.size(), 5u);
    std::vector<int> ms;
    for (const auto& p : so3) {
        ms.push_back(p.rows.back()[0]);
    }
    std::sort(ms.begin(), ms.end());
    EXPECT_EQ(ms, (std::vector<int>{-2, -1, 0, 1, 2}));
}

TEST(GtPatterns, CountsMatchWeylDimensions) {
    for (int t = 1; t <= 4; t++) {
        for (const auto& w : enumerate_weights(GroupKind::pp, t, 3)) {
            EXPECT_EQ(ExactInteger(static_cast<unsigned>(gt_patterns(w, GroupKind::pp, t).size())),
                      weyl_ut_irrep_dim(Partition(w), t));
        }
    }
    for (const auto& w : enumerate_weights(GroupKind::gauss, 4, 3)) {
        const int jp = w[0] + w[1];
        const int jm = w[0] - w[1];
        EXPECT_EQ(gt_patterns(w, GroupKind::gauss, 4).size(), static_cast<std::size_t>((jp + 1) * (jm + 1)));
    }
}

TEST(GtPatterns, UnitaryInterlacing) {
    for (const auto& w : enumerate_weights(GroupKind::pp, 4, 2)) {
        for (const auto& p : gt_patterns(w, GroupKind::pp, 4)) {
            EXPECT_EQ(p.rows.front(), w);
            for (std::size_t level = 1; level < p.rows.size(); level++) {
                const auto& up = p.rows[level - 1];
                const auto& down = p.rows[level];
                ASSERT_EQ(down.size() + 1, up.size());
                for (std::size_t i = 0; i < down.size(); i++) {
                    EXPECT_GE(up[i], down[i]);
                    EXPECT_GE(down[i], up[i + 1]);
                }
            }
        }
    }
}

TEST(GtPatterns, RejectsInadmissible) {
    EXPECT_THROW(gt_patterns({0, 1}, GroupKind::pp, 2), DomainError);
    EXPECT_THROW(gt_patterns({1, 0, 0}, GroupKind::pp, 2), DomainError);
    EXPECT_THROW(gt_patterns({-1}, GroupKind::gauss, 3), DomainError);
}

TEST(GtPatterns, SpinBookkeeping) {
    // Group PP t = 2 weights by j = (l1 - l2)/2: each j appears n - 2j + 1 times.
    for (int n = 0; n <= 6; n++) {
        std::map<int, int> multiplicity;
        for (const auto& w : enumerate_weights(GroupKind::pp, 2, n)) {
            multiplicity[w[0] - w[1]]++;
            EXPECT_EQ(gt_patterns(w, GroupKind::pp, 2).size(), static_cast<std::size_t>(w[0] - w[1] + 1));
        }
        int total = 0;
        for (auto [two_j, mult] : multiplicity) {
            EXPECT_EQ(mult, n - two_j + 1);
            total += mult * (two_j + 1) * (two_j + 1);
        }
        EXPECT_EQ(total, (n + 1) * (n + 2) * (n + 2) * (n + 3) / 12);
    }
}

// -- PP, t = 1 -------------------------------------------------------------------

TEST(PpNumberProjector, MatchesIndicatorAndRanks) {
    EXPECT_EQ(pp_number_projector(1, 0).to_dense(), (DenseMatrix(2, 2) << 1, 0, 0, 0).finished());
    for (int n = 1; n <= 5; n++) {
        ComplexSparseOperator total(std::size_t{1} << n);
        for (int r = 0; r <= n; r++) {
            const auto p = pp_number_projector(n, r);
            DenseMatrix indicator = DenseMatrix::Zero(1 << n, 1 << n);
            for (int b = 0; b < (1 << n); b++) {
                indicator(b, b) = std::popcount(unsigned(b)) == r ? 1.0 : 0.0;
            }
            EXPECT_LT(max_abs(p.to_dense() - indicator), 1e-12);
            EXPECT_EQ(rank_of(p), binom(n, r));
            total += p;
        }
        EXPECT_LT(frobenius_distance(total, ComplexSparseOperator::identity(total.dim())), 1e-12);
    }
    EXPECT_THROW(pp_number_projector(2, 3), DomainError);
}

TEST(Krawtchouk, Identities) {
    for (int big_n = 0; big_n <= 8; big_n++) {
        for (int x = 0; x <= big_n; x++) {
            EXPECT_EQ(krawtchouk(0, x, big_n), ExactInteger(1));
        }
        for (int a = 0; a <= big_n; a++) {
            EXPECT_EQ(krawtchouk(a, 0, big_n), ExactInteger(binom(big_n, a)));
        }
    }
    for (int n = 1; n <= 6; n++) {
        for (int k = 0; k <= n; k++) {
            EXPECT_EQ(krawtchouk(2 * k, n, 2 * n), ExactInteger((k % 2 ? -1 : 1) * binom(n, k)));
        }
    }
    EXPECT_THROW(krawtchouk(3, 1, 2), DomainError);
    EXPECT_THROW(krawtchouk(1, 3, 2), DomainError);
}

TEST(PpSymmetricBasis, ExamplesAndKrawtchoukReconstruction) {
    EXPECT_EQ(pp_symmetric_basis(3, 0), ComplexSparseOperator::identity(8));
    DenseMatrix e1 = DenseMatrix::Zero(4, 4);
    e1.diagonal() << 2, 0, 0, -2;
    EXPECT_LT(max_abs(pp_symmetric_basis(2, 1).to_dense() - e1), 1e-15);
    // Z = -1 on an occupied mode, so a weight-r sector has r negative signs:
    // E_a = sum_r K_a(r; n) P_r = (-1)^a sum_r K_a(n - r; n) P_r.
    for (int n = 1; n <= 5; n++) {
        for (int a = 0; a <= n; a++) {
            ComplexSparseOperator rebuilt(std::size_t{1} << n);
            ComplexSparseOperator reflected(std::size_t{1} << n);
            for (int r = 0; r <= n; r++) {
                rebuilt += Complex(to_double(krawtchouk(a, r, n))) * pp_number_projector(n, r);
                reflected += Complex(to_double(krawtchouk(a, n - r, n))) * pp_number_projector(n, r);
            }
            const auto e = pp_symmetric_basis(n, a);
            EXPECT_LT(max_abs(e - rebuilt), 1e-12) << n << " " << a;
            EXPECT_LT(max_abs(e - Complex(a % 2 ? -1.0 : 1.0) * reflected), 1e-12) << n << " " << a;
            if (a % 2 == 1) {
                // The unsigned reflected form differs for odd a.
                EXPECT_GT(max_abs(e - reflected), 1.0) << n << " " << a;
            }
        }
    }
    EXPECT_THROW(pp_symmetric_basis(2, 3), DomainError);
}

TEST(PpT1Basis, CountAndUnits) {
    for (int n = 1; n <= 4; n++) {
        const auto basis = pp_t1_basis(n);
        EXPECT_EQ(ExactInteger(static_cast<unsigned>(basis.size())), dim_pp_commutant(1, n));
        const auto report = verify_matrix_units(basis);
        EXPECT_LT(report.product_residual, 1e-10);
        EXPECT_LT(report.cross_block_residual, 1e-10);
    }
}

// -- PP, t = 2 -------------------------------------------------------------------

const CommutantBasisElement* find_element(const std::vector<CommutantBasisElement>& basis, const Weight& lambda,
                                          int m_row, int m_col) {
    for (const auto& e : basis) {
        if (e.lambda == lambda && e.row.rows.back()[0] == m_row && e.col.rows.back()[0] == m_col) {
            return &e;
        }
    }
    return nullptr;
}

struct HandBuilt {
    explicit HandBuilt(int n) : cs(n, 2), vacuum(ComplexSparseOperator::zero(cs.dim())) {
        DenseVector v = DenseVector::Zero(static_cast<Eigen::Index>(cs.dim()));
        v[0] = 1.0;
        vacuum = ComplexSparseOperator::outer(v, v);
    }
    ComplexSparseOperator up(int p, int j) const { return dressed_ladder(cs, p, j, true); }

    CopySpace cs;
    ComplexSparseOperator vacuum;
};

// Hand-built (0,0), (1,0), (1,1), (2,0) blocks, written directly with
// dressed ladders. Only phase-free data is compared: diagonal units exactly,
// off-diagonal units through |<X_hand, X_built>| = ||X_hand||^2.
TEST(PpT2Basis, MatchesHandBuiltLowBlocks) {
    for (int n = 1; n <= 3; n++) {
        const auto basis = pp_t2_basis(n);
        const HandBuilt h(n);
        const std::size_t dim = h.cs.dim();

        const auto* vac = find_element(basis, {0, 0}, 0, 0);
        ASSERT_NE(vac, nullptr);
        EXPECT_LT(frobenius_distance(vac->op, h.vacuum), 1e-9);

        // (1,0): copy-1 line m = 1, copy-2 line m = 0.
        auto one = [&](int j, int k) {
            ComplexSparseOperator out(dim);
            for (int p = 1; p <= n; p++) {
                out += h.up(p, j) * h.vacuum * h.up(p, k).adjoint();
            }
            return out;
        };
        EXPECT_LT(frobenius_distance(find_element(basis, {1, 0}, 1, 1)->op, one(1, 1)), 1e-9);
        EXPECT_LT(frobenius_distance(find_element(basis, {1, 0}, 0, 0)->op, one(2, 2)), 1e-9);
        EXPECT_NEAR(std::abs(hs_inner(one(1, 2), find_element(basis, {1, 0}, 1, 0)->op)), n, 1e-9);
        EXPECT_NEAR(std::abs(hs_inner(one(2, 1), find_element(basis, {1, 0}, 0, 1)->op)), n, 1e-9);

        // (1,1): symmetric one-particle-per-copy states.
        ComplexSparseOperator sym(dim);
        for (int p = 1; p <= n; p++) {
            for (int q = p; q <= n; q++) {
                ComplexSparseOperator create = h.up(p, 1) * h.up(q, 2);
                if (p < q) {
                    create = Complex(1.0 / std::sqrt(2.0)) * (create + h.up(q, 1) * h.up(p, 2));
                }
                sym += create * h.vacuum * create.adjoint();
            }
        }
        EXPECT_LT(frobenius_distance(find_element(basis, {1, 1}, 1, 1)->op, sym), 1e-9);

        if (n < 2) {
            EXPECT_EQ(find_element(basis, {2, 0}, 2, 2), nullptr);
            continue;
        }
        // (2,0): lines m = 2, 1, 0.
        std::map<int, std::vector<ComplexSparseOperator>> line;
        for (int p = 1; p <= n; p++) {
            for (int q = p + 1; q <= n; q++) {
                line[2].push_back(h.up(p, 1) * h.up(q, 1));
                line[1].push_back(Complex(1.0 / std::sqrt(2.0)) * (h.up(p, 1) * h.up(q, 2) - h.up(q, 1) * h.up(p, 2)));
                line[0].push_back(h.up(p, 2) * h.up(q, 2));
            }
        }
        const int pairs = n * (n - 1) / 2;
        for (int a = 0; a <= 2; a++) {
            for (int b = 0; b <= 2; b++) {
                ComplexSparseOperator hand(dim);
                for (std::size_t s = 0; s < line[a].size(); s++) {
                    hand += line[a][s] * h.vacuum * line[b][s].adjoint();
                }
                const auto* built = find_element(basis, {2, 0}, a, b);
                ASSERT_NE(built, nullptr);
                if (a == b) {
                    EXPECT_LT(frobenius_distance(built->op, hand), 1e-9) << "m=" << a;
                } else {
                    EXPECT_NEAR(std::abs(hs_inner(hand, built->op)), pairs, 1e-9) << a << "," << b;
                }
            }
        }
    }
}

TEST(PpT2Basis, OperatorsFormSpinAlgebra) {
    const auto ops = pp_t2_operators(2);
    EXPECT_LT(frobenius_distance(commutator(ops.j_plus, ops.j_minus), Complex(2.0) * ops.j_z), 1e-12);
    EXPECT_LT(frobenius_distance(commutator(ops.j_z, ops.j_plus), ops.j_plus), 1e-12);
    EXPECT_LT(commutator(ops.j_squared, ops.j_plus).frobenius_norm(), 1e-12);
    EXPECT_LT(commutator(ops.number, ops.j_squared).frobenius_norm(), 1e-12);
}

// -- Gaussian, t = 1, 2 ----------------------------------------------------------

TEST(GaussT2Projectors, SingleModeRanks) {
    const auto p = gauss_t2_projectors(1);
    ASSERT_EQ(p.size(), 3u);
    EXPECT_EQ(rank_of(p[0]), 1);
    EXPECT_EQ(rank_of(p[1]), 2);
    EXPECT_EQ(rank_of(p[2]), 1);
    const DenseMatrix m = (Complex(0.0, -1.0) * qtilde(CopySpace(1, 2), 1, 2)).to_dense();
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(m);
    const Eigen::Vector4d expected(-1, 0, 0, 1);
    EXPECT_LT((solver.eigenvalues() - expected).norm(), 1e-12);
}

TEST(GaussT2Projectors, ResolutionOfIdentityAndGaussianStates) {
    for (int n = 1; n <= 4; n++) {
        const auto p = gauss_t2_projectors(n);
        ComplexSparseOperator total(p[0].dim());
        for (const auto& x : p) {
            total += x;
        }
        EXPECT_LT(frobenius_distance(total, ComplexSparseOperator::identity(total.dim())), 1e-10);
        if (n > 3) {
            continue;
        }
        for (int s = 0; s < 20; s++) {
            const DenseMatrix r = sample_gaussian_unitary(n, 61, static_cast<std::uint64_t>(s));
            const StateVector psi2 = StateVector(r.col(0)).tensor_power(2);
            EXPECT_LT((psi2.apply(p[static_cast<std::size_t>(n)]).amplitudes() - psi2.amplitudes()).norm(), 1e-9);
        }
    }
}

TEST(QkOperator, IdentityCommutationAndGaussianOverlaps) {
    for (int n = 1; n <= 3; n++) {
        EXPECT_EQ(qk_operator(n, 0, 0), ComplexSparseOperator::identity(std::size_t{1} << (2 * n)));
        EXPECT_EQ(qk_operator(n, 0, 1), tensor(parity_op(n), ComplexSparseOperator::identity(std::size_t{1} << n)));
        // The 2(2n+1) operators Q^i_k are linearly independent.
        std::vector<CommutantBasisElement> all;
        for (int k = 0; k <= 2 * n; k++) {
            for (int flavor = 0; flavor <= 1; flavor++) {
                all.push_back({Weight{k}, {}, {}, ParityFlag::plain, qk_operator(n, k, flavor)});
            }
        }
        EXPECT_EQ(gram_rank(all), 2 * (2 * n + 1));
        std::vector<DenseMatrix> samples;
        for (int s = 0; s < 20; s++) {
            samples.push_back(sample_gaussian_unitary(n, 71, static_cast<std::uint64_t>(s)));
        }
        for (int k = 0; k <= 2 * n; k++) {
            for (int flavor = 0; flavor <= 1; flavor++) {
                const auto q = qk_operator(n, k, flavor);
                for (const auto& r : samples) {
                    EXPECT_LT(commutation_residual(q, r, 2), 1e-9);
                }
            }
        }
        for (int s = 0; s < 10; s++) {
            const StateVector psi2 = StateVector(samples[static_cast<std::size_t>(s)].col(0)).tensor_power(2);
            for (int k = 0; k <= n; k++) {
                const Complex v = psi2.expectation(qk_operator(n, 2 * k, 0));
                EXPECT_NEAR(v.real(), (k % 2 ? -1 : 1) * binom(n, k), 1e-9);
                EXPECT_NEAR(v.imag(), 0.0, 1e-9);
            }
        }
    }
    EXPECT_THROW(qk_operator(1, 3, 0), DomainError);
}

TEST(GaussT2ChangeOfBasis, SingleModeConcrete) {
    // K_1(1 - m; 2) = 2m, so E_1 = 2 P_1 - 2 P_{-1}.
    const auto p = gauss_t2_projectors(1);
    const auto e1 = gauss_t2_e_operator(1, 1);
    EXPECT_LT(max_abs(e1 - (Complex(2.0) * p[2] - Complex(2.0) * p[0])), 1e-12);
    EXPECT_LT(max_abs(e1 - Complex(0.0, 1.0) * qk_operator(1, 1, 1)), 1e-15);
    // Inversion at n = 1 (d = 2): P_0 = (1/4) C(2,1) sum_k K_k(1;2) E_k / C(2,k).
    ComplexSparseOperator p0(p[1].dim());
    for (int k = 0; k <= 2; k++) {
        p0 += Complex(2.0 / 4.0 * to_double(krawtchouk(k, 1, 2)) / binom(2, k)) * gauss_t2_e_operator(1, k);
    }
    EXPECT_LT(max_abs(p0 - p[1]), 1e-12);
}

TEST(GaussT2ChangeOfBasis, ForwardAndInverseUpToThreeModes) {
    for (int n = 1; n <= 3; n++) {
        const auto report = gauss_t2_change_of_basis(n);
        EXPECT_LT(report.max_forward_residual, 1e-10);
        EXPECT_LT(report.max_inverse_residual, 1e-9);
    }
}

TEST(GaussT1T2Basis, CountsAndUnits) {
    for (int n = 1; n <= 4; n++) {
        EXPECT_EQ(ExactInteger(static_cast<unsigned>(gauss_t1_basis(n).size())), dim_gauss_commutant(1, n));
        const auto basis = gauss_t2_basis(n);
        EXPECT_EQ(ExactInteger(static_cast<unsigned>(basis.size())), dim_gauss_commutant(2, n));
        const auto report = verify_matrix_units(basis);
        EXPECT_LT(report.product_residual, 1e-9);
        EXPECT_LT(report.cross_block_residual, 1e-9);
    }
}

// -- Gaussian, t = 3, 4 ----------------------------------------------------------

TEST(GaussT3, SingleModeCasimirSpectrum) {
    const auto ops = gauss_t3_operators(1);
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(ops.j_squared.to_dense(), Eigen::EigenvaluesOnly);
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); i++) {
        const double v = solver.eigenvalues()[i];
        EXPECT_TRUE(std::abs(v) < 1e-10 || std::abs(v - 2.0) < 1e-10) << v;
    }
    EXPECT_LT(frobenius_distance(commutator(ops.j_z, ops.j_plus), ops.j_plus), 1e-12);
    EXPECT_LT(frobenius_distance(commutator(ops.j_plus, ops.j_minus), Complex(2.0) * ops.j_z), 1e-12);
}

TEST(GaussT3, CountsMatchClosedForm) {
    EXPECT_EQ(gauss_t3_basis(1).size(), 20u);
    EXPECT_EQ(gauss_t3_basis(2).size(), 70u);
}

TEST(GaussT3, EmergentFermions) {
    for (int n = 1; n <= 2; n++) {
        const auto report = gauss_t3_emergent_fermions(n);
        EXPECT_LT(report.anticommutation_residual, 1e-10);
        EXPECT_LT(report.number_relation_residual, 1e-10);
        EXPECT_LT(report.ladder_residual, 1e-10);
        EXPECT_LT(report.vacuum_projector_residual, 1e-9);
        for (int s = 0; s < 20; s++) {
            const DenseMatrix r = sample_gaussian_unitary(n, 83, static_cast<std::uint64_t>(s));
            EXPECT_LT(commutation_residual(report.vacuum_projector, r, 3), 1e-9);
        }
    }
}

TEST(GaussT4, BracketsAndCrossCommutators) {
    const auto g1 = gauss_t4_generators(1);
    EXPECT_LT(frobenius_distance(commutator(g1.j_plus_sector[0], g1.j_plus_sector[1]),
                                 Complex(0.0, 1.0) * g1.j_plus_sector[2]),
              1e-10);
    EXPECT_LT(frobenius_distance(commutator(g1.j_minus_sector[0], g1.j_minus_sector[1]),
                                 Complex(0.0, 1.0) * g1.j_minus_sector[2]),
              1e-10);
    for (int n = 1; n <= 2; n++) {
        const auto g = gauss_t4_generators(n);
        EXPECT_LT(g.su2_bracket_residual, 1e-10);
        EXPECT_LT(g.cross_commutator_residual, 1e-10);
        for (int i = 0; i < 3; i++) {
            for (int j = 0; j < 3; j++) {
                EXPECT_LT(commutator(g.j_plus_sector[static_cast<std::size_t>(i)],
                                     g.j_minus_sector[static_cast<std::size_t>(j)])
                              .frobenius_norm(),
                          1e-10);
            }
        }
    }
}

TEST(GaussT4, VacuumIsDoubleSinglet) {
    const auto g = gauss_t4_generators(1);
    const StateVector vac = StateVector::basis(std::size_t{1} << 4, 0);
    EXPECT_LT(vac.apply(g.casimir_plus).norm(), 1e-12);
    EXPECT_LT(vac.apply(g.casimir_minus).norm(), 1e-12);
    const CopySpace cs(1, 4);
    for (int j = 1; j <= 4; j++) {
        for (int k = j + 1; k <= 4; k++) {
            EXPECT_LT(vac.apply(qtilde(cs, j, k)).norm(), 1e-12);
        }
    }
}

TEST(GaussT4, CountAtOneMode) {
    EXPECT_EQ(ExactInteger(static_cast<unsigned>(gauss_t4_basis(1).size())), dim_gauss_commutant(4, 1));
}

// -- properties over every implemented basis -------------------------------------

struct BasisCase {
    GroupKind group;
    int t;
    int n;
};

std::vector<BasisCase> implemented_cases() {
    std::vector<BasisCase> out;
    for (int n = 1; n <= 3; n++) {
        out.push_back({GroupKind::pp, 1, n});
        out.push_back({GroupKind::pp, 2, n});
    }
    for (int t = 1; t <= 3; t++) {
        for (int n = 1; n <= 2; n++) {
            out.push_back({GroupKind::gauss, t, n});
        }
    }
    out.push_back({GroupKind::gauss, 4, 1});
    return out;
}

std::string label(const BasisCase& c) {
    return std::string(c.group == GroupKind::pp ? "pp" : "gauss") + " t=" + std::to_string(c.t) +
           " n=" + std::to_string(c.n);
}

TEST(BasisProperties, CompletenessAndMatrixUnits) {
    for (const auto& c : implemented_cases()) {
        const auto basis = commutant_basis(c.group, c.t, c.n);
        const ExactInteger dim = c.group == GroupKind::pp ? dim_pp_commutant(c.t, c.n) : dim_gauss_commutant(c.t, c.n);
        EXPECT_EQ(ExactInteger(static_cast<unsigned>(basis.size())), dim) << label(c);
        EXPECT_EQ(ExactInteger(gram_rank(basis)), dim) << label(c);
        const auto report = verify_matrix_units(basis);
        EXPECT_LT(report.product_residual, 1e-9) << label(c);
        EXPECT_LT(report.cross_block_residual, 1e-9) << label(c);
        EXPECT_LT(report.orthogonality_residual, 1e-9) << label(c);
        for (double constant : report.block_constants) {
            EXPECT_GT(constant, 0.5) << label(c);
        }
    }
}

TEST(BasisProperties, DiagonalUnitsAreHermitianProjectors) {
    for (const auto& c : implemented_cases()) {
        for (const auto& e : commutant_basis(c.group, c.t, c.n)) {
            if (e.parity == ParityFlag::plain && e.row == e.col) {
                EXPECT_LT(frobenius_distance(e.op * e.op, e.op), 1e-9) << label(c);
                EXPECT_TRUE(e.op.is_hermitian(1e-10)) << label(c);
            }
        }
    }
}

TEST(BasisProperties, CommuteWithSampledUnitaries) {
    for (const auto& c : implemented_cases()) {
        const auto basis = commutant_basis(c.group, c.t, c.n);
        std::vector<DenseMatrix> dense;
        for (const auto& e : basis) {
            dense.push_back(e.op.to_dense());
        }
        for (int s = 0; s < 20; s++) {
            const DenseMatrix r = c.group == GroupKind::pp ? sample_pp_gaussian_unitary(c.n, 97, std::uint64_t(s))
                                                           : sample_gaussian_unitary(c.n, 97, std::uint64_t(s));
            double worst = 0.0;
            for (const auto& x : dense) {
                worst = std::max(worst, commutation_residual(x, r, c.t));
            }
            EXPECT_LT(worst, 1e-9) << label(c) << " sample " << s;
        }
    }
}

TEST(BasisProperties, RejectsUnimplementedOrders) {
    EXPECT_THROW(commutant_basis(GroupKind::pp, 3, 1), DomainError);
    EXPECT_THROW(commutant_basis(GroupKind::gauss, 5, 1), DomainError);
}

TEST(Spectra, CheckRejectsMissingNode) {
    const auto n = number_op(2);
    EXPECT_NO_THROW(check_spectrum(n, {0.0, 1.0, 2.0}, "N"));
    EXPECT_THROW(check_spectrum(n, {0.0, 2.0}, "N"), VerificationFailure);
}

}  // namespace
}  // namespace fermicomm
