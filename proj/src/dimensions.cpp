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


#include "fermicomm/dimensions.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "fermicomm/clifford.hpp"
#include "fermicomm/errors.hpp"
#include "fermicomm/sparse_operator.hpp"

namespace fermicomm {

namespace {

void check_nonnegative(int t, int n) {
    if (t < 0 || n < 0) {
        throw DomainError("dimension formulas need t >= 0 and n >= 0, got t=" + std::to_string(t) +
                          ", n=" + std::to_string(n));
    }
}

ComplexSparseOperator lift_to_copies(const ComplexSparseOperator& g, int t) {
    const ComplexSparseOperator id = ComplexSparseOperator::identity(g.dim());
    ComplexSparseOperator out;
    for (int slot = 0; slot < t; slot++) {
        std::vector<ComplexSparseOperator> factors;
        for (int copy = 0; copy < t; copy++) {
            factors.push_back(copy == slot ? g : id);
        }
        ComplexSparseOperator term = tensor(std::span<const ComplexSparseOperator>(factors));
        out = slot == 0 ? term : out + term;
    }
    return out;
}

std::vector<ComplexSparseOperator> one_copy_algebra(int n, GroupKind group) {
    std::vector<ComplexSparseOperator> out;
    const Complex i(0.0, 1.0);
    if (group == GroupKind::pp) {
        for (int p = 1; p <= n; p++) {
            out.push_back(hopping(n, p, p));
            for (int q = p + 1; q <= n; q++) {
                ComplexSparseOperator h = hopping(n, p, q);
                out.push_back(h + h.adjoint());
                out.push_back(i * (h - h.adjoint()));
            }
        }
    } else {
        for (int mu = 1; mu <= 2 * n; mu++) {
            for (int nu = mu + 1; nu <= 2 * n; nu++) {
                out.push_back(i * (majorana(n, mu) * majorana(n, nu)));
            }
        }
    }
    return out;
}

}  // namespace

ExactInteger pp_dim_product_formula(int t, int n) {
    check_nonnegative(t, n);
    ExactRational out = 1;
    for (int j = 0; j < n; j++) {
        ExactInteger den = factorial(j + t);
        out *= ExactRational(factorial(j) * factorial(j + 2 * t), den * den);
    }
    return require_integer(out, "PP commutant dimension (product formula)");
}

ExactInteger pp_dim_double_product(int t, int n) {
    check_nonnegative(t, n);
    ExactRational out = 1;
    for (int i = 1; i <= t; i++) {
        for (int j = 1; j <= t; j++) {
            out *= ExactRational(n + i + j - 1, i + j - 1);
        }
    }
    return require_integer(out, "PP commutant dimension (double product)");
}

ExactInteger dim_pp_commutant(int t, int n) {
    ExactInteger a = pp_dim_product_formula(t, n);
    ExactInteger b = pp_dim_double_product(t, n);
    if (a != b) {
        throw ConsistencyError("PP dimension formulas disagree at t=" + std::to_string(t) + ", n=" +
                               std::to_string(n) + ": " + to_string(a) + " vs " + to_string(b));
    }
    return a;
}

ExactInteger dim_gauss_commutant(int t, int n) {
    if (t < 1 || n < 1) {
        throw DomainError("Gaussian commutant dimension needs t >= 1 and n >= 1");
    }
    ExactRational out(1, ExactInteger(1) << (n - 1));
    for (int j = 0; j < n; j++) {
        out *= ExactRational(factorial(2 * j) * factorial(2 * t + 2 * j),
                             factorial(t + j) * factorial(t + n + j - 1));
    }
    return require_integer(out, "Gaussian commutant dimension");
}

ExactRational pp_dim_leading_coefficient(int t) {
    if (t < 1) {
        throw DomainError("leading coefficient needs t >= 1");
    }
    ExactRational out = 1;
    for (int k = 1; k <= t; k++) {
        out *= ExactRational(factorial(k - 1), factorial(t + k - 1));
    }
    return out;
}

double pp_dim_large_t_log_estimate(int t, int n) {
    if (t < 1 || n < 0) {
        throw DomainError("large-t estimate needs t >= 1 and n >= 0");
    }
    double log_k = -0.5 * n * std::log(std::numbers::pi) + 0.5 * n * (n - 1) * std::log(2.0);
    for (int j = 0; j < n; j++) {
        log_k += std::lgamma(j + 1.0);
    }
    return log_k + n * t * std::log(4.0) - 0.5 * n * n * std::log(static_cast<double>(t));
}

double pp_dim_large_t_estimate(int t, int n) {
    return std::exp(pp_dim_large_t_log_estimate(t, n));
}

ExactInteger weyl_ut_irrep_dim(const Partition& lambda, int t) {
    if (t < 1) {
        throw DomainError("U(t) needs t >= 1");
    }
    if (lambda.length() > t) {
        throw DomainError("partition " + lambda.to_string() + " has more than t=" + std::to_string(t) + " parts");
    }
    ExactRational out = 1;
    for (int i = 1; i <= t; i++) {
        for (int j = i + 1; j <= t; j++) {
            int li = lambda[static_cast<std::size_t>(i - 1)];
            int lj = lambda[static_cast<std::size_t>(j - 1)];
            out *= ExactRational(li - lj + j - i, j - i);
        }
    }
    return require_integer(out, "U(t) irrep dimension");
}

int brute_force_commutant_dim(int n, int t, GroupKind group, int max_qubits) {
    if (n < 1 || t < 1) {
        throw DomainError("brute-force oracle needs n >= 1 and t >= 1");
    }
    if (n * t > max_qubits) {
        throw ResourceError("brute-force oracle limited to n*t <= " + std::to_string(max_qubits) + ", got " +
                            std::to_string(n * t));
    }
    const std::size_t dim = std::size_t{1} << (n * t);

    std::vector<DenseMatrix> constraints;
    std::vector<std::vector<std::int64_t>> signatures(dim);
    for (const auto& g : one_copy_algebra(n, group)) {
        ComplexSparseOperator lifted = lift_to_copies(g, t);
        if (lifted.is_diagonal()) {
            // X_ab can be nonzero only where the diagonal entries at a and b agree.
            for (std::size_t a = 0; a < dim; a++) {
                Complex v = lifted.at(a, a);
                signatures[a].push_back(std::llround(v.real() * 4.0));
                signatures[a].push_back(std::llround(v.imag() * 4.0));
            }
        } else {
            constraints.push_back(lifted.to_dense());
        }
    }

    std::vector<std::int64_t> column_of(dim * dim, -1);
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    for (std::size_t a = 0; a < dim; a++) {
        for (std::size_t b = 0; b < dim; b++) {
            if (signatures[a] == signatures[b]) {
                column_of[a * dim + b] = static_cast<std::int64_t>(unknowns.size());
                unknowns.emplace_back(a, b);
            }
        }
    }
    const Eigen::Index cols = static_cast<Eigen::Index>(unknowns.size());
    if (constraints.empty()) {
        return static_cast<int>(cols);
    }

    // Stack the commutator maps blockwise, keeping only a triangular factor.
    DenseMatrix triangular(0, cols);
    const auto d = static_cast<Eigen::Index>(dim);
    for (const DenseMatrix& g : constraints) {
        DenseMatrix block = DenseMatrix::Zero(d * d, cols);
        for (Eigen::Index col = 0; col < cols; col++) {
            auto [x_row, x_col] = unknowns[static_cast<std::size_t>(col)];
            const auto r = static_cast<Eigen::Index>(x_row);
            const auto c = static_cast<Eigen::Index>(x_col);
            // (G X)_{a, c} picks up G_{a, r}; (X G)_{r, b} picks up G_{c, b}.
            for (Eigen::Index a = 0; a < d; a++) {
                if (g(a, r) != Complex(0.0)) {
                    block(a * d + c, col) += g(a, r);
                }
            }
            for (Eigen::Index b = 0; b < d; b++) {
                if (g(c, b) != Complex(0.0)) {
                    block(r * d + b, col) -= g(c, b);
                }
            }
        }
        std::vector<Eigen::Index> live;
        for (Eigen::Index row = 0; row < block.rows(); row++) {
            if (block.row(row).squaredNorm() > 0.0) {
                live.push_back(row);
            }
        }
        DenseMatrix stacked(triangular.rows() + static_cast<Eigen::Index>(live.size()), cols);
        stacked.topRows(triangular.rows()) = triangular;
        for (std::size_t k = 0; k < live.size(); k++) {
            stacked.row(triangular.rows() + static_cast<Eigen::Index>(k)) = block.row(live[k]);
        }
        Eigen::HouseholderQR<DenseMatrix> qr(stacked);
        const Eigen::Index keep = std::min(stacked.rows(), cols);
        triangular = qr.matrixQR().topRows(keep).triangularView<Eigen::Upper>();
    }

    Eigen::BDCSVD<DenseMatrix> svd(triangular);
    const auto& sigma = svd.singularValues();
    const double threshold = 1e-8 * (sigma.size() > 0 ? sigma.maxCoeff() : 0.0);
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < sigma.size(); k++) {
        rank += sigma[k] > threshold;
    }
    return static_cast<int>(cols - rank);
}

}  // namespace fermicomm
