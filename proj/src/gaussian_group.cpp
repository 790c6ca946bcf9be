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

#include "fermicomm/gaussian_group.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "fermicomm/clifford.hpp"
#include "fermicomm/errors.hpp"

namespace fermicomm {

namespace {

constexpr double kGroupTolerance = 1e-10;
constexpr double kBranchCutDistance = 1e-8;
constexpr int kMaxCompileModes = 10;
constexpr int kMaxResampleAttempts = 64;

void check_compile_size(int n) {
    check_mode_count(n);
    if (n > kMaxCompileModes) {
        throw ResourceError("dense compilation is limited to n <= " + std::to_string(kMaxCompileModes) + ", got " +
                            std::to_string(n));
    }
}

}  // namespace

OrthogonalMatrix::OrthogonalMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0 || m_.rows() % 2 != 0) {
        throw DomainError("orthogonal matrix must be 2n x 2n");
    }
    const auto id = Eigen::MatrixXd::Identity(m_.rows(), m_.cols());
    double residual = (m_.transpose() * m_ - id).norm();
    if (residual >= kGroupTolerance) {
        throw DomainError("matrix is not orthogonal: ||U^T U - I||_F = " + std::to_string(residual));
    }
    double det = m_.determinant();
    if (std::abs(det - 1.0) >= kGroupTolerance) {
        throw DomainError("orthogonal matrix has det = " + std::to_string(det) + ", expected +1");
    }
}

OrthogonalMatrix OrthogonalMatrix::identity(int n) {
    return OrthogonalMatrix(Eigen::MatrixXd::Identity(2 * n, 2 * n));
}

OrthogonalMatrix OrthogonalMatrix::operator*(const OrthogonalMatrix& other) const {
    if (other.m_.rows() != m_.rows()) {
        throw DomainError("orthogonal matrix size mismatch");
    }
    return OrthogonalMatrix(m_ * other.m_);
}

UnitaryMatrix::UnitaryMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0) {
        throw DomainError("unitary matrix must be square and nonempty");
    }
    const auto id = Eigen::MatrixXcd::Identity(m_.rows(), m_.cols());
    double residual = (m_.adjoint() * m_ - id).norm();
    if (residual >= kGroupTolerance) {
        throw DomainError("matrix is not unitary: ||U^dagger U - I||_F = " + std::to_string(residual));
    }
}

UnitaryMatrix UnitaryMatrix::identity(int n) {
    return UnitaryMatrix(Eigen::MatrixXcd::Identity(n, n));
}

void QuadraticHamiltonianSpec::validate() const {
    if (h.rows() != h.cols()) {
        throw DomainError("Hamiltonian coefficient matrix must be square");
    }
    if (kind == Kind::general) {
        if (h.rows() % 2 != 0) {
            throw DomainError("general Hamiltonian needs a 2n x 2n coefficient matrix");
        }
        if (h.imag().norm() > 1e-12 || (h + h.transpose()).norm() > 1e-12) {
            throw DomainError("general Hamiltonian coefficients must be real antisymmetric");
        }
    } else if ((h - h.adjoint()).norm() > 1e-12) {
        throw DomainError("pp Hamiltonian coefficients must be Hermitian");
    }
}

ComplexSparseOperator QuadraticHamiltonianSpec::to_operator() const {
    validate();
    if (kind == Kind::general) {
        const int n = static_cast<int>(h.rows() / 2);
        check_mode_count(n);
        std::vector<ComplexSparseOperator> c;
        for (int mu = 1; mu <= 2 * n; mu++) {
            c.push_back(majorana(n, mu));
        }
        ComplexSparseOperator out(std::size_t{1} << n);
        const Complex i_half(0.0, 0.5);
        // (i/4) sum_{mu != nu} h c_mu c_nu = (i/2) sum_{mu < nu} h c_mu c_nu.
        for (int mu = 0; mu < 2 * n; mu++) {
            for (int nu = mu + 1; nu < 2 * n; nu++) {
                double coeff = h(mu, nu).real();
                if (coeff != 0.0) {
                    out += (i_half * coeff) * (c[mu] * c[nu]);
                }
            }
        }
        return out;
    }
    const int n = static_cast<int>(h.rows());
    check_mode_count(n);
    std::vector<ComplexSparseOperator> up, down;
    for (int p = 1; p <= n; p++) {
        up.push_back(ladder(n, p, true));
        down.push_back(ladder(n, p, false));
    }
    ComplexSparseOperator out(std::size_t{1} << n);
    for (int p = 0; p < n; p++) {
        for (int q = 0; q < n; q++) {
            if (h(p, q) != Complex(0.0)) {
                out += h(p, q) * (up[p] * down[q]);
            }
        }
    }
    return out;
}

OrthogonalMatrix sample_orthogonal(int n, Philox& rng) {
    check_mode_count(n);
    const int m = 2 * n;
    Eigen::MatrixXd g(m, m);
    for (int r = 0; r < m; r++) {
        for (int c = 0; c < m; c++) {
            g(r, c) = rng.normal();
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    const Eigen::MatrixXd& packed = qr.matrixQR();
    for (int k = 0; k < m; k++) {
        if (packed(k, k) < 0) {
            q.col(k) *= -1.0;
        }
    }
    if (q.determinant() < 0) {
        q.col(m - 1) *= -1.0;
    }
    return OrthogonalMatrix(std::move(q));
}

OrthogonalMatrix sample_orthogonal(int n, std::uint64_t seed, std::uint64_t index) {
    Philox rng(seed, index);
    return sample_orthogonal(n, rng);
}

UnitaryMatrix sample_unitary(int n, Philox& rng) {
    check_mode_count(n);
    Eigen::MatrixXcd g(n, n);
    const double scale = 1.0 / std::sqrt(2.0);
    for (int r = 0; r < n; r++) {
        for (int c = 0; c < n; c++) {
            double re = rng.normal();
            double im = rng.normal();
            g(r, c) = Complex(re, im) * scale;
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd& packed = qr.matrixQR();
    for (int k = 0; k < n; k++) {
        Complex d = packed(k, k);
        double mag = std::abs(d);
        if (mag > 0) {
            q.col(k) *= d / mag;
        }
    }
    return UnitaryMatrix(std::move(q));
}

UnitaryMatrix sample_unitary(int n, std::uint64_t seed, std::uint64_t index) {
    Philox rng(seed, index);
    return sample_unitary(n, rng);
}

Eigen::MatrixXd orthogonal_log(const OrthogonalMatrix& u) {
    const Eigen::MatrixXd& m = u.matrix();
    const Eigen::Index size = m.rows();
    Eigen::RealSchur<Eigen::MatrixXd> schur(m);
    const Eigen::MatrixXd& t = schur.matrixT();
    const Eigen::MatrixXd& z = schur.matrixU();
    Eigen::MatrixXd block_log = Eigen::MatrixXd::Zero(size, size);
    Eigen::Index i = 0;
    while (i < size) {
        if (i + 1 < size && t(i + 1, i) != 0.0) {
            // Standardized 2x2 block [[a, b], [c, a]] with b ~ -c: a rotation.
            double a = 0.5 * (t(i, i) + t(i + 1, i + 1));
            double s = 0.5 * (t(i + 1, i) - t(i, i + 1));
            if (std::abs(Complex(a, s) + 1.0) < kBranchCutDistance) {
                throw RetryError("orthogonal matrix has an eigenvalue at the branch cut");
            }
            double theta = std::atan2(s, a);
            block_log(i, i + 1) = -theta;
            block_log(i + 1, i) = theta;
            i += 2;
        } else {
            if (std::abs(t(i, i) + 1.0) < kBranchCutDistance) {
                throw RetryError("orthogonal matrix has an eigenvalue at the branch cut");
            }
            i += 1;
        }
    }
    Eigen::MatrixXd log = z * block_log * z.transpose();
    log = 0.5 * (log - log.transpose()).eval();
    double residual = (log.exp() - m).norm();
    if (residual > 1e-9) {
        throw ConsistencyError("orthogonal logarithm failed to reproduce its input, residual " +
                               std::to_string(residual));
    }
    return log;
}

Eigen::MatrixXcd unitary_log(const UnitaryMatrix& u) {
    const Eigen::MatrixXcd& m = u.matrix();
    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(m);
    const Eigen::MatrixXcd& t = schur.matrixT();
    const Eigen::MatrixXcd& z = schur.matrixU();
    Eigen::VectorXcd phases(m.rows());
    for (Eigen::Index k = 0; k < m.rows(); k++) {
        Complex lambda = t(k, k);
        if (std::abs(lambda + 1.0) < kBranchCutDistance) {
            throw RetryError("unitary matrix has an eigenvalue at the branch cut");
        }
        phases[k] = Complex(0.0, std::arg(lambda));
    }
    Eigen::MatrixXcd log = z * phases.asDiagonal() * z.adjoint();
    log = 0.5 * (log - log.adjoint()).eval();
    double residual = (log.exp() - m).norm();
    if (residual > 1e-9) {
        throw ConsistencyError("unitary logarithm failed to reproduce its input, residual " + std::to_string(residual));
    }
    return log;
}

DenseMatrix compile_gaussian(int n, const OrthogonalMatrix& u) {
    check_compile_size(n);
    if (u.modes() != n) {
        throw DomainError("orthogonal matrix is for " + std::to_string(u.modes()) + " modes, expected " +
                          std::to_string(n));
    }
    Eigen::MatrixXd log = orthogonal_log(u);
    // With H = (i/4) sum h c c and h = -log U, R = exp(-iH) satisfies R c R^dagger = U c.
    QuadraticHamiltonianSpec spec{QuadraticHamiltonianSpec::Kind::general, (-log).cast<Complex>()};
    DenseMatrix generator = spec.to_operator().to_dense() * Complex(0.0, -1.0);
    return generator.exp();
}

DenseMatrix compile_pp_gaussian(int n, const UnitaryMatrix& u) {
    check_compile_size(n);
    if (u.modes() != n) {
        throw DomainError("unitary matrix is for " + std::to_string(u.modes()) + " modes, expected " +
                          std::to_string(n));
    }
    Eigen::MatrixXcd h = Complex(0.0, 1.0) * unitary_log(u);
    h = 0.5 * (h + h.adjoint()).eval();
    QuadraticHamiltonianSpec spec{QuadraticHamiltonianSpec::Kind::pp, h};
    DenseMatrix generator = spec.to_operator().to_dense() * Complex(0.0, -1.0);
    return generator.exp();
}

double majorana_covariance_residual(const DenseMatrix& r, const OrthogonalMatrix& u) {
    const int n = u.modes();
    std::vector<DenseMatrix> c;
    for (int mu = 1; mu <= 2 * n; mu++) {
        c.push_back(majorana(n, mu).to_dense());
    }
    double worst = 0.0;
    for (int mu = 0; mu < 2 * n; mu++) {
        DenseMatrix expected = DenseMatrix::Zero(r.rows(), r.cols());
        for (int nu = 0; nu < 2 * n; nu++) {
            expected += u.matrix()(mu, nu) * c[nu];
        }
        worst = std::max(worst, (r * c[mu] * r.adjoint() - expected).norm());
    }
    return worst;
}

double creation_covariance_residual(const DenseMatrix& r, const UnitaryMatrix& u) {
    const int n = u.modes();
    std::vector<DenseMatrix> up;
    for (int p = 1; p <= n; p++) {
        up.push_back(ladder(n, p, true).to_dense());
    }
    double worst = 0.0;
    for (int p = 0; p < n; p++) {
        DenseMatrix expected = DenseMatrix::Zero(r.rows(), r.cols());
        for (int q = 0; q < n; q++) {
            expected += u.matrix()(q, p) * up[q];
        }
        worst = std::max(worst, (r * up[p] * r.adjoint() - expected).norm());
    }
    return worst;
}

StateVector slater_state(int n, std::span<const int> occupied_modes) {
    check_mode_count(n);
    std::vector<int> modes(occupied_modes.begin(), occupied_modes.end());
    std::sort(modes.begin(), modes.end());
    for (std::size_t k = 0; k < modes.size(); k++) {
        if (modes[k] < 1 || modes[k] > n) {
            throw DomainError("occupied mode " + std::to_string(modes[k]) + " out of range [1, " + std::to_string(n) +
                              "]");
        }
        if (k > 0 && modes[k] == modes[k - 1]) {
            throw DomainError("occupied mode " + std::to_string(modes[k]) + " listed twice");
        }
    }
    StateVector psi = StateVector::basis(std::size_t{1} << n, 0);
    for (auto it = modes.rbegin(); it != modes.rend(); ++it) {
        psi = psi.apply(ladder(n, *it, true));
    }
    return psi;
}

DenseMatrix sample_gaussian_unitary(int n, std::uint64_t seed, std::uint64_t index) {
    Philox rng(seed, index);
    for (int attempt = 0; attempt < kMaxResampleAttempts; attempt++) {
        try {
            return compile_gaussian(n, sample_orthogonal(n, rng));
        } catch (const RetryError&) {
        }
    }
    throw ConsistencyError("repeated branch-cut hits while sampling a Gaussian unitary");
}

DenseMatrix sample_pp_gaussian_unitary(int n, std::uint64_t seed, std::uint64_t index) {
    Philox rng(seed, index);
    for (int attempt = 0; attempt < kMaxResampleAttempts; attempt++) {
        try {
            return compile_pp_gaussian(n, sample_unitary(n, rng));
        } catch (const RetryError&) {
        }
    }
    throw ConsistencyError("repeated branch-cut hits while sampling a PP Gaussian unitary");
}

StateVector sample_haar_state(int n, Philox& rng) {
    check_mode_count(n);
    const Eigen::Index dim = Eigen::Index{1} << n;
    DenseVector v(dim);
    for (Eigen::Index k = 0; k < dim; k++) {
        double re = rng.normal();
        double im = rng.normal();
        v[k] = Complex(re, im);
    }
    return StateVector(v / v.norm());
}

}  // namespace fermicomm
