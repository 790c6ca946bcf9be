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


#include "fermicomm/invariants.hpp"

#include <cmath>
#include <functional>

#include "fermicomm/clifford.hpp"
#include "fermicomm/errors.hpp"
#include "fermicomm/gt_basis.hpp"
#include "fermicomm/multicopy.hpp"

namespace fermicomm {

namespace {

constexpr int kMaxSpectrumModes = 8;
constexpr double kFixedParticleTol = 1e-10;
constexpr double kPluckerTol = 1e-9;

void check_state(const StateVector& psi, int n) {
    check_mode_count(n);
    if (psi.dim() != (std::size_t{1} << n)) {
        throw DomainError("state has dimension " + std::to_string(psi.dim()) + ", expected 2^" + std::to_string(n));
    }
    if (!psi.is_normalized(1e-10)) {
        throw DomainError("state is not normalized (norm " + std::to_string(psi.norm()) + ")");
    }
}

/// The particle number of a fixed-particle state, or DomainError.
int particle_number(const StateVector& psi, int n) {
    double mean = psi.expectation(number_op(n)).real();
    int r = static_cast<int>(std::lround(mean));
    double residual = number_residual(psi, n, r);
    if (residual > kFixedParticleTol) {
        throw DomainError("state is not a particle-number eigenstate: ||(N - " + std::to_string(r) +
                          ") psi|| = " + std::to_string(residual));
    }
    return r;
}

/// C_a^dagger = a_{i1}^dagger ... a_{iK}^dagger.
ComplexSparseOperator creation_string(int n, const std::vector<int>& tuple) {
    ComplexSparseOperator out = ComplexSparseOperator::identity(std::size_t{1} << n);
    for (int p : tuple) {
        out = out * ladder(n, p, true);
    }
    return out;
}

}  // namespace

double InvariantReport::at(const std::vector<int>& label) const {
    for (const auto& e : entries) {
        if (e.label == label) {
            return e.value;
        }
    }
    throw DomainError(quantity + " has no entry for the requested label");
}

double InvariantReport::sum() const {
    double total = 0.0;
    for (const auto& e : entries) {
        total += e.value;
    }
    return total;
}

InvariantReport p_ki_spectrum(const StateVector& psi, int n) {
    check_state(psi, n);
    if (n > kMaxSpectrumModes) {
        throw ResourceError("p_ki_spectrum enumerates 4^n monomials; n <= " + std::to_string(kMaxSpectrumModes));
    }
    const int modes = 2 * n;
    std::vector<ComplexSparseOperator> c;
    for (int mu = 1; mu <= modes; mu++) {
        c.push_back(majorana(n, mu));
    }
    const ComplexSparseOperator gamma = parity_op(n);
    const DenseVector& ket = psi.amplitudes();
    std::vector<Complex> overlap0(static_cast<std::size_t>(modes + 1));
    std::vector<Complex> overlap1(static_cast<std::size_t>(modes + 1));

    // Depth-first over subsets, prepending ever smaller indices: v = c_{mu_1} ... c_{mu_k} psi.
    std::function<void(const DenseVector&, int, int)> visit = [&](const DenseVector& v, int below, int k) {
        Complex e0 = ket.dot(v);
        Complex e1 = ket.dot(gamma * v);
        overlap0[static_cast<std::size_t>(k)] += e0 * e0;
        overlap1[static_cast<std::size_t>(k)] += e1 * e0;
        for (int mu = below - 1; mu >= 1; mu--) {
            visit(c[static_cast<std::size_t>(mu - 1)] * v, mu, k + 1);
        }
    };
    visit(ket, modes + 1, 0);

    InvariantReport report;
    report.quantity = "p_ki";
    report.label_names = {"k", "i"};
    report.n = n;
    const double d = std::ldexp(1.0, n);
    double imag = 0.0;
    double sum0 = 0.0;
    for (int k = 0; k <= modes; k++) {
        const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        Complex p0 = sign * overlap0[static_cast<std::size_t>(k)] / d;
        Complex p1 = sign * overlap1[static_cast<std::size_t>(k)] / d;
        report.entries.push_back({{k, 0}, p0.real()});
        report.entries.push_back({{k, 1}, p1.real()});
        imag = std::max({imag, std::abs(p0.imag()), std::abs(p1.imag())});
        sum0 += p0.real();
    }
    report.residuals["sum_p0"] = std::abs(sum0 - 1.0);
    report.residuals["imag"] = imag;
    return report;
}

double number_residual(const StateVector& psi, int n, int r) {
    check_mode_count(n);
    DenseVector v = number_op(n) * psi.amplitudes() - static_cast<double>(r) * psi.amplitudes();
    return v.norm();
}

InvariantReport spin_sector_probs(const StateVector& psi, int n, int r) {
    check_state(psi, n);
    if (r < 0 || r > n) {
        throw DomainError("particle number " + std::to_string(r) + " out of range [0, " + std::to_string(n) + "]");
    }
    double residual = number_residual(psi, n, r);
    if (residual > kFixedParticleTol) {
        throw DomainError("state is not an N = " + std::to_string(r) + " eigenstate: ||(N - r) psi|| = " +
                          std::to_string(residual));
    }
    const PPt2Operators ops = pp_t2_operators(n);
    const DenseVector copies = psi.tensor_power(2).amplitudes();
    std::vector<double> nodes;
    for (int two_j = 0; two_j <= n; two_j++) {
        double j = 0.5 * two_j;
        nodes.push_back(j * (j + 1.0));
    }
    InvariantReport report;
    report.quantity = "p_j";
    report.label_names = {"j"};
    report.n = n;
    double imag = 0.0;
    const int j_max = std::min(r, n - r);
    for (int j = 0; j <= j_max; j++) {
        const double target = j * (j + 1.0);
        DenseVector w = copies;
        for (double s : nodes) {
            if (std::abs(s - target) > 1e-12) {
                w = (ops.j_squared * w - s * w) / (target - s);
            }
        }
        Complex p = copies.dot(w);
        report.entries.push_back({{j}, p.real()});
        imag = std::max(imag, std::abs(p.imag()));
    }
    report.residuals["sum"] = std::abs(report.sum() - 1.0);
    report.residuals["imag"] = imag;
    report.residuals["number"] = residual;
    return report;
}

std::vector<std::vector<int>> mode_tuples(int n, int k) {
    if (k < 0 || k > n) {
        throw DomainError("body order " + std::to_string(k) + " out of range [0, " + std::to_string(n) + "]");
    }
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::function<void(int)> recurse = [&](int next) {
        if (static_cast<int>(current.size()) == k) {
            out.push_back(current);
            return;
        }
        for (int p = next; p <= n; p++) {
            current.push_back(p);
            recurse(p + 1);
            current.pop_back();
        }
    };
    recurse(1);
    return out;
}

DenseMatrix rdm(const StateVector& psi, int n, int k) {
    check_state(psi, n);
    const auto tuples = mode_tuples(n, k);
    DenseMatrix v(static_cast<Eigen::Index>(psi.dim()), static_cast<Eigen::Index>(tuples.size()));
    for (std::size_t a = 0; a < tuples.size(); a++) {
        v.col(static_cast<Eigen::Index>(a)) = creation_string(n, tuples[a]).adjoint() * psi.amplitudes();
    }
    // rho_{a a'} = <C_{a'} psi | C_a psi>.
    return (v.adjoint() * v).transpose();
}

double quadratic_entropy(const StateVector& psi, int n, int k) {
    const int r = particle_number(psi, n);
    if (k > r) {
        throw DomainError("body order " + std::to_string(k) + " exceeds the particle number " + std::to_string(r));
    }
    const DenseMatrix rho = rdm(psi, n, k);
    const double norm = to_double(binomial(r, k));
    return 1.0 - (rho * rho).trace().real() / (norm * norm);
}

ComplexSparseOperator omega_k(int n, int k) {
    CopySpace cs(n, 2);
    const auto tuples = mode_tuples(n, k);
    std::vector<ComplexSparseOperator> create;
    for (const auto& tuple : tuples) {
        create.push_back(creation_string(n, tuple));
    }
    ComplexSparseOperator out(cs.dim());
    for (std::size_t a = 0; a < tuples.size(); a++) {
        for (std::size_t b = 0; b < tuples.size(); b++) {
            out += tensor(create[b] * create[a].adjoint(), create[a] * create[b].adjoint());
        }
    }
    return out;
}

int plucker_rank(const StateVector& psi, int n) {
    check_state(psi, n);
    particle_number(psi, n);
    CopySpace cs(n, 2);
    const ComplexSparseOperator raise = omega(cs, 1, 2);
    DenseVector v = psi.tensor_power(2).amplitudes();
    for (int k = 1; k <= n + 1; k++) {
        v = raise * v;
        if (v.norm() < kPluckerTol) {
            return k;
        }
    }
    throw ConsistencyError("Omega~_12^k psi^(x)2 does not vanish for k <= n + 1");
}

AnnihilationReport free_state_annihilation(const StateVector& psi, int n, int t, GroupKind kind) {
    check_state(psi, n);
    CopySpace cs(n, t);
    const DenseVector copies = psi.tensor_power(static_cast<unsigned>(t)).amplitudes();
    AnnihilationReport report;
    for (int i = 1; i <= t; i++) {
        for (int j = 1; j <= t; j++) {
            if (i == j || (kind == GroupKind::gauss && i > j)) {
                continue;
            }
            const ComplexSparseOperator g = kind == GroupKind::pp ? omega(cs, i, j) : qtilde(cs, i, j);
            double residual = (g * copies).norm();
            if (residual >= report.max_residual) {
                report.max_residual = residual;
                report.worst_i = i;
                report.worst_j = j;
            }
        }
    }
    return report;
}

ExactInteger d_rj(int n, int r, int j) {
    if (n < 0 || r < 0 || r > n) {
        throw DomainError("d_rj needs 0 <= r <= n, got n=" + std::to_string(n) + ", r=" + std::to_string(r));
    }
    if (j < 0 || j > std::min(r, n - r)) {
        throw DomainError("spin " + std::to_string(j) + " out of range [0, " + std::to_string(std::min(r, n - r)) +
                          "]");
    }
    ExactRational value(ExactInteger(2 * j + 1), ExactInteger(r + j + 1));
    value *= binomial(n + 1, r - j) * binomial(n, r + j);
    return require_integer(value, "d_rj");
}

}  // namespace fermicomm
