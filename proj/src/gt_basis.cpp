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


#include "fermicomm/gt_basis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "fermicomm/clifford.hpp"
#include "fermicomm/errors.hpp"
#include "fermicomm/rng.hpp"

namespace fermicomm {

namespace {

constexpr int kDenseSpectrumLimit = 1024;
const Complex kI(0.0, 1.0);

std::string join(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); i++) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(v[i]);
    }
    return out;
}

std::vector<double> integer_nodes(int lo, int hi) {
    std::vector<double> out;
    for (int v = lo; v <= hi; v++) {
        out.push_back(v);
    }
    return out;
}

/// Nodes v/2 for v in [lo2, hi2].
std::vector<double> half_nodes(int lo2, int hi2) {
    std::vector<double> out;
    for (int v = lo2; v <= hi2; v++) {
        out.push_back(0.5 * v);
    }
    return out;
}

/// Casimir values j(j+1) for 2j in [0, max2j].
std::vector<double> casimir_nodes(int max2j) {
    std::vector<double> out;
    for (int v = 0; v <= max2j; v++) {
        double j = 0.5 * v;
        out.push_back(j * (j + 1.0));
    }
    return out;
}

/// ||J_-^a |j, j>||^2 = a! (2j)! / (2j - a)!.
double lowering_norm_squared(int a, int two_j) {
    double out = 1.0;
    for (int k = 0; k < a; k++) {
        out *= static_cast<double>((two_j - k) * (k + 1));
    }
    return out;
}

double max_abs_entry(const ComplexSparseOperator& op) {
    double worst = 0.0;
    const SparseMatrix& m = op.matrix();
    for (Eigen::Index k = 0; k < m.outerSize(); k++) {
        for (SparseMatrix::InnerIterator it(m, k); it; ++it) {
            worst = std::max(worst, std::abs(it.value()));
        }
    }
    return worst;
}

ComplexSparseOperator single_copy_product(int n, const std::vector<int>& mus) {
    ComplexSparseOperator out = ComplexSparseOperator::identity(std::size_t{1} << n);
    for (int mu : mus) {
        out = out * majorana(n, mu);
    }
    return out;
}

void for_each_subset(int size, int k, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> current;
    std::function<void(int)> recurse = [&](int next) {
        if (static_cast<int>(current.size()) == k) {
            visit(current);
            return;
        }
        for (int v = next; v <= size - (k - static_cast<int>(current.size())) + 1; v++) {
            current.push_back(v);
            recurse(v + 1);
            current.pop_back();
        }
    };
    recurse(1);
}

void check_gauss_weight(const Weight& lambda, int t) {
    const std::size_t rank = static_cast<std::size_t>(t / 2);
    if (lambda.size() != rank) {
        throw DomainError("so(" + std::to_string(t) + ") weight needs " + std::to_string(rank) + " entries, got " +
                          weight_to_string(lambda));
    }
    for (std::size_t i = 0; i + 1 < rank; i++) {
        bool last_pair = i + 2 == rank;
        int next = (last_pair && t % 2 == 0) ? std::abs(lambda[i + 1]) : lambda[i + 1];
        if (lambda[i] < next) {
            throw DomainError("so(" + std::to_string(t) + ") weight not dominant: " + weight_to_string(lambda));
        }
    }
    if (t % 2 == 1 && rank > 0 && lambda[rank - 1] < 0) {
        throw DomainError("so(" + std::to_string(t) + ") weight not dominant: " + weight_to_string(lambda));
    }
}

/// so(s) -> so(s-1) branching of one row.
std::vector<std::vector<int>> so_branch(const std::vector<int>& row, int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    const int r = static_cast<int>(row.size());
    if (s % 2 == 1) {
        // B_r -> D_r: row_i >= mu_i >= row_{i+1}, row_r >= |mu_r|.
        std::function<void(int)> recurse = [&](int i) {
            if (i == r) {
                out.push_back(current);
                return;
            }
            int hi = row[static_cast<std::size_t>(i)];
            int lo = (i + 1 < r) ? row[static_cast<std::size_t>(i + 1)] : -hi;
            for (int v = lo; v <= hi; v++) {
                current.push_back(v);
                recurse(i + 1);
                current.pop_back();
            }
        };
        recurse(0);
    } else {
        // D_r -> B_{r-1}: row_i >= mu_i >= row_{i+1}, with |row_r| as the last lower bound.
        std::function<void(int)> recurse = [&](int i) {
            if (i == r - 1) {
                out.push_back(current);
                return;
            }
            int hi = row[static_cast<std::size_t>(i)];
            int lo = (i + 2 == r) ? std::abs(row[static_cast<std::size_t>(r - 1)]) : row[static_cast<std::size_t>(i + 1)];
            for (int v = lo; v <= hi; v++) {
                current.push_back(v);
                recurse(i + 1);
                current.pop_back();
            }
        };
        recurse(0);
    }
    return out;
}

struct LadderBlock {
    std::vector<ComplexSparseOperator> lowered;  ///< J_-^a P^hw / ||.||
};

LadderBlock lower_from(const ComplexSparseOperator& hw, const ComplexSparseOperator& lower, int two_j) {
    LadderBlock block;
    ComplexSparseOperator current = hw;
    for (int a = 0; a <= two_j; a++) {
        if (a > 0) {
            current = lower * current;
        }
        block.lowered.push_back(current * Complex(1.0 / std::sqrt(lowering_norm_squared(a, two_j))));
    }
    return block;
}

std::vector<CommutantBasisElement> with_gamma1(std::vector<CommutantBasisElement> plain,
                                               const ComplexSparseOperator& gamma1) {
    const std::size_t count = plain.size();
    for (std::size_t k = 0; k < count; k++) {
        CommutantBasisElement e = plain[k];
        e.parity = ParityFlag::gamma1;
        e.op = gamma1 * plain[k].op;
        plain.push_back(std::move(e));
    }
    return plain;
}

}  // namespace

std::string weight_to_string(const Weight& w) {
    return "(" + join(w) + ")";
}

std::string GTPattern::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); i++) {
        if (i > 0) {
            out += ";";
        }
        out += join(rows[i]);
    }
    return out + "]";
}

std::vector<Weight> enumerate_weights(GroupKind group, int t, int n) {
    if (t < 1 || n < 0) {
        throw DomainError("enumerate_weights needs t >= 1 and n >= 0");
    }
    std::vector<Weight> out;
    if (group == GroupKind::pp) {
        for (const Partition& p : partitions_in_box(t, n)) {
            out.push_back(p.parts());
        }
        return out;
    }
    const int rank = t / 2;
    for (const Partition& p : partitions_in_box(rank, n)) {
        Weight w = p.parts();
        out.push_back(w);
        if (t % 2 == 0 && rank > 0 && w.back() > 0) {
            w.back() = -w.back();
            out.push_back(w);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GTPattern> gt_patterns(const Weight& lambda, GroupKind group, int t) {
    if (t < 1) {
        throw DomainError("gt_patterns needs t >= 1");
    }
    std::vector<GTPattern> out;
    if (group == GroupKind::pp) {
        if (static_cast<int>(lambda.size()) != t) {
            throw DomainError("U(" + std::to_string(t) + ") weight needs " + std::to_string(t) + " entries, got " +
                              weight_to_string(lambda));
        }
        Partition(std::vector<int>(lambda));  // validates dominance
        GTPattern current;
        std::function<void(const std::vector<int>&)> recurse = [&](const std::vector<int>& row) {
            current.rows.push_back(row);
            if (row.size() == 1) {
                out.push_back(current);
            } else {
                std::vector<int> next(row.size() - 1);
                std::function<void(std::size_t)> fill = [&](std::size_t i) {
                    if (i == next.size()) {
                        recurse(next);
                        return;
                    }
                    for (int v = row[i + 1]; v <= row[i]; v++) {
                        next[i] = v;
                        fill(i + 1);
                    }
                };
                fill(0);
            }
            current.rows.pop_back();
        };
        recurse(lambda);
        return out;
    }
    check_gauss_weight(lambda, t);
    if (t <= 2) {
        out.push_back(GTPattern{{lambda}});
        return out;
    }
    GTPattern current;
    std::function<void(const std::vector<int>&, int)> recurse = [&](const std::vector<int>& row, int s) {
        current.rows.push_back(row);
        if (s == 2) {
            out.push_back(current);
        } else {
            for (const auto& next : so_branch(row, s)) {
                recurse(next, s - 1);
            }
        }
        current.rows.pop_back();
    };
    recurse(lambda, t);
    return out;
}

ExactInteger gt_dimension_count(GroupKind group, int t, int n) {
    ExactInteger total = 0;
    for (const Weight& w : enumerate_weights(group, t, n)) {
        ExactInteger count = static_cast<unsigned>(gt_patterns(w, group, t).size());
        total += count * count;
    }
    return group == GroupKind::gauss ? 2 * total : total;
}

void check_spectrum(const ComplexSparseOperator& a, const std::vector<double>& nodes, const std::string& what,
                    double tol) {
    auto distance = [&](double v) {
        double best = std::numeric_limits<double>::infinity();
        for (double s : nodes) {
            best = std::min(best, std::abs(v - s));
        }
        return best;
    };
    if (a.dim() <= static_cast<std::size_t>(kDenseSpectrumLimit)) {
        Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(a.to_dense(), Eigen::EigenvaluesOnly);
        for (Eigen::Index k = 0; k < solver.eigenvalues().size(); k++) {
            double v = solver.eigenvalues()[k];
            if (distance(v) > tol) {
                throw VerificationFailure(what + ": eigenvalue " + std::to_string(v) + " is not a predicted node");
            }
        }
        return;
    }
    // Large operators: the node polynomial must annihilate random probe vectors.
    Philox rng(0x5eedu, a.dim());
    double scale = 1.0;
    double spread = 0.0;
    for (double s : nodes) {
        spread = std::max(spread, std::abs(s));
    }
    for (std::size_t k = 1; k < nodes.size(); k++) {
        scale *= 2.0 * spread + 1.0;
    }
    for (int probe = 0; probe < 3; probe++) {
        DenseVector v(static_cast<Eigen::Index>(a.dim()));
        for (Eigen::Index i = 0; i < v.size(); i++) {
            double re = rng.normal();
            double im = rng.normal();
            v[i] = Complex(re, im);
        }
        v /= v.norm();
        for (double s : nodes) {
            v = a * v - s * v;
        }
        if (v.norm() > tol * scale) {
            throw VerificationFailure(what + ": node polynomial does not annihilate the operator");
        }
    }
}

ComplexSparseOperator lagrange_projector(const ComplexSparseOperator& a, const std::vector<double>& nodes,
                                         double target) {
    ComplexSparseOperator out = ComplexSparseOperator::identity(a.dim());
    const ComplexSparseOperator id = ComplexSparseOperator::identity(a.dim());
    for (double s : nodes) {
        if (std::abs(s - target) < 1e-12) {
            continue;
        }
        out = out * (a - Complex(s) * id) * Complex(1.0 / (target - s));
    }
    return out;
}

ComplexSparseOperator pp_number_projector(int n, int r) {
    check_mode_count(n);
    if (r < 0 || r > n) {
        throw DomainError("particle number " + std::to_string(r) + " out of range [0, " + std::to_string(n) + "]");
    }
    ComplexSparseOperator number = number_op(n);
    std::vector<double> nodes = integer_nodes(0, n);
    check_spectrum(number, nodes, "number operator");
    return lagrange_projector(number, nodes, r);
}

ExactInteger krawtchouk(int a, int x, int big_n) {
    if (big_n < 0 || a < 0 || a > big_n || x < 0 || x > big_n) {
        throw DomainError("krawtchouk needs 0 <= a, x <= N, got a=" + std::to_string(a) + ", x=" + std::to_string(x) +
                          ", N=" + std::to_string(big_n));
    }
    ExactInteger out = 0;
    for (int j = 0; j <= a; j++) {
        ExactInteger term = binomial(x, j) * binomial(big_n - x, a - j);
        out += (j % 2 == 0) ? term : ExactInteger(-term);
    }
    return out;
}

ComplexSparseOperator pp_symmetric_basis(int n, int a) {
    check_mode_count(n);
    if (a < 0 || a > n) {
        throw DomainError("symmetric degree " + std::to_string(a) + " out of range [0, " + std::to_string(n) + "]");
    }
    ComplexSparseOperator out(std::size_t{1} << n);
    for_each_subset(n, a, [&](const std::vector<int>& subset) {
        std::string letters(static_cast<std::size_t>(n), 'I');
        for (int q : subset) {
            letters[static_cast<std::size_t>(q - 1)] = 'Z';
        }
        out += pauli_string(letters);
    });
    return out;
}

std::vector<CommutantBasisElement> pp_t1_basis(int n) {
    check_mode_count(n);
    const ComplexSparseOperator number = number_op(n);
    const std::vector<double> nodes = integer_nodes(0, n);
    check_spectrum(number, nodes, "number operator");
    std::vector<CommutantBasisElement> out;
    for (int r = 0; r <= n; r++) {
        GTPattern pattern{{{r}}};
        out.push_back({Weight{r}, pattern, pattern, ParityFlag::plain, lagrange_projector(number, nodes, r)});
    }
    return out;
}

PPt2Operators pp_t2_operators(int n) {
    CopySpace cs(n, 2);
    PPt2Operators ops;
    ops.j_plus = omega(cs, 1, 2);
    ops.j_minus = omega(cs, 2, 1);
    ops.number = omega(cs, 1, 1) + omega(cs, 2, 2);
    ops.j_z = Complex(0.5) * (omega(cs, 1, 1) - omega(cs, 2, 2));
    ops.j_squared = ops.j_z * ops.j_z + Complex(0.5) * (ops.j_plus * ops.j_minus + ops.j_minus * ops.j_plus);
    return ops;
}

std::vector<CommutantBasisElement> pp_t2_basis(int n) {
    const PPt2Operators ops = pp_t2_operators(n);
    const std::vector<double> number_nodes = integer_nodes(0, 2 * n);
    const std::vector<double> casimir = casimir_nodes(n);
    const std::vector<double> jz_nodes = half_nodes(-n, n);
    check_spectrum(ops.number, number_nodes, "N");
    check_spectrum(ops.j_squared, casimir, "J^2");
    check_spectrum(ops.j_z, jz_nodes, "J_z");

    std::vector<CommutantBasisElement> out;
    for (const Weight& lambda : enumerate_weights(GroupKind::pp, 2, n)) {
        const int l1 = lambda[0];
        const int l2 = lambda[1];
        const int two_j = l1 - l2;
        const double j = 0.5 * two_j;
        ComplexSparseOperator hw = lagrange_projector(ops.number, number_nodes, l1 + l2) *
                                   lagrange_projector(ops.j_squared, casimir, j * (j + 1.0)) *
                                   lagrange_projector(ops.j_z, jz_nodes, j);
        LadderBlock block = lower_from(hw, ops.j_minus, two_j);
        const auto patterns = gt_patterns(lambda, GroupKind::pp, 2);
        for (const GTPattern& row : patterns) {
            for (const GTPattern& col : patterns) {
                int a = l1 - row.rows[1][0];
                int b = l1 - col.rows[1][0];
                out.push_back({lambda, row, col, ParityFlag::plain,
                               block.lowered[static_cast<std::size_t>(a)] *
                                   block.lowered[static_cast<std::size_t>(b)].adjoint()});
            }
        }
    }
    return out;
}

std::vector<CommutantBasisElement> gauss_t1_basis(int n) {
    check_mode_count(n);
    GTPattern empty{{{}}};
    std::vector<CommutantBasisElement> plain{
        {Weight{}, empty, empty, ParityFlag::plain, ComplexSparseOperator::identity(std::size_t{1} << n)}};
    return with_gamma1(std::move(plain), parity_op(n));
}

std::vector<ComplexSparseOperator> gauss_t2_projectors(int n) {
    CopySpace cs(n, 2);
    ComplexSparseOperator m = -kI * qtilde(cs, 1, 2);
    const std::vector<double> nodes = integer_nodes(-n, n);
    check_spectrum(m, nodes, "M = -i Q~_{12}");
    std::vector<ComplexSparseOperator> out;
    for (int v = -n; v <= n; v++) {
        out.push_back(lagrange_projector(m, nodes, v));
    }
    return out;
}

std::vector<CommutantBasisElement> gauss_t2_basis(int n) {
    CopySpace cs(n, 2);
    std::vector<ComplexSparseOperator> projectors = gauss_t2_projectors(n);
    std::vector<CommutantBasisElement> plain;
    for (int v = -n; v <= n; v++) {
        GTPattern pattern{{{v}}};
        plain.push_back({Weight{v}, pattern, pattern, ParityFlag::plain, projectors[static_cast<std::size_t>(v + n)]});
    }
    return with_gamma1(std::move(plain), copy_parity(cs, 1));
}

ComplexSparseOperator qk_operator(int n, int k, int flavor) {
    CopySpace cs(n, 2);
    if (k < 0 || k > 2 * n) {
        throw DomainError("Q_k degree " + std::to_string(k) + " out of range [0, " + std::to_string(2 * n) + "]");
    }
    if (flavor != 0 && flavor != 1) {
        throw DomainError("Q_k flavor must be 0 or 1");
    }
    const ComplexSparseOperator gamma = parity_op(n);
    if (k == 0) {
        const ComplexSparseOperator id = ComplexSparseOperator::identity(cs.copy_dim());
        return flavor == 0 ? ComplexSparseOperator::identity(cs.dim()) : tensor(gamma, id);
    }
    ComplexSparseOperator out(cs.dim());
    for_each_subset(2 * n, k, [&](const std::vector<int>& mus) {
        ComplexSparseOperator c = single_copy_product(n, mus);
        out += tensor(flavor == 1 ? gamma * c : c, c);
    });
    return out;
}

ComplexSparseOperator gauss_t2_e_operator(int n, int k) {
    if (k % 2 == 0) {
        return qk_operator(n, k, 0);
    }
    return kI * qk_operator(n, k, 1);
}

ChangeOfBasisReport gauss_t2_change_of_basis(int n, double tol) {
    std::vector<ComplexSparseOperator> projectors = gauss_t2_projectors(n);
    std::vector<ComplexSparseOperator> e_ops;
    for (int k = 0; k <= 2 * n; k++) {
        e_ops.push_back(gauss_t2_e_operator(n, k));
    }
    ChangeOfBasisReport report;
    report.n = n;
    for (int k = 0; k <= 2 * n; k++) {
        ComplexSparseOperator rebuilt(e_ops[0].dim());
        for (int m = -n; m <= n; m++) {
            double coeff = to_double(krawtchouk(k, n - m, 2 * n));
            rebuilt += Complex(coeff) * projectors[static_cast<std::size_t>(m + n)];
        }
        double residual = max_abs_entry(rebuilt - e_ops[static_cast<std::size_t>(k)]);
        if (residual > report.max_forward_residual) {
            report.max_forward_residual = residual;
            report.worst_k = k;
        }
    }
    const double d_squared = std::ldexp(1.0, 2 * n);
    for (int m = -n; m <= n; m++) {
        ComplexSparseOperator rebuilt(e_ops[0].dim());
        for (int k = 0; k <= 2 * n; k++) {
            ExactRational coeff(krawtchouk(k, n - m, 2 * n) * binomial(2 * n, n - m), binomial(2 * n, k));
            rebuilt += Complex(to_double(coeff) / d_squared) * e_ops[static_cast<std::size_t>(k)];
        }
        double residual = max_abs_entry(rebuilt - projectors[static_cast<std::size_t>(m + n)]);
        if (residual > report.max_inverse_residual) {
            report.max_inverse_residual = residual;
            report.worst_m = m;
        }
    }
    if (report.max_forward_residual > tol) {
        throw VerificationFailure("E_k = sum_m K_k(n-m; 2n) P_m fails at k=" + std::to_string(report.worst_k) +
                                  ", residual " + std::to_string(report.max_forward_residual));
    }
    if (report.max_inverse_residual > tol) {
        throw VerificationFailure("Krawtchouk inversion fails at m=" + std::to_string(report.worst_m) + ", residual " +
                                  std::to_string(report.max_inverse_residual));
    }
    return report;
}

SpinOperators gauss_t3_operators(int n) {
    CopySpace cs(n, 3);
    SpinOperators ops;
    ops.j_z = -kI * qtilde(cs, 1, 2);
    ops.j_plus = qtilde(cs, 1, 3) + kI * qtilde(cs, 2, 3);
    ops.j_minus = -(qtilde(cs, 1, 3) - kI * qtilde(cs, 2, 3));
    ops.j_squared = ops.j_z * ops.j_z + Complex(0.5) * (ops.j_plus * ops.j_minus + ops.j_minus * ops.j_plus);
    return ops;
}

std::vector<CommutantBasisElement> gauss_t3_basis(int n) {
    CopySpace cs(n, 3);
    const SpinOperators ops = gauss_t3_operators(n);
    std::vector<double> casimir;
    for (int l = 0; l <= n; l++) {
        casimir.push_back(l * (l + 1.0));
    }
    const std::vector<double> jz_nodes = integer_nodes(-n, n);
    check_spectrum(ops.j_squared, casimir, "J^2");
    check_spectrum(ops.j_z, jz_nodes, "J_z");

    std::vector<CommutantBasisElement> plain;
    for (int l = 0; l <= n; l++) {
        ComplexSparseOperator hw =
            lagrange_projector(ops.j_squared, casimir, l * (l + 1.0)) * lagrange_projector(ops.j_z, jz_nodes, l);
        LadderBlock block = lower_from(hw, ops.j_minus, 2 * l);
        const Weight lambda{l};
        for (const GTPattern& row : gt_patterns(lambda, GroupKind::gauss, 3)) {
            for (const GTPattern& col : gt_patterns(lambda, GroupKind::gauss, 3)) {
                int a = l - row.rows[1][0];
                int b = l - col.rows[1][0];
                plain.push_back({lambda, row, col, ParityFlag::plain,
                                 block.lowered[static_cast<std::size_t>(a)] *
                                     block.lowered[static_cast<std::size_t>(b)].adjoint()});
            }
        }
    }
    return with_gamma1(std::move(plain), copy_parity(cs, 1));
}

EmergentFermionReport gauss_t3_emergent_fermions(int n) {
    CopySpace cs(n, 3);
    const SpinOperators ops = gauss_t3_operators(n);
    const ComplexSparseOperator id = ComplexSparseOperator::identity(cs.dim());
    std::vector<ComplexSparseOperator> f, fdag, c3;
    for (int mu = 1; mu <= 2 * n; mu++) {
        ComplexSparseOperator c1 = dressed_majorana(cs, mu, 1);
        ComplexSparseOperator c2 = dressed_majorana(cs, mu, 2);
        f.push_back(Complex(0.5) * (c1 + kI * c2));
        fdag.push_back(Complex(0.5) * (c1 - kI * c2));
        c3.push_back(dressed_majorana(cs, mu, 3));
    }
    EmergentFermionReport report;
    for (std::size_t a = 0; a < f.size(); a++) {
        for (std::size_t b = 0; b < f.size(); b++) {
            ComplexSparseOperator expected = a == b ? id : ComplexSparseOperator::zero(cs.dim());
            report.anticommutation_residual =
                std::max({report.anticommutation_residual, frobenius_distance(anticommutator(f[a], fdag[b]), expected),
                          anticommutator(f[a], f[b]).frobenius_norm()});
        }
    }
    ComplexSparseOperator number_f(cs.dim());
    ComplexSparseOperator raise(cs.dim());
    ComplexSparseOperator lower(cs.dim());
    ComplexSparseOperator vacuum = id;
    for (std::size_t a = 0; a < f.size(); a++) {
        number_f += fdag[a] * f[a];
        raise += f[a] * c3[a];
        lower -= fdag[a] * c3[a];
        vacuum = vacuum * (f[a] * fdag[a]);
    }
    report.number_relation_residual = frobenius_distance(ops.j_z, Complex(n) * id - number_f);
    report.ladder_residual = std::max(frobenius_distance(ops.j_plus, raise), frobenius_distance(ops.j_minus, lower));
    report.vacuum_projector_residual =
        frobenius_distance(vacuum, lagrange_projector(ops.j_z, integer_nodes(-n, n), n));
    report.vacuum_projector = vacuum;
    return report;
}

T4Generators gauss_t4_generators(int n) {
    CopySpace cs(n, 4);
    auto q = [&](int a, int b) { return qtilde_antisymmetric(cs, a, b); };
    const Complex half_i(0.0, -0.5);
    const ComplexSparseOperator a_ops[3] = {q(2, 3), q(3, 1), q(1, 2)};
    const ComplexSparseOperator b_ops[3] = {q(1, 4), q(2, 4), q(3, 4)};
    T4Generators g;
    for (int i = 0; i < 3; i++) {
        g.j_plus_sector.push_back(half_i * (a_ops[i] + b_ops[i]));
        g.j_minus_sector.push_back(half_i * (a_ops[i] - b_ops[i]));
    }
    g.raise_plus = g.j_plus_sector[0] + kI * g.j_plus_sector[1];
    g.lower_plus = g.j_plus_sector[0] - kI * g.j_plus_sector[1];
    g.raise_minus = g.j_minus_sector[0] + kI * g.j_minus_sector[1];
    g.lower_minus = g.j_minus_sector[0] - kI * g.j_minus_sector[1];
    g.casimir_plus = ComplexSparseOperator(cs.dim());
    g.casimir_minus = ComplexSparseOperator(cs.dim());
    for (int i = 0; i < 3; i++) {
        g.casimir_plus += g.j_plus_sector[i] * g.j_plus_sector[i];
        g.casimir_minus += g.j_minus_sector[i] * g.j_minus_sector[i];
    }
    for (const auto* sector : {&g.j_plus_sector, &g.j_minus_sector}) {
        for (int i = 0; i < 3; i++) {
            int j = (i + 1) % 3;
            int k = (i + 2) % 3;
            g.su2_bracket_residual =
                std::max(g.su2_bracket_residual,
                         frobenius_distance(commutator((*sector)[i], (*sector)[j]), kI * (*sector)[k]));
        }
    }
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            g.cross_commutator_residual = std::max(
                g.cross_commutator_residual, commutator(g.j_plus_sector[i], g.j_minus_sector[j]).frobenius_norm());
        }
    }
    return g;
}

std::vector<CommutantBasisElement> gauss_t4_basis(int n) {
    CopySpace cs(n, 4);
    const T4Generators g = gauss_t4_generators(n);
    const std::vector<double> casimir = casimir_nodes(2 * n);
    const std::vector<double> jz_nodes = half_nodes(-2 * n, 2 * n);
    check_spectrum(g.casimir_plus, casimir, "J^2_+");
    check_spectrum(g.casimir_minus, casimir, "J^2_-");
    check_spectrum(g.j_plus_sector[2], jz_nodes, "J_3^+");
    check_spectrum(g.j_minus_sector[2], jz_nodes, "J_3^-");

    std::vector<CommutantBasisElement> plain;
    for (const Weight& lambda : enumerate_weights(GroupKind::gauss, 4, n)) {
        const int two_jp = lambda[0] + lambda[1];
        const int two_jm = lambda[0] - lambda[1];
        const double jp = 0.5 * two_jp;
        const double jm = 0.5 * two_jm;
        ComplexSparseOperator hw = lagrange_projector(g.casimir_plus, casimir, jp * (jp + 1.0)) *
                                   lagrange_projector(g.casimir_minus, casimir, jm * (jm + 1.0)) *
                                   lagrange_projector(g.j_plus_sector[2], jz_nodes, jp) *
                                   lagrange_projector(g.j_minus_sector[2], jz_nodes, jm);
        // lowered[a+][a-] = (J_-^+)^{a+} (J_-^-)^{a-} P^hw, normalized.
        std::vector<std::vector<ComplexSparseOperator>> lowered;
        ComplexSparseOperator outer = hw;
        for (int ap = 0; ap <= two_jp; ap++) {
            if (ap > 0) {
                outer = g.lower_plus * outer;
            }
            std::vector<ComplexSparseOperator> row;
            ComplexSparseOperator inner = outer;
            for (int am = 0; am <= two_jm; am++) {
                if (am > 0) {
                    inner = g.lower_minus * inner;
                }
                double norm = std::sqrt(lowering_norm_squared(ap, two_jp) * lowering_norm_squared(am, two_jm));
                row.push_back(inner * Complex(1.0 / norm));
            }
            lowered.push_back(std::move(row));
        }
        std::vector<std::pair<int, int>> labels;
        for (int ap = 0; ap <= two_jp; ap++) {
            for (int am = 0; am <= two_jm; am++) {
                labels.emplace_back(ap, am);
            }
        }
        for (auto [ap, am] : labels) {
            GTPattern row{{lambda, {two_jp - 2 * ap, two_jm - 2 * am}}};
            for (auto [bp, bm] : labels) {
                GTPattern col{{lambda, {two_jp - 2 * bp, two_jm - 2 * bm}}};
                plain.push_back({lambda, row, col, ParityFlag::plain,
                                 lowered[static_cast<std::size_t>(ap)][static_cast<std::size_t>(am)] *
                                     lowered[static_cast<std::size_t>(bp)][static_cast<std::size_t>(bm)].adjoint()});
            }
        }
    }
    return with_gamma1(std::move(plain), copy_parity(cs, 1));
}

std::vector<CommutantBasisElement> commutant_basis(GroupKind group, int t, int n) {
    if (group == GroupKind::pp) {
        switch (t) {
            case 1:
                return pp_t1_basis(n);
            case 2:
                return pp_t2_basis(n);
            default:
                break;
        }
    } else {
        switch (t) {
            case 1:
                return gauss_t1_basis(n);
            case 2:
                return gauss_t2_basis(n);
            case 3:
                return gauss_t3_basis(n);
            case 4:
                return gauss_t4_basis(n);
            default:
                break;
        }
    }
    throw DomainError("explicit bases exist for pp t <= 2 and gauss t <= 4, got t=" + std::to_string(t));
}

MatrixUnitReport verify_matrix_units(const std::vector<CommutantBasisElement>& basis) {
    std::vector<const CommutantBasisElement*> plain;
    std::map<std::tuple<Weight, GTPattern, GTPattern>, const CommutantBasisElement*> index;
    for (const auto& e : basis) {
        if (e.parity == ParityFlag::plain) {
            plain.push_back(&e);
            index[{e.lambda, e.row, e.col}] = &e;
        }
    }
    MatrixUnitReport report;
    std::map<Weight, double> constants;
    for (const auto* x : plain) {
        if (x->row == x->col && !constants.count(x->lambda)) {
            double c = hs_inner(x->op, x->op).real();
            constants[x->lambda] = c;
            report.block_constants.push_back(c);
        }
    }
    for (const auto* x : plain) {
        for (const auto* y : plain) {
            ComplexSparseOperator product = x->op * y->op;
            Complex overlap = hs_inner(x->op, y->op);
            if (x->lambda == y->lambda) {
                if (x->col == y->row) {
                    report.product_residual =
                        std::max(report.product_residual, frobenius_distance(product, index.at({x->lambda, x->row, y->col})->op));
                } else {
                    report.product_residual = std::max(report.product_residual, product.frobenius_norm());
                }
                double expected = (x->row == y->row && x->col == y->col) ? constants.at(x->lambda) : 0.0;
                report.orthogonality_residual = std::max(report.orthogonality_residual, std::abs(overlap - expected));
            } else {
                report.cross_block_residual =
                    std::max({report.cross_block_residual, product.frobenius_norm(), std::abs(overlap)});
            }
        }
    }
    return report;
}

int gram_rank(const std::vector<CommutantBasisElement>& basis) {
    const auto size = static_cast<Eigen::Index>(basis.size());
    if (size == 0) {
        return 0;
    }
    DenseMatrix gram(size, size);
    for (Eigen::Index a = 0; a < size; a++) {
        for (Eigen::Index b = a; b < size; b++) {
            Complex v = hs_inner(basis[static_cast<std::size_t>(a)].op, basis[static_cast<std::size_t>(b)].op);
            gram(a, b) = v;
            gram(b, a) = std::conj(v);
        }
    }
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(gram, Eigen::EigenvaluesOnly);
    const auto& values = solver.eigenvalues();
    const double threshold = 1e-9 * values.cwiseAbs().maxCoeff();
    int rank = 0;
    for (Eigen::Index k = 0; k < values.size(); k++) {
        rank += values[k] > threshold;
    }
    return rank;
}

}  // namespace fermicomm
