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

#include "fermicomm/multicopy.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "fermicomm/clifford.hpp"
#include "fermicomm/errors.hpp"

namespace fermicomm {

namespace {

constexpr int kDefaultMaxQubits = 22;

void check_copy(const CopySpace& cs, int j) {
    if (j < 1 || j > cs.t()) {
        throw DomainError("copy index " + std::to_string(j) + " out of range [1, " + std::to_string(cs.t()) + "]");
    }
}

ComplexSparseOperator embed(const CopySpace& cs, int j, const ComplexSparseOperator& op, bool dress) {
    std::vector<ComplexSparseOperator> factors;
    factors.reserve(static_cast<std::size_t>(cs.t()));
    const ComplexSparseOperator id = ComplexSparseOperator::identity(cs.copy_dim());
    const ComplexSparseOperator gamma = dress ? parity_op(cs.n()) : id;
    for (int copy = 1; copy <= cs.t(); copy++) {
        if (copy < j) {
            factors.push_back(gamma);
        } else if (copy == j) {
            factors.push_back(op);
        } else {
            factors.push_back(id);
        }
    }
    return tensor(std::span<const ComplexSparseOperator>(factors));
}

enum class GeneratorKind { omega, qtilde };
using CacheKey = std::tuple<int, int, GeneratorKind, int, int>;

class GeneratorCache {
   public:
    template <typename Build>
    ComplexSparseOperator get(const CacheKey& key, Build build) {
        {
            std::shared_lock lock(mutex_);
            auto it = entries_.find(key);
            if (it != entries_.end()) {
                return *it->second;
            }
        }
        auto value = std::make_shared<const ComplexSparseOperator>(build());
        std::unique_lock lock(mutex_);
        auto [it, inserted] = entries_.emplace(key, value);
        return *it->second;
    }

    void clear() {
        std::unique_lock lock(mutex_);
        entries_.clear();
    }

   private:
    std::shared_mutex mutex_;
    std::map<CacheKey, std::shared_ptr<const ComplexSparseOperator>> entries_;
};

GeneratorCache& cache() {
    static GeneratorCache instance;
    return instance;
}

void accumulate_max(double& worst, const ComplexSparseOperator& a, const ComplexSparseOperator& b) {
    worst = std::max(worst, frobenius_distance(a, b));
}

}  // namespace

int max_total_qubits() {
    if (const char* env = std::getenv("FERMICOMM_MAX_QUBITS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 62) {
            return static_cast<int>(v);
        }
        throw DomainError(std::string("FERMICOMM_MAX_QUBITS must be an integer in [1, 62], got '") + env + "'");
    }
    return kDefaultMaxQubits;
}

CopySpace::CopySpace(int n, int t) : n_(n), t_(t) {
    if (n < 1 || t < 1) {
        throw DomainError("copy space needs n >= 1 and t >= 1, got n=" + std::to_string(n) +
                          ", t=" + std::to_string(t));
    }
    const int cap = max_total_qubits();
    if (n * t > cap) {
        throw ResourceError("n*t = " + std::to_string(n * t) + " exceeds the qubit cap " + std::to_string(cap) +
                            " (set FERMICOMM_MAX_QUBITS to raise it)");
    }
}

ComplexSparseOperator dressed_majorana(const CopySpace& cs, int mu, int j) {
    check_copy(cs, j);
    return embed(cs, j, majorana(cs.n(), mu), true);
}

ComplexSparseOperator dressed_ladder(const CopySpace& cs, int p, int j, bool dagger) {
    check_copy(cs, j);
    return embed(cs, j, ladder(cs.n(), p, dagger), true);
}

ComplexSparseOperator copy_parity(const CopySpace& cs, int j) {
    check_copy(cs, j);
    return embed(cs, j, parity_op(cs.n()), false);
}

ComplexSparseOperator omega(const CopySpace& cs, int j, int k) {
    check_copy(cs, j);
    check_copy(cs, k);
    return cache().get({cs.n(), cs.t(), GeneratorKind::omega, j, k}, [&] {
        ComplexSparseOperator out(cs.dim());
        for (int p = 1; p <= cs.n(); p++) {
            out += dressed_ladder(cs, p, j, true) * dressed_ladder(cs, p, k, false);
        }
        return out;
    });
}

ComplexSparseOperator qtilde(const CopySpace& cs, int j, int k) {
    check_copy(cs, j);
    check_copy(cs, k);
    if (j >= k) {
        throw DomainError("qtilde needs j < k, got j=" + std::to_string(j) + ", k=" + std::to_string(k));
    }
    return cache().get({cs.n(), cs.t(), GeneratorKind::qtilde, j, k}, [&] {
        ComplexSparseOperator out(cs.dim());
        for (int mu = 1; mu <= 2 * cs.n(); mu++) {
            out += dressed_majorana(cs, mu, j) * dressed_majorana(cs, mu, k);
        }
        out *= Complex(0.5);
        return out;
    });
}

ComplexSparseOperator qtilde_antisymmetric(const CopySpace& cs, int j, int k) {
    check_copy(cs, j);
    check_copy(cs, k);
    if (j == k) {
        return ComplexSparseOperator::zero(cs.dim());
    }
    return j < k ? qtilde(cs, j, k) : -qtilde(cs, k, j);
}

std::vector<ComplexSparseOperator> pp_generators(const CopySpace& cs) {
    std::vector<ComplexSparseOperator> out;
    for (int j = 1; j <= cs.t(); j++) {
        for (int k = 1; k <= cs.t(); k++) {
            out.push_back(omega(cs, j, k));
        }
    }
    return out;
}

std::vector<ComplexSparseOperator> gauss_generators(const CopySpace& cs) {
    std::vector<ComplexSparseOperator> out;
    for (int j = 1; j <= cs.t(); j++) {
        for (int k = j + 1; k <= cs.t(); k++) {
            out.push_back(qtilde(cs, j, k));
        }
    }
    out.push_back(copy_parity(cs, 1));
    return out;
}

double pp_lie_closure_residual(const CopySpace& cs) {
    const int t = cs.t();
    const ComplexSparseOperator zero = ComplexSparseOperator::zero(cs.dim());
    double worst = 0.0;
    for (int j = 1; j <= t; j++) {
        for (int k = 1; k <= t; k++) {
            for (int jp = 1; jp <= t; jp++) {
                for (int kp = 1; kp <= t; kp++) {
                    ComplexSparseOperator expected = zero;
                    if (k == jp) {
                        expected += omega(cs, j, kp);
                    }
                    if (j == kp) {
                        expected -= omega(cs, jp, k);
                    }
                    accumulate_max(worst, commutator(omega(cs, j, k), omega(cs, jp, kp)), expected);
                }
            }
        }
    }
    return worst;
}

double gauss_lie_closure_residual(const CopySpace& cs) {
    const int t = cs.t();
    const ComplexSparseOperator zero = ComplexSparseOperator::zero(cs.dim());
    auto q = [&](int a, int b) { return qtilde_antisymmetric(cs, a, b); };
    double worst = 0.0;
    for (int j = 1; j <= t; j++) {
        for (int k = 1; k <= t; k++) {
            if (j == k) {
                continue;
            }
            for (int jp = 1; jp <= t; jp++) {
                for (int kp = 1; kp <= t; kp++) {
                    if (jp == kp) {
                        continue;
                    }
                    ComplexSparseOperator expected = zero;
                    if (k == jp) {
                        expected += q(j, kp);
                    }
                    if (j == kp) {
                        expected += q(k, jp);
                    }
                    if (k == kp) {
                        expected -= q(j, jp);
                    }
                    if (j == jp) {
                        expected -= q(k, kp);
                    }
                    accumulate_max(worst, commutator(q(j, k), q(jp, kp)), expected);
                }
            }
        }
    }
    return worst;
}

void clear_generator_cache() {
    cache().clear();
}

DenseMatrix apply_tensor_power(const DenseMatrix& r, int t, const DenseMatrix& x) {
    const Eigen::Index d = r.rows();
    Eigen::Index total = 1;
    for (int leg = 0; leg < t; leg++) {
        total *= d;
    }
    if (r.cols() != d || x.rows() != total) {
        throw DomainError("apply_tensor_power: dimension mismatch");
    }
    DenseMatrix out = x;
    const DenseMatrix rt = r.transpose();
    const Eigen::Index size = out.size();
    Complex* data = out.data();
    Eigen::Index stride = total;
    for (int leg = 1; leg <= t; leg++) {
        stride /= d;
        // Column-major storage: within each contiguous block of d*stride entries,
        // entry (inner, a) of an (stride x d) view holds leg digit a.
        const Eigen::Index block = d * stride;
        for (Eigen::Index start = 0; start < size; start += block) {
            Eigen::Map<DenseMatrix> view(data + start, stride, d);
            view = (view * rt).eval();
        }
    }
    return out;
}

DenseMatrix conjugate_tensor_power(const DenseMatrix& r, int t, const DenseMatrix& x) {
    DenseMatrix left = apply_tensor_power(r, t, x);
    return apply_tensor_power(r, t, left.adjoint()).adjoint();
}

double commutation_residual(const DenseMatrix& g, const DenseMatrix& r, int t) {
    double norm = g.norm();
    if (norm == 0.0) {
        return 0.0;
    }
    return (conjugate_tensor_power(r, t, g) - g).norm() / norm;
}

double commutation_residual(const ComplexSparseOperator& g, const DenseMatrix& r, int t) {
    return commutation_residual(g.to_dense(), r, t);
}

}  // namespace fermicomm
