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


#include "fermicomm/magic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

#include "fermicomm/clifford.hpp"
#include "fermicomm/errors.hpp"
#include "fermicomm/gaussian_group.hpp"
#include "fermicomm/rng.hpp"

namespace fermicomm {

namespace {

constexpr int kMaxFastModes = 14;
constexpr int kMaxDirectModes = 6;
constexpr int kMaxReplicaModes = 3;
constexpr std::uint64_t kMinSamples = 100;

void check_state(const StateVector& psi, int n, int max_modes, const std::string& what) {
    check_mode_count(n);
    if (n > max_modes) {
        throw ResourceError(what + " supports n <= " + std::to_string(max_modes) + ", got " + std::to_string(n));
    }
    if (psi.dim() != (std::size_t{1} << n)) {
        throw DomainError("state has dimension " + std::to_string(psi.dim()) + ", expected 2^" + std::to_string(n));
    }
    if (!psi.is_normalized(1e-10)) {
        throw DomainError("state is not normalized (norm " + std::to_string(psi.norm()) + ")");
    }
}

void walsh_hadamard(std::vector<Complex>& f) {
    for (std::size_t h = 1; h < f.size(); h <<= 1) {
        for (std::size_t i = 0; i < f.size(); i += h << 1) {
            for (std::size_t j = i; j < i + h; j++) {
                Complex a = f[j];
                Complex b = f[j + h];
                f[j] = a + b;
                f[j + h] = a - b;
            }
        }
    }
}

void parallel_for(std::uint64_t count, int threads, const std::function<void(std::uint64_t)>& body) {
    if (threads <= 0) {
        threads = static_cast<int>(std::clamp(std::thread::hardware_concurrency(), 1u, 8u));
    }
    threads = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), count));
    if (threads <= 1) {
        for (std::uint64_t i = 0; i < count; i++) {
            body(i);
        }
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; w++) {
        pool.emplace_back([&, w] {
            try {
                for (std::uint64_t i = static_cast<std::uint64_t>(w); i < count; i += static_cast<std::uint64_t>(threads)) {
                    body(i);
                }
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

void check_samples(std::uint64_t samples) {
    if (samples < kMinSamples) {
        throw DomainError("need at least " + std::to_string(kMinSamples) + " samples, got " + std::to_string(samples));
    }
}

}  // namespace

double s4(const StateVector& psi, int n) {
    check_state(psi, n, kMaxFastModes, "s4");
    const std::size_t d = psi.dim();
    std::vector<Complex> f(d);
    double total = 0.0;
    for (std::size_t a = 0; a < d; a++) {
        for (std::size_t x = 0; x < d; x++) {
            f[x] = std::conj(psi[x ^ a]) * psi[x];
        }
        walsh_hadamard(f);
        for (const Complex& v : f) {
            double m = std::norm(v);
            total += m * m;
        }
    }
    return total / static_cast<double>(d * d);
}

double s4_direct(const StateVector& psi, int n) {
    check_state(psi, n, kMaxDirectModes, "s4_direct");
    static const char kLetters[4] = {'I', 'X', 'Y', 'Z'};
    const std::size_t strings = std::size_t{1} << (2 * n);
    double total = 0.0;
    std::string letters(static_cast<std::size_t>(n), 'I');
    for (std::size_t code = 0; code < strings; code++) {
        std::size_t rest = code;
        for (int q = 0; q < n; q++) {
            letters[static_cast<std::size_t>(q)] = kLetters[rest & 3u];
            rest >>= 2;
        }
        double e = psi.expectation(pauli_string(letters)).real();
        total += e * e * e * e;
    }
    return total / static_cast<double>(strings);
}

double s4_replica(const StateVector& psi, int n) {
    check_state(psi, n, kMaxReplicaModes, "s4_replica");
    ComplexSparseOperator q(16);
    for (const char* s : {"IIII", "XXXX", "YYYY", "ZZZZ"}) {
        q += pauli_string(s);
    }
    std::vector<ComplexSparseOperator> factors(static_cast<std::size_t>(n), q);
    const ComplexSparseOperator big_q = tensor(std::span<const ComplexSparseOperator>(factors));

    // psi^{(x)4} is replica-major; q^{(x)n} wants the four replicas of each qubit adjacent.
    const DenseVector replicas = psi.tensor_power(4).amplitudes();
    const int bits = 4 * n;
    DenseVector regrouped(replicas.size());
    for (Eigen::Index idx = 0; idx < replicas.size(); idx++) {
        std::size_t target = 0;
        for (int rep = 0; rep < 4; rep++) {
            for (int qb = 0; qb < n; qb++) {
                std::size_t bit = (static_cast<std::size_t>(idx) >> (bits - 1 - (rep * n + qb))) & 1u;
                target |= bit << (bits - 1 - (qb * 4 + rep));
            }
        }
        regrouped[static_cast<Eigen::Index>(target)] = replicas[idx];
    }
    return regrouped.dot(big_q * regrouped).real() / std::ldexp(1.0, 2 * n);
}

double m_lin(const StateVector& psi, int n) {
    return 1.0 - std::ldexp(1.0, n) * s4(psi, n);
}

ExactInteger catalan(int m) {
    if (m < 0) {
        throw DomainError("Catalan index must be nonnegative");
    }
    return binomial(2 * m, m) / (m + 1);
}

ExactRational avg_gauss_s4_exact(int n) {
    if (n < 1) {
        throw DomainError("avg_gauss_s4_exact needs n >= 1");
    }
    return ExactRational(ExactInteger(1), catalan(n + 1));
}

ExactRational generalized_pochhammer(const ExactRational& a, const Partition& lambda) {
    ExactRational out = 1;
    for (std::size_t j = 0; j < lambda.rows(); j++) {
        out *= rising_factorial(a - ExactRational(static_cast<int>(j), 2), lambda[j]);
    }
    return out;
}

std::vector<ZonalTerm> zonal_terms(int k) {
    if (k < 0) {
        throw DomainError("zonal order must be nonnegative");
    }
    std::vector<ZonalTerm> out;
    for (const Partition& lambda : partitions_of(k, 3)) {
        ZonalTerm term;
        term.lambda = lambda;
        term.hook_product = lambda.scaled(2).hook_product();
        term.pochhammer_top = generalized_pochhammer(ExactRational(3, 2), lambda);
        term.pochhammer_bottom = generalized_pochhammer(ExactRational(3), lambda);
        out.push_back(std::move(term));
    }
    return out;
}

ExactRational zonal_ck(int k) {
    ExactRational total = 0;
    const ExactInteger numerator = factorial(2 * k);
    for (const ZonalTerm& term : zonal_terms(k)) {
        total += ExactRational(numerator, term.hook_product) * term.pochhammer_top / term.pochhammer_bottom;
    }
    return total * ExactRational(pow_int(4, static_cast<unsigned>(k)));
}

ExactInteger hook_content_dim(int n, int r) {
    if (r < 0 || r > n) {
        throw DomainError("hook_content_dim needs 0 <= r <= n, got n=" + std::to_string(n) + ", r=" + std::to_string(r));
    }
    ExactRational out = 1;
    for (int i = 1; i <= r; i++) {
        for (int j = 1; j <= 4; j++) {
            out *= ExactRational(ExactInteger(n + j - i), ExactInteger(r + 5 - i - j));
        }
    }
    return require_integer(out, "hook_content_dim");
}

ExactRational avg_pp_s4_exact(int n, int r) {
    if (n < 1 || r < 0 || r > n) {
        throw DomainError("avg_pp_s4_exact needs n >= 1 and 0 <= r <= n");
    }
    ExactRational total = 0;
    for (int k = 0; k <= std::min(r, n - r); k++) {
        ExactInteger ways = factorial(n) / (factorial(n - r - k) * factorial(2 * k) * factorial(r - k));
        total += ExactRational(ways) * zonal_ck(k);
    }
    return total / ExactRational(pow_int(2, static_cast<unsigned>(n)) * hook_content_dim(n, r));
}

ExactRational baseline_s4(int n, Baseline kind) {
    if (n < 1) {
        throw DomainError("baseline_s4 needs n >= 1");
    }
    if (kind == Baseline::haar) {
        // 1/(2^{n-2}(2^n+3)) = 4/(2^n (2^n+3)).
        ExactInteger d = pow_int(2, static_cast<unsigned>(n));
        return ExactRational(ExactInteger(4), d * (d + 3));
    }
    return ExactRational(pow_int(2, static_cast<unsigned>(n)), pow_int(5, static_cast<unsigned>(n)));
}

Ensemble Ensemble::parse(const std::string& text) {
    Ensemble e;
    if (text == "gauss") {
        e.kind = Kind::gauss;
    } else if (text == "gauss-odd") {
        e.kind = Kind::gauss_odd;
    } else if (text == "haar") {
        e.kind = Kind::haar;
    } else if (text == "product") {
        e.kind = Kind::product;
    } else if (text.rfind("pp:", 0) == 0) {
        e.kind = Kind::pp;
        const std::string digits = text.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 3) {
            throw DomainError("pp ensemble needs a particle number, as in pp:2");
        }
        e.r = std::stoi(digits);
    } else {
        throw DomainError("unknown ensemble '" + text + "' (expected gauss, gauss-odd, pp:R, haar or product)");
    }
    return e;
}

std::string Ensemble::to_string() const {
    switch (kind) {
        case Kind::gauss:
            return "gauss";
        case Kind::gauss_odd:
            return "gauss-odd";
        case Kind::pp:
            return "pp:" + std::to_string(r);
        case Kind::haar:
            return "haar";
        case Kind::product:
            return "product";
    }
    return "";
}

StateVector sample_ensemble_state(int n, const Ensemble& ensemble, std::uint64_t seed, std::uint64_t index) {
    check_mode_count(n);
    const std::size_t d = std::size_t{1} << n;
    switch (ensemble.kind) {
        case Ensemble::Kind::gauss:
            return StateVector(DenseVector(sample_gaussian_unitary(n, seed, index).col(0)));
        case Ensemble::Kind::gauss_odd: {
            DenseVector flipped = majorana(n, 1) * StateVector::basis(d, 0).amplitudes();
            return StateVector(DenseVector(sample_gaussian_unitary(n, seed, index) * flipped));
        }
        case Ensemble::Kind::pp: {
            if (ensemble.r < 0 || ensemble.r > n) {
                throw DomainError("particle number " + std::to_string(ensemble.r) + " out of range [0, " +
                                  std::to_string(n) + "]");
            }
            std::vector<int> occupied;
            for (int p = 1; p <= ensemble.r; p++) {
                occupied.push_back(p);
            }
            StateVector reference = slater_state(n, occupied);
            return StateVector(DenseVector(sample_pp_gaussian_unitary(n, seed, index) * reference.amplitudes()));
        }
        case Ensemble::Kind::haar: {
            Philox rng(seed, index);
            return sample_haar_state(n, rng);
        }
        case Ensemble::Kind::product: {
            Philox rng(seed, index);
            StateVector out = sample_haar_state(1, rng);
            for (int q = 1; q < n; q++) {
                out = tensor(out, sample_haar_state(1, rng));
            }
            return out;
        }
    }
    throw DomainError("unknown ensemble");
}

MCEstimate summarize(const std::vector<double>& values, std::uint64_t seed) {
    MCEstimate est;
    est.samples = values.size();
    est.seed = seed;
    if (values.empty()) {
        return est;
    }
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    est.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double sq = 0.0;
        for (double v : values) {
            sq += (v - est.mean) * (v - est.mean);
        }
        double variance = sq / static_cast<double>(values.size() - 1);
        est.std_error = std::sqrt(variance / static_cast<double>(values.size()));
    }
    return est;
}

MCEstimate mc_average_s4(int n, const Ensemble& ensemble, std::uint64_t samples, std::uint64_t seed, int threads) {
    check_mode_count(n);
    check_samples(samples);
    if (n > kMaxFastModes) {
        throw ResourceError("mc_average_s4 supports n <= " + std::to_string(kMaxFastModes));
    }
    std::vector<double> values(samples);
    parallel_for(samples, threads, [&](std::uint64_t i) {
        values[i] = s4(sample_ensemble_state(n, ensemble, seed, i), n);
    });
    return summarize(values, seed);
}

MCEstimate mc_zonal_ck(int k, std::uint64_t samples, std::uint64_t seed, int threads) {
    if (k < 0) {
        throw DomainError("zonal order must be nonnegative");
    }
    check_samples(samples);
    const double scale = std::ldexp(1.0, 2 * k);
    std::vector<double> values(samples);
    parallel_for(samples, threads, [&](std::uint64_t i) {
        const Eigen::MatrixXd o = sample_orthogonal(3, seed, i).matrix();
        double x = o(0, 0) + o(1, 1) + o(2, 2);
        values[i] = scale * std::pow(x, 2 * k);
    });
    return summarize(values, seed);
}

}  // namespace fermicomm
