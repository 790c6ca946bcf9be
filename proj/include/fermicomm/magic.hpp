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


#ifndef FERMICOMM_MAGIC_HPP
#define FERMICOMM_MAGIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fermicomm/exact.hpp"
#include "fermicomm/partition.hpp"
#include "fermicomm/sparse_operator.hpp"

// Stabilizer entropy S_4 and its averages over free-fermion ensembles.

namespace fermicomm {

/// S_4 = 4^{-n} sum_P <P>^4 via Walsh-Hadamard transforms of psi*(x ^ a) psi(x).
double s4(const StateVector& psi, int n);
/// S_4 by enumerating all 4^n Pauli strings. n <= 6.
double s4_direct(const StateVector& psi, int n);
/// S_4 = 4^{-n} <psi^{(x)4}| q^{(x)n} |psi^{(x)4}> with q = I^4 + X^4 + Y^4 + Z^4. n <= 3.
double s4_replica(const StateVector& psi, int n);
/// 1 - 2^n S_4.
double m_lin(const StateVector& psi, int n);

ExactInteger catalan(int m);
/// 1 / Cat_{n+1}.
ExactRational avg_gauss_s4_exact(int n);

struct ZonalTerm {
    Partition lambda;
    ExactInteger hook_product;        ///< H(2 lambda)
    ExactRational pochhammer_top;     ///< (3/2)_lambda
    ExactRational pochhammer_bottom;  ///< (3)_lambda
};

/// (a)_lambda = prod_j (a - (j-1)/2)_{lambda_j}.
ExactRational generalized_pochhammer(const ExactRational& a, const Partition& lambda);
/// One term per partition of k with at most three parts, reverse-lexicographic.
std::vector<ZonalTerm> zonal_terms(int k);
/// c_k = 4^k sum_lambda (2k)!/H(2 lambda) (3/2)_lambda/(3)_lambda.
ExactRational zonal_ck(int k);
/// Dimension of the U(n) irrep (4^r): prod_{i<=r} prod_{j<=4} (n+j-i)/(r+5-i-j).
ExactInteger hook_content_dim(int n, int r);
/// Average of S_4 over R_r(U)|r> with U Haar on U(n).
ExactRational avg_pp_s4_exact(int n, int r);

enum class Baseline { haar, product };
/// haar: 1/(2^{n-2}(2^n+3)); product: (2/5)^n.
ExactRational baseline_s4(int n, Baseline kind);

struct Ensemble {
    enum class Kind { gauss, gauss_odd, pp, haar, product };
    Kind kind = Kind::gauss;
    int r = 0;  ///< particle number for pp

    /// "gauss", "gauss-odd", "pp:R", "haar" or "product". Throws DomainError otherwise.
    static Ensemble parse(const std::string& text);
    std::string to_string() const;
};

struct MCEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Sample i draws its state from substream i of `seed`, so results do not depend on threading.
StateVector sample_ensemble_state(int n, const Ensemble& ensemble, std::uint64_t seed, std::uint64_t index);

/// Mean and standard error of S_4 over `samples` ensemble draws. samples >= 100.
MCEstimate mc_average_s4(int n, const Ensemble& ensemble, std::uint64_t samples, std::uint64_t seed,
                         int threads = 0);

/// Estimate of c_k = 4^k E_{O ~ SO(6)} tr(P O)^{2k}, P = diag(1,1,1,0,0,0).
MCEstimate mc_zonal_ck(int k, std::uint64_t samples, std::uint64_t seed, int threads = 0);

/// Mean and unbiased standard error of a sample list.
MCEstimate summarize(const std::vector<double>& values, std::uint64_t seed);

}  // namespace fermicomm

#endif
