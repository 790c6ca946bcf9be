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

#ifndef FERMICOMM_RNG_HPP
#define FERMICOMM_RNG_HPP

#include <array>
#include <cstdint>
#include <limits>

namespace fermicomm {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// A stream is fully determined by (seed, substream); sample i of a Monte
/// Carlo run draws from substream i, so samples can be generated in any
/// order or in parallel with identical results. Normal variates use an
/// in-house Box-Muller transform so output does not depend on the standard
/// library's distribution implementations.
class Philox {
   public:
    using result_type = std::uint32_t;

    Philox(std::uint64_t seed, std::uint64_t substream);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()();
    std::uint64_t next_u64();
    /// Uniform on the open interval (0, 1).
    double uniform();
    double normal();

   private:
    void refill();

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> counter_;
    std::array<std::uint32_t, 4> block_{};
    int used_ = 4;
    bool has_spare_normal_ = false;
    double spare_normal_ = 0.0;
};

}  // namespace fermicomm

#endif
