# Copyright 2026 The fermicomm Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Commutants of fermionic Gaussian unitaries."""

from fermicomm._core import (
    ConsistencyError,
    DomainError,
    ResourceError,
    RetryError,
    VerificationFailure,
    __version__,
    avg_gauss_s4_exact,
    avg_pp_s4_exact,
    baseline_s4,
    brute_force_commutant_dim,
    dim_commutant,
    m_lin,
    mc_average_s4,
    p_ki_spectrum,
    plucker_rank,
    run_cli,
    s4,
    spin_sector_probs,
    state_from_spec,
    zonal_ck,
)

__all__ = [
    "ConsistencyError",
    "DomainError",
    "ResourceError",
    "RetryError",
    "VerificationFailure",
    "__version__",
    "avg_gauss_s4_exact",
    "avg_pp_s4_exact",
    "baseline_s4",
    "brute_force_commutant_dim",
    "dim_commutant",
    "m_lin",
    "mc_average_s4",
    "p_ki_spectrum",
    "plucker_rank",
    "run_cli",
    "s4",
    "spin_sector_probs",
    "state_from_spec",
    "zonal_ck",
]
