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

#ifndef FERMICOMM_ERRORS_HPP
#define FERMICOMM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fermicomm {

/// Bad index, bad shape, or an input outside an operation's domain.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A configured size cap (qubits, operator-space dimension) would be exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sampled input landed too close to a branch cut; the caller should resample.
struct RetryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two routes that must agree exactly did not.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A numerical identity check exceeded its tolerance.
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fermicomm

#endif
