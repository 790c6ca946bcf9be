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


#ifndef FERMICOMM_PARTITION_HPP
#define FERMICOMM_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "fermicomm/exact.hpp"

namespace fermicomm {

/// Weakly decreasing tuple of nonnegative integers. Trailing zeros are kept,
/// so (2, 0) and (2) are distinct labels; use trimmed() to compare shapes.
class Partition {
   public:
    Partition() = default;
    /// Throws DomainError unless the parts are nonnegative and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    /// Part i (0-based), zero past the end.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t rows() const { return parts_.size(); }
    int size() const;
    /// Number of nonzero parts.
    int length() const;

    Partition trimmed() const;
    Partition transpose() const;
    /// (k lambda_1, k lambda_2, ...).
    Partition scaled(int k) const;
    /// Product of all hook lengths of the Young diagram.
    ExactInteger hook_product() const;
    /// Young-diagram containment: other[i] <= this[i] for all i.
    bool contains(const Partition& other) const;

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

   private:
    std::vector<int> parts_;
};

/// Partitions of k with at most max_length parts, reverse-lexicographic.
std::vector<Partition> partitions_of(int k, int max_length);

/// Partitions with exactly `rows` entries (zero padded) and parts <= max_part,
/// lexicographic ascending.
std::vector<Partition> partitions_in_box(int rows, int max_part);

}  // namespace fermicomm

#endif
