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


#include "fermicomm/partition.hpp"

#include <algorithm>
#include <functional>

#include "fermicomm/errors.hpp"

namespace fermicomm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); i++) {
        if (parts_[i] < 0) {
            throw DomainError("partition parts must be nonnegative: " + to_string());
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw DomainError("partition parts must be weakly decreasing: " + to_string());
        }
    }
}

int Partition::size() const {
    int total = 0;
    for (int p : parts_) {
        total += p;
    }
    return total;
}

int Partition::length() const {
    int count = 0;
    for (int p : parts_) {
        count += p > 0;
    }
    return count;
}

Partition Partition::trimmed() const {
    std::vector<int> out(parts_.begin(), parts_.begin() + length());
    return Partition(std::move(out));
}

Partition Partition::transpose() const {
    std::vector<int> out(static_cast<std::size_t>((*this)[0]), 0);
    for (int p : parts_) {
        for (int c = 0; c < p; c++) {
            out[static_cast<std::size_t>(c)]++;
        }
    }
    return Partition(std::move(out));
}

Partition Partition::scaled(int k) const {
    if (k < 0) {
        throw DomainError("partition scale factor must be nonnegative");
    }
    std::vector<int> out = parts_;
    for (int& p : out) {
        p *= k;
    }
    return Partition(std::move(out));
}

ExactInteger Partition::hook_product() const {
    const Partition conj = transpose();
    ExactInteger out = 1;
    for (std::size_t i = 0; i < parts_.size(); i++) {
        for (int j = 0; j < parts_[i]; j++) {
            int arm = parts_[i] - j - 1;
            int leg = conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            out *= arm + leg + 1;
        }
    }
    return out;
}

bool Partition::contains(const Partition& other) const {
    std::size_t rows = std::max(parts_.size(), other.parts_.size());
    for (std::size_t i = 0; i < rows; i++) {
        if (other[i] > (*this)[i]) {
            return false;
        }
    }
    return true;
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); i++) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::vector<Partition> partitions_of(int k, int max_length) {
    if (k < 0 || max_length < 0) {
        throw DomainError("partitions_of needs k >= 0 and max_length >= 0");
    }
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> recurse = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        if (static_cast<int>(current.size()) == max_length) {
            return;
        }
        for (int part = std::min(remaining, cap); part >= 1; part--) {
            current.push_back(part);
            recurse(remaining - part, part);
            current.pop_back();
        }
    };
    recurse(k, k);
    return out;
}

std::vector<Partition> partitions_in_box(int rows, int max_part) {
    if (rows < 0 || max_part < 0) {
        throw DomainError("partitions_in_box needs nonnegative dimensions");
    }
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int)> recurse = [&](int cap) {
        if (static_cast<int>(current.size()) == rows) {
            out.emplace_back(current);
            return;
        }
        for (int part = 0; part <= cap; part++) {
            current.push_back(part);
            recurse(part);
            current.pop_back();
        }
    };
    recurse(max_part);
    return out;
}

}  // namespace fermicomm
