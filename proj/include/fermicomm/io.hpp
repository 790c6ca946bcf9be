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


#ifndef FERMICOMM_IO_HPP
#define FERMICOMM_IO_HPP

#include <string>

#include "fermicomm/sparse_operator.hpp"

// Text formats shared by the CLI and the Python module.
//
//   operator: {"dim": D, "entries": [[row, col, re, im], ...]}, 0-based, sorted by (row, col)
//   matrix:   {"rows": R, "cols": C, "data": [[re, im], ...]} in row-major order
//   state:    [[re, im], ...] or [re, ...]

namespace fermicomm {

std::string operator_dump(const ComplexSparseOperator& op);
ComplexSparseOperator operator_from_dump(const std::string& text);

std::string matrix_dump(const DenseMatrix& m);
DenseMatrix matrix_from_dump(const std::string& text);

StateVector state_from_json(const std::string& text);

/// Writes `content` to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace fermicomm

#endif
