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


#include "fermicomm/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fermicomm/errors.hpp"
#include "json.hpp"

namespace fermicomm {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed JSON: ") + e.what());
    }
}

Complex complex_from(const json& v) {
    if (v.is_number()) {
        return {v.get<double>(), 0.0};
    }
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    throw DomainError("expected a number or a [re, im] pair");
}

}  // namespace

std::string operator_dump(const ComplexSparseOperator& op) {
    json entries = json::array();
    for (const OperatorEntry& e : op.entries()) {
        entries.push_back({e.row, e.col, e.value.real() + 0.0, e.value.imag() + 0.0});
    }
    return json{{"dim", op.dim()}, {"entries", std::move(entries)}}.dump();
}

ComplexSparseOperator operator_from_dump(const std::string& text) {
    const json doc = parse(text);
    if (!doc.contains("dim") || !doc.contains("entries")) {
        throw DomainError("operator dump needs 'dim' and 'entries'");
    }
    const auto dim = doc["dim"].get<std::size_t>();
    std::vector<OperatorEntry> entries;
    for (const json& e : doc["entries"]) {
        if (!e.is_array() || e.size() != 4) {
            throw DomainError("operator entries are [row, col, re, im]");
        }
        auto row = e[0].get<std::size_t>();
        auto col = e[1].get<std::size_t>();
        if (row >= dim || col >= dim) {
            throw DomainError("operator entry outside the declared dimension");
        }
        entries.push_back({row, col, Complex(e[2].get<double>(), e[3].get<double>())});
    }
    return ComplexSparseOperator::from_entries(dim, entries);
}

std::string matrix_dump(const DenseMatrix& m) {
    json data = json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            data.push_back({m(r, c).real() + 0.0, m(r, c).imag() + 0.0});
        }
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}}.dump();
}

DenseMatrix matrix_from_dump(const std::string& text) {
    const json doc = parse(text);
    const auto rows = doc.at("rows").get<Eigen::Index>();
    const auto cols = doc.at("cols").get<Eigen::Index>();
    const json& data = doc.at("data");
    if (rows < 0 || cols < 0 || static_cast<Eigen::Index>(data.size()) != rows * cols) {
        throw DomainError("matrix dump has inconsistent shape");
    }
    DenseMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; r++) {
        for (Eigen::Index c = 0; c < cols; c++) {
            m(r, c) = complex_from(data[static_cast<std::size_t>(r * cols + c)]);
        }
    }
    return m;
}

StateVector state_from_json(const std::string& text) {
    const json doc = parse(text);
    if (!doc.is_array() || doc.empty()) {
        throw DomainError("state file must hold a non-empty amplitude list");
    }
    DenseVector amplitudes(static_cast<Eigen::Index>(doc.size()));
    for (std::size_t i = 0; i < doc.size(); i++) {
        amplitudes[static_cast<Eigen::Index>(i)] = complex_from(doc[i]);
    }
    return StateVector(std::move(amplitudes));
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw DomainError("cannot open '" + tmp + "' for writing");
        }
        out << content;
        if (!out.flush()) {
            std::remove(tmp.c_str());
            throw DomainError("failed writing '" + tmp + "'");
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw DomainError("cannot rename '" + tmp + "' to '" + path + "'");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DomainError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace fermicomm
