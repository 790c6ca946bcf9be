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

#include "fermicomm/sparse_operator.hpp"

#include <cmath>
#include <string>

#include "fermicomm/errors.hpp"

namespace fermicomm {

namespace {

using Triplet = Eigen::Triplet<Complex, std::int64_t>;

void require_same_dim(const ComplexSparseOperator& a, const ComplexSparseOperator& b, const char* what) {
    if (a.dim() != b.dim()) {
        throw DomainError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()) + ")");
    }
}

}  // namespace

ComplexSparseOperator::ComplexSparseOperator(std::size_t dim)
    : dim_(dim), matrix_(static_cast<std::int64_t>(dim), static_cast<std::int64_t>(dim)) {
}

ComplexSparseOperator::ComplexSparseOperator(SparseMatrix matrix) : dim_(0), matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) {
        throw DomainError("operator must be square");
    }
    dim_ = static_cast<std::size_t>(matrix_.rows());
    canonicalize();
}

void ComplexSparseOperator::canonicalize() {
    matrix_.prune([](const std::int64_t&, const std::int64_t&, const Complex& v) {
        return std::abs(v) > kPruneTolerance;
    });
    matrix_.makeCompressed();
}

ComplexSparseOperator ComplexSparseOperator::identity(std::size_t dim) {
    SparseMatrix m(static_cast<std::int64_t>(dim), static_cast<std::int64_t>(dim));
    m.setIdentity();
    return ComplexSparseOperator(std::move(m));
}

ComplexSparseOperator ComplexSparseOperator::zero(std::size_t dim) {
    return ComplexSparseOperator(dim);
}

ComplexSparseOperator ComplexSparseOperator::diagonal(std::span<const Complex> diag) {
    std::size_t dim = diag.size();
    SparseMatrix m(static_cast<std::int64_t>(dim), static_cast<std::int64_t>(dim));
    m.reserve(Eigen::VectorXi::Constant(static_cast<Eigen::Index>(dim), 1));
    for (std::size_t i = 0; i < dim; i++) {
        if (std::abs(diag[i]) > kPruneTolerance) {
            m.insert(static_cast<std::int64_t>(i), static_cast<std::int64_t>(i)) = diag[i];
        }
    }
    return ComplexSparseOperator(std::move(m));
}

ComplexSparseOperator ComplexSparseOperator::from_entries(std::size_t dim, std::span<const OperatorEntry> entries) {
    std::vector<Triplet> triplets;
    triplets.reserve(entries.size());
    for (const auto& e : entries) {
        if (e.row >= dim || e.col >= dim) {
            throw DomainError("operator entry out of range");
        }
        triplets.emplace_back(static_cast<std::int64_t>(e.row), static_cast<std::int64_t>(e.col), e.value);
    }
    SparseMatrix m(static_cast<std::int64_t>(dim), static_cast<std::int64_t>(dim));
    m.setFromTriplets(triplets.begin(), triplets.end());
    return ComplexSparseOperator(std::move(m));
}

ComplexSparseOperator ComplexSparseOperator::from_dense(const DenseMatrix& dense) {
    if (dense.rows() != dense.cols()) {
        throw DomainError("operator must be square");
    }
    std::vector<Triplet> triplets;
    for (Eigen::Index r = 0; r < dense.rows(); r++) {
        for (Eigen::Index c = 0; c < dense.cols(); c++) {
            if (std::abs(dense(r, c)) > kPruneTolerance) {
                triplets.emplace_back(r, c, dense(r, c));
            }
        }
    }
    SparseMatrix m(dense.rows(), dense.cols());
    m.setFromTriplets(triplets.begin(), triplets.end());
    return ComplexSparseOperator(std::move(m));
}

ComplexSparseOperator ComplexSparseOperator::outer(const DenseVector& ket, const DenseVector& bra) {
    if (ket.size() != bra.size()) {
        throw DomainError("outer: dimension mismatch");
    }
    std::vector<Triplet> triplets;
    for (Eigen::Index r = 0; r < ket.size(); r++) {
        if (ket[r] == Complex(0.0)) {
            continue;
        }
        for (Eigen::Index c = 0; c < bra.size(); c++) {
            Complex v = ket[r] * std::conj(bra[c]);
            if (std::abs(v) > kPruneTolerance) {
                triplets.emplace_back(r, c, v);
            }
        }
    }
    SparseMatrix m(ket.size(), ket.size());
    m.setFromTriplets(triplets.begin(), triplets.end());
    return ComplexSparseOperator(std::move(m));
}

std::vector<OperatorEntry> ComplexSparseOperator::entries() const {
    std::vector<OperatorEntry> out;
    out.reserve(nnz());
    for (std::int64_t r = 0; r < matrix_.outerSize(); r++) {
        for (SparseMatrix::InnerIterator it(matrix_, r); it; ++it) {
            out.push_back({static_cast<std::size_t>(it.row()), static_cast<std::size_t>(it.col()), it.value()});
        }
    }
    return out;
}

Complex ComplexSparseOperator::at(std::size_t row, std::size_t col) const {
    if (row >= dim_ || col >= dim_) {
        throw DomainError("operator index out of range");
    }
    return matrix_.coeff(static_cast<std::int64_t>(row), static_cast<std::int64_t>(col));
}

DenseMatrix ComplexSparseOperator::to_dense() const {
    return DenseMatrix(matrix_);
}

ComplexSparseOperator ComplexSparseOperator::adjoint() const {
    SparseMatrix m = matrix_.adjoint();
    return ComplexSparseOperator(std::move(m));
}

double ComplexSparseOperator::frobenius_norm() const {
    return matrix_.norm();
}

Complex ComplexSparseOperator::trace() const {
    Complex out = 0.0;
    for (std::int64_t r = 0; r < matrix_.outerSize(); r++) {
        out += matrix_.coeff(r, r);
    }
    return out;
}

bool ComplexSparseOperator::is_diagonal() const {
    for (std::int64_t r = 0; r < matrix_.outerSize(); r++) {
        for (SparseMatrix::InnerIterator it(matrix_, r); it; ++it) {
            if (it.col() != r) {
                return false;
            }
        }
    }
    return true;
}

bool ComplexSparseOperator::is_hermitian(double tol) const {
    SparseMatrix diff = matrix_ - SparseMatrix(matrix_.adjoint());
    return diff.norm() <= tol * std::max(1.0, matrix_.norm());
}

ComplexSparseOperator& ComplexSparseOperator::operator+=(const ComplexSparseOperator& other) {
    require_same_dim(*this, other, "add");
    matrix_ = matrix_ + other.matrix_;
    canonicalize();
    return *this;
}

ComplexSparseOperator& ComplexSparseOperator::operator-=(const ComplexSparseOperator& other) {
    require_same_dim(*this, other, "subtract");
    matrix_ = matrix_ - other.matrix_;
    canonicalize();
    return *this;
}

ComplexSparseOperator& ComplexSparseOperator::operator*=(Complex scale) {
    matrix_ *= scale;
    canonicalize();
    return *this;
}

ComplexSparseOperator operator+(const ComplexSparseOperator& a, const ComplexSparseOperator& b) {
    ComplexSparseOperator out = a;
    out += b;
    return out;
}

ComplexSparseOperator operator-(const ComplexSparseOperator& a, const ComplexSparseOperator& b) {
    ComplexSparseOperator out = a;
    out -= b;
    return out;
}

ComplexSparseOperator operator-(const ComplexSparseOperator& a) {
    return Complex(-1.0) * a;
}

ComplexSparseOperator operator*(const ComplexSparseOperator& a, const ComplexSparseOperator& b) {
    require_same_dim(a, b, "multiply");
    SparseMatrix m = a.matrix_ * b.matrix_;
    return ComplexSparseOperator(std::move(m));
}

ComplexSparseOperator operator*(Complex s, const ComplexSparseOperator& a) {
    ComplexSparseOperator out = a;
    out *= s;
    return out;
}

ComplexSparseOperator operator*(const ComplexSparseOperator& a, Complex s) {
    return s * a;
}

DenseVector operator*(const ComplexSparseOperator& a, const DenseVector& v) {
    if (static_cast<std::size_t>(v.size()) != a.dim()) {
        throw DomainError("apply: dimension mismatch");
    }
    return a.matrix_ * v;
}

bool operator==(const ComplexSparseOperator& a, const ComplexSparseOperator& b) {
    return a.dim() == b.dim() && a.entries() == b.entries();
}

ComplexSparseOperator commutator(const ComplexSparseOperator& a, const ComplexSparseOperator& b) {
    require_same_dim(a, b, "commutator");
    SparseMatrix m = a.matrix() * b.matrix() - b.matrix() * a.matrix();
    return ComplexSparseOperator(std::move(m));
}

ComplexSparseOperator anticommutator(const ComplexSparseOperator& a, const ComplexSparseOperator& b) {
    require_same_dim(a, b, "anticommutator");
    SparseMatrix m = a.matrix() * b.matrix() + b.matrix() * a.matrix();
    return ComplexSparseOperator(std::move(m));
}

ComplexSparseOperator tensor(const ComplexSparseOperator& a, const ComplexSparseOperator& b) {
    const std::int64_t db = static_cast<std::int64_t>(b.dim());
    const std::int64_t dim = static_cast<std::int64_t>(a.dim()) * db;
    SparseMatrix m(dim, dim);
    m.reserve(static_cast<std::int64_t>(a.nnz() * b.nnz()));
    const SparseMatrix& ma = a.matrix();
    const SparseMatrix& mb = b.matrix();
    // Row-major fill in increasing (row, col) order.
    for (std::int64_t ra = 0; ra < ma.outerSize(); ra++) {
        for (std::int64_t rb = 0; rb < mb.outerSize(); rb++) {
            std::int64_t row = ra * db + rb;
            m.startVec(row);
            for (SparseMatrix::InnerIterator ia(ma, ra); ia; ++ia) {
                for (SparseMatrix::InnerIterator ib(mb, rb); ib; ++ib) {
                    m.insertBack(row, ia.col() * db + ib.col()) = ia.value() * ib.value();
                }
            }
        }
    }
    m.finalize();
    return ComplexSparseOperator(std::move(m));
}

ComplexSparseOperator tensor(std::span<const ComplexSparseOperator> factors) {
    if (factors.empty()) {
        return ComplexSparseOperator::identity(1);
    }
    ComplexSparseOperator out = factors[0];
    for (std::size_t i = 1; i < factors.size(); i++) {
        out = tensor(out, factors[i]);
    }
    return out;
}

ComplexSparseOperator tensor(std::initializer_list<ComplexSparseOperator> factors) {
    return tensor(std::span<const ComplexSparseOperator>(factors.begin(), factors.size()));
}

ComplexSparseOperator power(const ComplexSparseOperator& a, unsigned exponent) {
    ComplexSparseOperator out = ComplexSparseOperator::identity(a.dim());
    for (unsigned i = 0; i < exponent; i++) {
        out = out * a;
    }
    return out;
}

Complex hs_inner(const ComplexSparseOperator& a, const ComplexSparseOperator& b) {
    require_same_dim(a, b, "hs_inner");
    // sum_{ij} conj(a_ij) b_ij, walking matching rows.
    Complex out = 0.0;
    const SparseMatrix& ma = a.matrix();
    const SparseMatrix& mb = b.matrix();
    for (std::int64_t r = 0; r < ma.outerSize(); r++) {
        SparseMatrix::InnerIterator ia(ma, r);
        SparseMatrix::InnerIterator ib(mb, r);
        while (ia && ib) {
            if (ia.col() < ib.col()) {
                ++ia;
            } else if (ib.col() < ia.col()) {
                ++ib;
            } else {
                out += std::conj(ia.value()) * ib.value();
                ++ia;
                ++ib;
            }
        }
    }
    return out;
}

double frobenius_distance(const ComplexSparseOperator& a, const ComplexSparseOperator& b) {
    require_same_dim(a, b, "frobenius_distance");
    return SparseMatrix(a.matrix() - b.matrix()).norm();
}

StateVector::StateVector(DenseVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (!amplitudes_.allFinite()) {
        throw DomainError("state amplitudes must be finite");
    }
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw DomainError("basis index out of range");
    }
    DenseVector v = DenseVector::Zero(static_cast<Eigen::Index>(dim));
    v[static_cast<Eigen::Index>(index)] = 1.0;
    return StateVector(std::move(v));
}

bool StateVector::is_normalized(double tol) const {
    return std::abs(norm() - 1.0) < tol;
}

StateVector StateVector::normalized() const {
    double nrm = norm();
    if (nrm == 0.0) {
        throw DomainError("cannot normalize the zero vector");
    }
    return StateVector(amplitudes_ / nrm);
}

StateVector StateVector::apply(const ComplexSparseOperator& op) const {
    return StateVector(op * amplitudes_);
}

StateVector StateVector::tensor_power(unsigned copies) const {
    StateVector out(DenseVector::Ones(1));
    for (unsigned i = 0; i < copies; i++) {
        out = tensor(out, *this);
    }
    return out;
}

Complex StateVector::expectation(const ComplexSparseOperator& op) const {
    return amplitudes_.dot(op * amplitudes_);
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    const Eigen::Index da = a.amplitudes_.size();
    const Eigen::Index db = b.amplitudes_.size();
    DenseVector out(da * db);
    for (Eigen::Index i = 0; i < da; i++) {
        out.segment(i * db, db) = a.amplitudes_[i] * b.amplitudes_;
    }
    return StateVector(std::move(out));
}

Complex inner(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        throw DomainError("inner: dimension mismatch");
    }
    return a.amplitudes().dot(b.amplitudes());
}

}  // namespace fermicomm
