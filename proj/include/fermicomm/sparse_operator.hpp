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

#ifndef FERMICOMM_SPARSE_OPERATOR_HPP
#define FERMICOMM_SPARSE_OPERATOR_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace fermicomm {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;
using SparseMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor, std::int64_t>;

struct OperatorEntry {
    std::size_t row;
    std::size_t col;
    Complex value;

    bool operator==(const OperatorEntry&) const = default;
};

/// Square complex matrix stored in canonical sparse form.
///
/// Canonical form: entries sorted by (row, col), no duplicate coordinates,
/// magnitudes at or below kPruneTolerance dropped. Every arithmetic result is
/// canonicalized before it is returned, so values are immutable and safe to
/// share across threads.
class ComplexSparseOperator {
   public:
    static constexpr double kPruneTolerance = 1e-14;

    ComplexSparseOperator() = default;
    /// The zero operator of the given dimension.
    explicit ComplexSparseOperator(std::size_t dim);
    /// Takes ownership of a matrix and canonicalizes it. Must be square.
    explicit ComplexSparseOperator(SparseMatrix matrix);

    static ComplexSparseOperator identity(std::size_t dim);
    static ComplexSparseOperator zero(std::size_t dim);
    static ComplexSparseOperator diagonal(std::span<const Complex> diag);
    /// Duplicate coordinates are summed.
    static ComplexSparseOperator from_entries(std::size_t dim, std::span<const OperatorEntry> entries);
    static ComplexSparseOperator from_dense(const DenseMatrix& dense);
    /// |ket><bra|.
    static ComplexSparseOperator outer(const DenseVector& ket, const DenseVector& bra);

    std::size_t dim() const { return dim_; }
    std::size_t nnz() const { return static_cast<std::size_t>(matrix_.nonZeros()); }
    const SparseMatrix& matrix() const { return matrix_; }

    std::vector<OperatorEntry> entries() const;
    Complex at(std::size_t row, std::size_t col) const;
    DenseMatrix to_dense() const;

    ComplexSparseOperator adjoint() const;
    double frobenius_norm() const;
    Complex trace() const;
    bool is_zero() const { return matrix_.nonZeros() == 0; }
    bool is_diagonal() const;
    bool is_hermitian(double tol = 1e-12) const;

    ComplexSparseOperator& operator+=(const ComplexSparseOperator& other);
    ComplexSparseOperator& operator-=(const ComplexSparseOperator& other);
    ComplexSparseOperator& operator*=(Complex scale);

    friend ComplexSparseOperator operator+(const ComplexSparseOperator& a, const ComplexSparseOperator& b);
    friend ComplexSparseOperator operator-(const ComplexSparseOperator& a, const ComplexSparseOperator& b);
    friend ComplexSparseOperator operator-(const ComplexSparseOperator& a);
    friend ComplexSparseOperator operator*(const ComplexSparseOperator& a, const ComplexSparseOperator& b);
    friend ComplexSparseOperator operator*(Complex s, const ComplexSparseOperator& a);
    friend ComplexSparseOperator operator*(const ComplexSparseOperator& a, Complex s);
    friend DenseVector operator*(const ComplexSparseOperator& a, const DenseVector& v);

    /// Exact coordinate equality (same canonical entries, bitwise values).
    friend bool operator==(const ComplexSparseOperator& a, const ComplexSparseOperator& b);

   private:
    void canonicalize();

    std::size_t dim_ = 0;
    SparseMatrix matrix_;
};

ComplexSparseOperator commutator(const ComplexSparseOperator& a, const ComplexSparseOperator& b);
ComplexSparseOperator anticommutator(const ComplexSparseOperator& a, const ComplexSparseOperator& b);
/// Kronecker product with `a` on the most significant index block.
ComplexSparseOperator tensor(const ComplexSparseOperator& a, const ComplexSparseOperator& b);
ComplexSparseOperator tensor(std::initializer_list<ComplexSparseOperator> factors);
ComplexSparseOperator tensor(std::span<const ComplexSparseOperator> factors);
ComplexSparseOperator power(const ComplexSparseOperator& a, unsigned exponent);
/// tr(a^dagger b).
Complex hs_inner(const ComplexSparseOperator& a, const ComplexSparseOperator& b);
/// ||a - b||_F.
double frobenius_distance(const ComplexSparseOperator& a, const ComplexSparseOperator& b);

/// Dense complex amplitude vector over occupation bitstrings.
class StateVector {
   public:
    StateVector() = default;
    explicit StateVector(DenseVector amplitudes);
    /// The computational basis state |index> in a space of dimension dim.
    static StateVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
    const DenseVector& amplitudes() const { return amplitudes_; }
    Complex operator[](std::size_t i) const { return amplitudes_[static_cast<Eigen::Index>(i)]; }

    double norm() const { return amplitudes_.norm(); }
    bool is_normalized(double tol = 1e-12) const;
    StateVector normalized() const;
    StateVector apply(const ComplexSparseOperator& op) const;
    /// |psi> tensored with itself `copies` times, copy 1 most significant.
    StateVector tensor_power(unsigned copies) const;
    /// <this|op|this>.
    Complex expectation(const ComplexSparseOperator& op) const;

    friend StateVector tensor(const StateVector& a, const StateVector& b);

   private:
    DenseVector amplitudes_;
};

/// <a|b>.
Complex inner(const StateVector& a, const StateVector& b);

}  // namespace fermicomm

#endif
