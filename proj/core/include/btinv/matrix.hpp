#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "btinv/types.hpp"
#include "btinv/vector.hpp"

namespace btinv {

/// General dense complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Complex operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    std::span<const Complex> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<Complex> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

    double max_abs() const;

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<Complex> operator*(const ComplexMatrix& a, std::span<const Complex> x);

ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix conjugate(const ComplexMatrix& a);
ComplexMatrix adjoint(const ComplexMatrix& a);

/// max_ij |a_ij - b_ij|; throws std::invalid_argument on shape mismatch.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_difference(std::span<const Complex> a, std::span<const Complex> b);

/// Full Hermitian matrix. Construction rejects (std::invalid_argument) any
/// non-finite entry, any pair with entries(i,j) != conj(entries(j,i)) bit
/// for bit, and any diagonal entry with a nonzero imaginary part. Positive
/// definiteness is left to the recursion and the oracle.
class DenseHermitianMatrix {
public:
    explicit DenseHermitianMatrix(ComplexMatrix entries);

    std::size_t order() const noexcept { return entries_.rows(); }
    Complex operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
    const ComplexMatrix& entries() const noexcept { return entries_; }
    double max_abs() const { return entries_.max_abs(); }

    /// sum_{i in support(v)} v_i * r_{i,l}, i.e. v^T R e_l over the window.
    Complex column_dot(const VectorView& v, std::size_t l) const;

private:
    ComplexMatrix entries_;
};

/// Hermitian block-Toeplitz matrix of order n1*n2 stored as its first block
/// row C_0..C_{n2-1}. Block (I, J) of the implied matrix is C_{J-I} for
/// J >= I and C_{I-J}^H otherwise. Blocks need not be Toeplitz.
class BlockToeplitzMatrix {
public:
    /// Throws std::invalid_argument unless every block is n1 x n1 with finite
    /// entries and C_0 is exactly Hermitian with real diagonal.
    BlockToeplitzMatrix(std::size_t n1, std::vector<ComplexMatrix> blocks);

    std::size_t block_order() const noexcept { return n1_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    std::size_t order() const noexcept { return n1_ * blocks_.size(); }
    const ComplexMatrix& block(std::size_t t) const { return blocks_.at(t); }
    const std::vector<ComplexMatrix>& blocks() const noexcept { return blocks_; }

    /// Entry (i, j) of the implied full matrix, computed from the blocks.
    Complex operator()(std::size_t i, std::size_t j) const;

    double max_abs() const;
    ComplexMatrix materialize() const;
    DenseHermitianMatrix to_dense() const { return DenseHermitianMatrix(materialize()); }

    Complex column_dot(const VectorView& v, std::size_t l) const;

    /// R x without materializing R.
    std::vector<Complex> multiply(std::span<const Complex> x) const;

private:
    std::size_t n1_;
    std::vector<ComplexMatrix> blocks_;
};

/// l-th column R e_l of the full matrix. std::out_of_range if l >= order.
ComplexVector column(const DenseHermitianMatrix& m, std::size_t l);
ComplexVector column(const BlockToeplitzMatrix& m, std::size_t l);

/// a sec b := b * floor(a / b).
constexpr std::size_t sec(std::size_t a, std::size_t b) { return b * (a / b); }

}  // namespace btinv
