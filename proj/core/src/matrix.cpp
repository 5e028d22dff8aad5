#include "btinv/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace btinv {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::string pair_name(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void check_hermitian(const ComplexMatrix& m, const std::string& what) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument(what + ": matrix is not square");
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!finite(m(i, j))) {
                throw std::invalid_argument(what + ": non-finite entry at " + pair_name(i, j));
            }
        }
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m(i, i).imag() != 0.0) {
            throw std::invalid_argument(what + ": diagonal entry " + pair_name(i, i) +
                                        " has nonzero imaginary part");
        }
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            if (m(i, j) != std::conj(m(j, i))) {
                throw std::invalid_argument(what + ": entries " + pair_name(i, j) + " and " +
                                            pair_name(j, i) + " are not conjugate");
            }
        }
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

double ComplexMatrix::max_abs() const {
    double out = 0.0;
    for (const Complex& z : data_) {
        out = std::max(out, std::abs(z));
    }
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix product: inner dimension mismatch");
    }
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto out = c.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            const auto brow = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out[j] += aik * brow[j];
            }
        }
    }
    return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix difference: shape mismatch");
    }
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            c(i, j) = a(i, j) - b(i, j);
        }
    }
    return c;
}

std::vector<Complex> operator*(const ComplexMatrix& a, std::span<const Complex> x) {
    if (a.cols() != x.size()) {
        throw std::invalid_argument("matrix-vector product: length mismatch");
    }
    std::vector<Complex> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto r = a.row(i);
        Complex sum{};
        for (std::size_t j = 0; j < x.size(); ++j) {
            sum += r[j] * x[j];
        }
        y[i] = sum;
    }
    return y;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
    ComplexMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            t(j, i) = a(i, j);
        }
    }
    return t;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            c(i, j) = std::conj(a(i, j));
        }
    }
    return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) { return conjugate(transpose(a)); }

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_difference: shape mismatch");
    }
    double out = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out = std::max(out, std::abs(a(i, j) - b(i, j)));
        }
    }
    return out;
}

double max_abs_difference(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("max_abs_difference: length mismatch");
    }
    double out = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        out = std::max(out, std::abs(a[i] - b[i]));
    }
    return out;
}

DenseHermitianMatrix::DenseHermitianMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
    check_hermitian(entries_, "DenseHermitianMatrix");
    if (entries_.rows() == 0) {
        throw std::invalid_argument("DenseHermitianMatrix: order must be positive");
    }
}

Complex DenseHermitianMatrix::column_dot(const VectorView& v, std::size_t l) const {
    if (v.size() != order() || l >= order()) {
        throw std::out_of_range("column_dot: index or length out of range");
    }
    // r_{i,l} = conj(r_{l,i}) exactly, and row l is contiguous.
    const auto r = entries_.row(l);
    const auto w = v.window();
    Complex sum{};
    for (std::size_t i = 0; i < w.size(); ++i) {
        sum += w[i] * std::conj(r[v.begin() + i]);
    }
    return sum;
}

BlockToeplitzMatrix::BlockToeplitzMatrix(std::size_t n1, std::vector<ComplexMatrix> blocks)
    : n1_(n1), blocks_(std::move(blocks)) {
    if (n1_ == 0 || blocks_.empty()) {
        throw std::invalid_argument("BlockToeplitzMatrix: n1 and n2 must be positive");
    }
    for (std::size_t t = 0; t < blocks_.size(); ++t) {
        const ComplexMatrix& c = blocks_[t];
        if (c.rows() != n1_ || c.cols() != n1_) {
            throw std::invalid_argument("BlockToeplitzMatrix: block C_" + std::to_string(t) +
                                        " is not n1 x n1");
        }
        for (std::size_t i = 0; i < n1_; ++i) {
            for (std::size_t j = 0; j < n1_; ++j) {
                if (!finite(c(i, j))) {
                    throw std::invalid_argument("BlockToeplitzMatrix: non-finite entry in C_" +
                                                std::to_string(t) + " at " + pair_name(i, j));
                }
            }
        }
    }
    check_hermitian(blocks_[0], "BlockToeplitzMatrix C_0");
}

Complex BlockToeplitzMatrix::operator()(std::size_t i, std::size_t j) const {
    const std::size_t bi = i / n1_;
    const std::size_t bj = j / n1_;
    if (bj >= bi) {
        return blocks_[bj - bi](i % n1_, j % n1_);
    }
    return std::conj(blocks_[bi - bj](j % n1_, i % n1_));
}

double BlockToeplitzMatrix::max_abs() const {
    double out = 0.0;
    for (const ComplexMatrix& c : blocks_) {
        out = std::max(out, c.max_abs());
    }
    return out;
}

ComplexMatrix BlockToeplitzMatrix::materialize() const {
    const std::size_t n = order();
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = (*this)(i, j);
        }
    }
    return m;
}

Complex BlockToeplitzMatrix::column_dot(const VectorView& v, std::size_t l) const {
    if (v.size() != order() || l >= order()) {
        throw std::out_of_range("column_dot: index or length out of range");
    }
    const auto w = v.window();
    Complex sum{};
    for (std::size_t i = 0; i < w.size(); ++i) {
        sum += w[i] * (*this)(v.begin() + i, l);
    }
    return sum;
}

std::vector<Complex> BlockToeplitzMatrix::multiply(std::span<const Complex> x) const {
    const std::size_t n = order();
    if (x.size() != n) {
        throw std::invalid_argument("BlockToeplitzMatrix::multiply: length mismatch");
    }
    std::vector<Complex> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex sum{};
        for (std::size_t j = 0; j < n; ++j) {
            sum += (*this)(i, j) * x[j];
        }
        y[i] = sum;
    }
    return y;
}

ComplexVector column(const DenseHermitianMatrix& m, std::size_t l) {
    if (l >= m.order()) {
        throw std::out_of_range("column: index " + std::to_string(l) + " out of range");
    }
    std::vector<Complex> out(m.order());
    for (std::size_t i = 0; i < m.order(); ++i) {
        out[i] = m(i, l);
    }
    return ComplexVector(std::move(out));
}

ComplexVector column(const BlockToeplitzMatrix& m, std::size_t l) {
    if (l >= m.order()) {
        throw std::out_of_range("column: index " + std::to_string(l) + " out of range");
    }
    std::vector<Complex> out(m.order());
    for (std::size_t i = 0; i < m.order(); ++i) {
        out[i] = m(i, l);
    }
    return ComplexVector(std::move(out));
}

}  // namespace btinv
