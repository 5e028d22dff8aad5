#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "btinv/matrix.hpp"

namespace btinv::testing {

/// Hermitian matrix from a real symmetric/complex list, upper triangle given.
inline DenseHermitianMatrix hermitian(std::size_t n, const std::vector<Complex>& upper_row_major) {
    ComplexMatrix m(n, n);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            m(i, j) = upper_row_major[idx++];
            m(j, i) = std::conj(m(i, j));
        }
        m(i, i) = m(i, i).real();
    }
    return DenseHermitianMatrix(m);
}

inline ComplexMatrix scalar_block(Complex z) {
    ComplexMatrix m(1, 1);
    m(0, 0) = z;
    return m;
}

/// Scalar Hermitian Toeplitz matrix with first row r.
inline BlockToeplitzMatrix scalar_toeplitz(const std::vector<Complex>& r) {
    std::vector<ComplexMatrix> blocks;
    for (const Complex& z : r) {
        blocks.push_back(scalar_block(z));
    }
    return BlockToeplitzMatrix(1, blocks);
}

inline BlockToeplitzMatrix identity_blocks(std::size_t n1, std::size_t n2) {
    std::vector<ComplexMatrix> blocks(n2, ComplexMatrix(n1, n1));
    blocks[0] = ComplexMatrix::identity(n1);
    return BlockToeplitzMatrix(n1, blocks);
}

/// Sum of the two loop nests that define the block schedule's cost, each
/// step at (k, l) weighted c1 (l - k), evaluated term by term.
inline double brute_force_opcount(std::size_t n1, std::size_t n2, double c1) {
    double s = 0.0;
    for (std::size_t d2 = 0; d2 < n2; ++d2) {
        for (std::size_t d1 = 1; d1 < n1; ++d1) {
            for (std::size_t u = 0; u + d1 < n1; ++u) {
                s += c1 * static_cast<double>(n1 * d2 + d1);
            }
        }
    }
    for (std::size_t d2 = 1; d2 < n2; ++d2) {
        for (std::size_t d1 = 0; d1 < n1; ++d1) {
            for (std::size_t u = 0; u + d1 < n1; ++u) {
                s += c1 * (static_cast<double>(n1 * d2) - static_cast<double>(d1));
            }
        }
    }
    return s;
}

inline double max_abs(const std::vector<Complex>& v) {
    double out = 0.0;
    for (const Complex& z : v) {
        out = std::max(out, std::abs(z));
    }
    return out;
}

}  // namespace btinv::testing
