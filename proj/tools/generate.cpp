#include "generate.hpp"

#include <cmath>

namespace btinv::gen {

namespace {

Complex gaussian(std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    const double re = normal(rng);
    const double im = normal(rng);
    return {re, im};
}

// Mirrors the upper triangle so the result is Hermitian bit for bit.
ComplexMatrix hermitian_from_upper(ComplexMatrix m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        m(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

}  // namespace

std::vector<Complex> vector(std::size_t n, std::mt19937_64& rng) {
    std::vector<Complex> v(n);
    for (auto& z : v) {
        z = gaussian(rng);
    }
    return v;
}

DenseHermitianMatrix dense(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ComplexMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            g(i, j) = gaussian(rng);
        }
    }
    ComplexMatrix m = g * adjoint(g);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) += 0.01 * static_cast<double>(n);
    }
    return DenseHermitianMatrix(hermitian_from_upper(std::move(m)));
}

BlockToeplitzMatrix block_toeplitz(std::size_t n1, std::size_t n2, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t samples = 8 * n2;
    std::vector<std::vector<Complex>> x;
    x.reserve(samples);
    for (std::size_t s = 0; s < samples; ++s) {
        x.push_back(vector(n1, rng));
    }
    std::vector<ComplexMatrix> blocks;
    for (std::size_t t = 0; t < n2; ++t) {
        ComplexMatrix c(n1, n1);
        for (std::size_t s = 0; s + t < samples; ++s) {
            for (std::size_t i = 0; i < n1; ++i) {
                for (std::size_t j = 0; j < n1; ++j) {
                    c(i, j) += x[s][i] * std::conj(x[s + t][j]);
                }
            }
        }
        for (std::size_t i = 0; i < n1; ++i) {
            for (std::size_t j = 0; j < n1; ++j) {
                c(i, j) /= static_cast<double>(samples);
            }
        }
        blocks.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < n1; ++i) {
        blocks[0](i, i) += 0.01;
    }
    blocks[0] = hermitian_from_upper(std::move(blocks[0]));
    return BlockToeplitzMatrix(n1, std::move(blocks));
}

DenseHermitianMatrix indefinite(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    // Modified Gram-Schmidt on the columns of a Gaussian matrix.
    std::vector<std::vector<Complex>> q;
    while (q.size() < n) {
        std::vector<Complex> v = vector(n, rng);
        for (const auto& u : q) {
            Complex proj{};
            for (std::size_t i = 0; i < n; ++i) {
                proj += std::conj(u[i]) * v[i];
            }
            for (std::size_t i = 0; i < n; ++i) {
                v[i] -= proj * u[i];
            }
        }
        double norm = 0.0;
        for (const auto& z : v) {
            norm += std::norm(z);
        }
        norm = std::sqrt(norm);
        if (norm < 1e-8) {
            continue;
        }
        for (auto& z : v) {
            z /= norm;
        }
        q.push_back(std::move(v));
    }
    std::uniform_real_distribution<double> positive(0.5, 2.0);
    std::uniform_real_distribution<double> negative(-1.0, -0.5);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<double> lambda(n);
    for (auto& l : lambda) {
        l = positive(rng);
    }
    lambda[pick(rng)] = negative(rng);

    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Complex s{};
            for (std::size_t c = 0; c < n; ++c) {
                s += q[c][i] * lambda[c] * std::conj(q[c][j]);
            }
            m(i, j) = s;
        }
    }
    return DenseHermitianMatrix(hermitian_from_upper(std::move(m)));
}

}  // namespace btinv::gen
