#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "btinv/matrix.hpp"

namespace btinv::gen {

/// G G^H + 0.01 n I with G standard complex Gaussian. Exactly Hermitian.
DenseHermitianMatrix dense(std::size_t n, std::uint64_t seed);

/// Empirical covariance blocks C_t = (1/m) sum_s x_s x_{s+t}^H of a seeded
/// complex Gaussian vector sequence x_0..x_{m-1}, m = 8 n2, plus 0.01 I on
/// C_0. The implied block-Toeplitz matrix is positive definite.
BlockToeplitzMatrix block_toeplitz(std::size_t n1, std::size_t n2, std::uint64_t seed);

/// Q diag(lambda) Q^H for a random unitary Q, with exactly one negative
/// eigenvalue in [-1, -0.5] and the rest in [0.5, 2].
DenseHermitianMatrix indefinite(std::size_t n, std::uint64_t seed);

/// Complex Gaussian vector.
std::vector<Complex> vector(std::size_t n, std::mt19937_64& rng);

}  // namespace btinv::gen
