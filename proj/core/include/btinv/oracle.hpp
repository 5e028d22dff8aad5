#pragma once

#include "btinv/matrix.hpp"

namespace btinv {

// Reference routines used to validate the reflection recursion. They share
// no code with it: a plain Cholesky factorization M = L L^H followed by
// forward and back substitution.

/// Lower-triangular L with L L^H = M. Throws NotPositiveDefinite(j, j) when
/// pivot j is not positive.
ComplexMatrix dense_cholesky_oracle(const DenseHermitianMatrix& m);

/// M^{-1} from the Cholesky factor, one unit vector at a time.
ComplexMatrix oracle_inverse(const DenseHermitianMatrix& m);

/// Solves M x = b through the Cholesky factor.
std::vector<Complex> oracle_solve(const DenseHermitianMatrix& m, std::span<const Complex> b);

/// True when the Cholesky oracle succeeds on the (Hermitian) matrix.
bool oracle_is_positive_definite(const ComplexMatrix& m);

}  // namespace btinv
