#pragma once

#include "btinv/block_toeplitz_engine.hpp"
#include "btinv/matrix.hpp"
#include "btinv/reflection.hpp"

namespace btinv {

/// Largest |p_{k,l}^T R e_j| over k < j <= l and |q_{k,l}^T R e_j| over
/// k <= j < l, across all computed k < l.
double orthogonality_residual(const RecursionState& state, const DenseHermitianMatrix& m);

/// Largest |v_{k,l} - q_{k,l}^T R e_l| and |v'_{k,l} - p_{k,l}^T R e_k|.
double definition_residual(const RecursionState& state, const DenseHermitianMatrix& m);

/// Largest relative discrepancy |x - y| / max(1, |y|) between query(fast, k, l)
/// and the dense state at every (k, l), over all six quantities and every
/// vector entry.
double fast_dense_discrepancy(const FastState& fast, const RecursionState& dense);

}  // namespace btinv
