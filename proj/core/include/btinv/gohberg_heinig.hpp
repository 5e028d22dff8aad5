#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "btinv/block_toeplitz_engine.hpp"
#include "btinv/matrix.hpp"

namespace btinv {

/// Structured inverse of a Hermitian block-Toeplitz matrix,
///   R^{-1} = L_p^H D(V'^{-1}) L_p - L_q^H D(V^{-1}) L_q,
/// where L_p is block upper triangular Toeplitz with block (I, J) = P_{J-I}^T
/// and L_q is strictly block upper triangular Toeplitz with block
/// (I, J) = Q_{n2-(J-I)}^T.
///
/// P_0..P_{n2-1} are the n1-row blocks (top down) of
/// [p_{0,n-1} ... p_{n1-1,n-1}] and Q_{n2-1}..Q_0 the blocks (top down) of
/// [q_{0,n-n1} ... q_{0,n-1}]. P_0 is unit lower and Q_0 unit upper
/// triangular.
struct GohbergHeinigInverse {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::vector<ComplexMatrix> p_blocks;
    std::vector<ComplexMatrix> q_blocks;
    std::vector<double> v_prime;  ///< v'_{k,n-1}, k < n1
    std::vector<double> v;        ///< v_{0,l}, l = n-n1 .. n-1
    /// max |R conj(P) V'^{-1} P_0^T - [I; 0; ...]| and the mirrored
    /// |R conj(Q) V^{-1} Q_0^T - [...; 0; I]|, measured at construction.
    double construction_residual_p = 0.0;
    double construction_residual_q = 0.0;
};

/// Extracts the blocks from a completed fast state and verifies both
/// construction identities (ConsistencyError beyond tolerance).
GohbergHeinigInverse gohberg_heinig(const FastState& state, const BlockToeplitzMatrix& m,
                                    const Tolerance& tolerance = {});

/// R^{-1} b using block convolutions only, O(n1^2 n2^2).
std::vector<Complex> gh_apply(const GohbergHeinigInverse& g, std::span<const Complex> b);

/// Dense R^{-1} built column by column with gh_apply.
ComplexMatrix gh_invert(const GohbergHeinigInverse& g);

/// Forward and backward block predictors:
///   [I A_1 ... A_{n2-1}] R = [Pf 0 ... 0],
///   [B_{n2-1} ... B_1 I] R = [0 ... 0 Pb].
struct WWREntities {
    /// a_blocks[i] = A_i, with a_blocks[0] = I. Same for b_blocks.
    std::vector<ComplexMatrix> a_blocks;
    std::vector<ComplexMatrix> b_blocks;
    ComplexMatrix pf;
    ComplexMatrix pb;
    double forward_residual = 0.0;
    double backward_residual = 0.0;
};

/// A_i = (P_0^T)^{-1} P_i^T, B_i = (Q_0^T)^{-1} Q_i^T,
/// Pf = (P_0^T)^{-1} V' conj(P_0)^{-1}, Pb = (Q_0^T)^{-1} V conj(Q_0)^{-1},
/// by unit-triangular substitution. Verifies both residuals against `m`.
WWREntities wwr_entities(const GohbergHeinigInverse& g, const BlockToeplitzMatrix& m,
                         const Tolerance& tolerance = {});

}  // namespace btinv
