#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "btinv/block_toeplitz_engine.hpp"
#include "btinv/matrix.hpp"
#include "btinv/reflection.hpp"

namespace btinv {

/// The two triangular factorizations of the inverse,
///   R^{-1} = conj(RP) DP^{-1} RP^T = conj(RQ) DQ^{-1} RQ^T,
/// with RP unit lower triangular (columns p_{k,n-1}) and RQ unit upper
/// triangular (columns q_{0,l}, the first being e_0).
struct InverseFactorization {
    std::size_t n = 0;
    ComplexMatrix rp;
    ComplexMatrix rq;
    std::vector<double> dp;
    std::vector<double> dq;
    /// max |RP^T R conj(RP) - diag(DP)| measured at assembly (0 if unchecked); same for Q.
    double diagonality_residual_p = 0.0;
    double diagonality_residual_q = 0.0;
};

enum class FactorSide { P, Q };

struct AssembleOptions {
    bool verify = true;
    Tolerance tolerance;
};

/// Builds the factors and, when `options.verify`, checks that RP^T R conj(RP)
/// and RQ^T R conj(RQ) are diagonal with diagonals DP, DQ (ConsistencyError
/// otherwise).
InverseFactorization assemble(const TerminalPolynomials& t, const DenseHermitianMatrix& m,
                              const AssembleOptions& options = {});
InverseFactorization assemble(const TerminalPolynomials& t, const BlockToeplitzMatrix& m,
                              const AssembleOptions& options = {});
InverseFactorization assemble(const RecursionState& state, const DenseHermitianMatrix& m,
                              const AssembleOptions& options = {});
InverseFactorization assemble(const FastState& state, const BlockToeplitzMatrix& m,
                              const AssembleOptions& options = {});

/// x = conj(R) D^{-1} R^T b for the chosen side, in three passes.
std::vector<Complex> solve(const InverseFactorization& f, std::span<const Complex> b,
                           FactorSide side = FactorSide::P);

/// Explicit conj(R) D^{-1} R^T.
ComplexMatrix invert(const InverseFactorization& f, FactorSide side = FactorSide::P);

/// max_ij |(R^T M conj(R))_ij - delta_ij d_i|.
double diagonality_residual(const ComplexMatrix& factor, std::span<const double> diagonal,
                            const ComplexMatrix& m);

}  // namespace btinv
