#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "btinv/matrix.hpp"
#include "btinv/types.hpp"
#include "btinv/vector.hpp"

namespace btinv {

struct StepOptions {
    /// Compute q_hat^T R e_k independently and compare its conjugate with
    /// p^T R e_l: |difference| <= identity_tolerance * (1 + |p^T R e_l|).
    bool check_identity = true;
    double identity_tolerance = 1e-10;
    /// Recompute v_hat = q_hat^T R e_l and v'_{k,l-1} = p^T R e_k and compare
    /// with the recurrence values under `tolerance`.
    bool check_denominators = false;
    /// A step fails as not positive definite when real(1 - a a') <= this.
    double pd_threshold = 1e-13;
    Tolerance tolerance;
};

struct RecursionStats {
    std::uint64_t steps = 0;
    /// Complex multiply-adds: two numerator dots and two vector updates per
    /// step, 4 (l - k) in total.
    std::uint64_t op_count = 0;
    std::uint64_t identity_checks = 0;
    /// max over checked steps of |p^T R e_l - conj(q^T R e_k)| / (1 + |p^T R e_l|).
    double max_identity_defect = 0.0;
    double max_denominator_defect = 0.0;
    /// Steps where real(a a') came out negative (not expected for Hermitian input).
    std::uint64_t negative_products = 0;
};

/// Everything one application of the recurrence produces at (k, l).
struct StepResult {
    Complex a;
    Complex a_prime;
    ComplexVector p;
    ComplexVector q;
    double v = 0.0;
    double v_prime = 0.0;
};

/// One application of the recurrence at (k, l):
///   a  = p_prev^T R e_l / v_hat,   a' = q_hat^T R e_k / v'_prev
///   p  = p_prev - a q_hat,         q  = q_hat - a' p_prev
///   v  = v_hat (1 - a a'),         v' = v'_prev (1 - a a')
/// The a' numerator is taken as the conjugate of the a numerator.
/// q_hat may be any view (the block-Toeplitz driver passes shifted ones).
StepResult reflection_step(const DenseHermitianMatrix& m, std::size_t k, std::size_t l,
                           const VectorView& p_prev, double v_prime_prev, const VectorView& q_hat,
                           double v_hat, const StepOptions& options, RecursionStats& stats);
StepResult reflection_step(const BlockToeplitzMatrix& m, std::size_t k, std::size_t l,
                           const VectorView& p_prev, double v_prime_prev, const VectorView& q_hat,
                           double v_hat, const StepOptions& options, RecursionStats& stats);

/// Triangular arrays p, q, a, a', v, v' for 0 <= k <= l < n.
class RecursionState {
public:
    explicit RecursionState(std::size_t n);

    std::size_t order() const noexcept { return n_; }
    bool has(std::size_t k, std::size_t l) const;

    const ComplexVector& p(std::size_t k, std::size_t l) const { return entry(k, l).p; }
    const ComplexVector& q(std::size_t k, std::size_t l) const { return entry(k, l).q; }
    /// a and a' are zero on the diagonal.
    Complex a(std::size_t k, std::size_t l) const { return entry(k, l).a; }
    Complex a_prime(std::size_t k, std::size_t l) const { return entry(k, l).a_prime; }
    double v(std::size_t k, std::size_t l) const { return entry(k, l).v; }
    double v_prime(std::size_t k, std::size_t l) const { return entry(k, l).v_prime; }

    void store(std::size_t k, std::size_t l, StepResult result);

    RecursionStats stats;

private:
    std::size_t index(std::size_t k, std::size_t l) const;
    const StepResult& entry(std::size_t k, std::size_t l) const;

    std::size_t n_;
    std::vector<StepResult> entries_;
    std::vector<bool> present_;
};

/// p_kk = q_kk = e_k and v_kk = v'_kk = r_kk. NotPositiveDefinite(k, k) if
/// some r_kk <= 0.
RecursionState init_state(const DenseHermitianMatrix& m);

/// Applies the recurrence at (k, l) with the caller's q_hat, v_hat and
/// stores the result. Requires (k, l-1) to be present.
void step(RecursionState& state, const DenseHermitianMatrix& m, std::size_t k, std::size_t l,
          const VectorView& q_hat, double v_hat, const StepOptions& options = {});

/// Diagonal-by-diagonal recursion over the whole triangle. O(n^3) memory.
RecursionState run_dense(const DenseHermitianMatrix& m, const StepOptions& options = {});

/// The parts of a completed recursion that the inverse factorizations use:
/// the last column of the p-array and the first row of the q-array.
struct TerminalPolynomials {
    std::size_t n = 0;
    std::vector<ComplexVector> p_last;  ///< p_{k,n-1}
    std::vector<ComplexVector> q_first; ///< q_{0,l}
    std::vector<double> v_prime_last;   ///< v'_{k,n-1}
    std::vector<double> v_first;        ///< v_{0,l}
};

TerminalPolynomials terminal_polynomials(const RecursionState& state);

struct StreamingResult {
    TerminalPolynomials terminal;
    RecursionStats stats;
};

/// Same recursion keeping only diagonals d-1 and d, O(n^2) memory.
StreamingResult run_dense_streaming(const DenseHermitianMatrix& m, const StepOptions& options = {});

}  // namespace btinv
