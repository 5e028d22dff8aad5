#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "btinv/matrix.hpp"
#include "btinv/reflection.hpp"

namespace btinv {

/// Representative of (k, l) under the block-Toeplitz shift identities:
/// (k mod n1, l - k sec n1), plus the shift s = k sec n1 that maps the
/// canonical polynomials back, p_{k,l} = U^s p_canonical.
struct CanonicalIndex {
    std::size_t k = 0;
    std::size_t l = 0;
    std::size_t shift = 0;

    friend bool operator==(const CanonicalIndex&, const CanonicalIndex&) = default;
};

CanonicalIndex canonical(std::size_t k, std::size_t l, std::size_t n1);

/// Recursion results stored only at canonical indices k < n1, k <= l < n1 n2.
class FastState {
public:
    FastState(std::size_t n1, std::size_t n2);

    std::size_t block_order() const noexcept { return n1_; }
    std::size_t block_count() const noexcept { return n2_; }
    std::size_t order() const noexcept { return n1_ * n2_; }

    bool has_canonical(std::size_t k, std::size_t l) const;
    /// Throws ConsistencyError if the entry was never computed.
    const StepResult& canonical_entry(std::size_t k, std::size_t l) const;
    void store(std::size_t k, std::size_t l, StepResult result);

    /// stats.op_count is the instrumented operation counter.
    RecursionStats stats;
    /// Number of steps that fetched q_hat = U^{n1} q_{(k+1) mod n1, l - (k+1) sec n1}.
    std::uint64_t boundary_rule_count = 0;
    /// Off-diagonal (k, l) in the order they were computed.
    std::vector<std::pair<std::size_t, std::size_t>> visits;

private:
    std::size_t slot(std::size_t k, std::size_t l) const;

    std::size_t n1_;
    std::size_t n2_;
    std::vector<StepResult> entries_;
    std::vector<bool> present_;
};

/// Computes every canonical entry in the block schedule: for each block
/// diagonal d2, a lower-triangle sweep (d1 = n1-1 .. 0, k = u + d1,
/// l = d2 n1 + u; skipped for d2 = 0) and then an upper-triangle sweep
/// (d1 = 1 .. n1-1, k = u, l = d2 n1 + u + d1). Cost O(n1^3 n2^2).
FastState run_block_toeplitz(const BlockToeplitzMatrix& m, const StepOptions& options = {});

/// The recursion quantities at an arbitrary (k, l), 0 <= k <= l < n1 n2.
/// The vectors view storage owned by the FastState.
struct QueryResult {
    VectorView p;
    VectorView q;
    Complex a;
    Complex a_prime;
    double v = 0.0;
    double v_prime = 0.0;
};

QueryResult query(const FastState& state, std::size_t k, std::size_t l);

TerminalPolynomials terminal_polynomials(const FastState& state);

/// Exact closed form of
///   sum_{d2=0}^{n2-1} sum_{d1=1}^{n1-1} sum_{u=0}^{n1-d1-1} c1 (n1 d2 + d1)
/// + sum_{d2=1}^{n2-1} sum_{d1=0}^{n1-1} sum_{u=0}^{n1-d1-1} c1 (n1 d2 - d1)
/// = c1 [ n1^3 n2 (n2 - 1) / 2 + (n1 - 1) n1 (n1 + 1) / 6 ],
/// the total step cost of the block schedule when a step at (k, l) costs
/// c1 (l - k). With c1 = 4 this equals the op counter exactly.
double predicted_opcount(std::size_t n1, std::size_t n2, double c1);

}  // namespace btinv
