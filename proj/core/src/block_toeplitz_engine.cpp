#include "btinv/block_toeplitz_engine.hpp"

#include <string>

namespace btinv {

namespace {

std::string at(std::size_t k, std::size_t l) {
    return "(" + std::to_string(k) + "," + std::to_string(l) + ")";
}

}  // namespace

CanonicalIndex canonical(std::size_t k, std::size_t l, std::size_t n1) {
    const std::size_t s = sec(k, n1);
    return {k % n1, l - s, s};
}

FastState::FastState(std::size_t n1, std::size_t n2)
    : n1_(n1), n2_(n2), entries_(n1 * n1 * n2), present_(n1 * n1 * n2, false) {}

std::size_t FastState::slot(std::size_t k, std::size_t l) const {
    if (k >= n1_ || k > l || l >= order()) {
        throw std::out_of_range("FastState: " + at(k, l) + " is not a canonical index");
    }
    return k * order() + l;
}

bool FastState::has_canonical(std::size_t k, std::size_t l) const {
    return k < n1_ && k <= l && l < order() && present_[slot(k, l)];
}

const StepResult& FastState::canonical_entry(std::size_t k, std::size_t l) const {
    const std::size_t i = slot(k, l);
    if (!present_[i]) {
        throw ConsistencyError("block schedule: canonical entry " + at(k, l) + " required before it was computed");
    }
    return entries_[i];
}

void FastState::store(std::size_t k, std::size_t l, StepResult result) {
    const std::size_t i = slot(k, l);
    entries_[i] = std::move(result);
    present_[i] = true;
}

FastState run_block_toeplitz(const BlockToeplitzMatrix& m, const StepOptions& options) {
    const std::size_t n1 = m.block_order();
    const std::size_t n2 = m.block_count();
    const std::size_t n = m.order();
    FastState state(n1, n2);

    const ComplexMatrix& c0 = m.block(0);
    for (std::size_t k = 0; k < n1; ++k) {
        const double rkk = c0(k, k).real();
        if (!(rkk > 0.0)) {
            throw NotPositiveDefinite(k, k, "matrix not positive definite: diagonal entry " + at(k, k) +
                                                " is not positive");
        }
        StepResult e;
        e.p = ComplexVector::basis(n, k);
        e.q = ComplexVector::basis(n, k);
        e.v = rkk;
        e.v_prime = rkk;
        state.store(k, k, std::move(e));
    }

    // Applies the recurrence at canonical (k, l) given the resolved q_hat.
    auto apply = [&](std::size_t k, std::size_t l, const VectorView& q_hat, double v_hat) {
        const CanonicalIndex left = canonical(k, l - 1, n1);
        const StepResult& prev = state.canonical_entry(left.k, left.l);
        StepResult r = reflection_step(m, k, l, prev.p.view().shifted(left.shift), prev.v_prime, q_hat, v_hat,
                                       options, state.stats);
        state.store(k, l, std::move(r));
        state.visits.emplace_back(k, l);
    };
    auto apply_with_successor = [&](std::size_t k, std::size_t l) {
        const CanonicalIndex below = canonical(k + 1, l, n1);
        const StepResult& e = state.canonical_entry(below.k, below.l);
        apply(k, l, e.q.view().shifted(below.shift), e.v);
    };

    for (std::size_t d2 = 0; d2 < n2; ++d2) {
        if (d2 != 0) {
            // Lower triangle: k >= l mod n1.
            for (std::size_t d1 = n1; d1-- > 0;) {
                for (std::size_t u = 0; u + d1 < n1; ++u) {
                    const std::size_t k = u + d1;
                    const std::size_t l = d2 * n1 + u;
                    if (u == n1 - d1 - 1) {
                        const std::size_t kp = (k + 1) % n1;
                        const std::size_t l0 = l - sec(k + 1, n1);
                        const StepResult& e = state.canonical_entry(kp, l0);
                        ++state.boundary_rule_count;
                        apply(k, l, e.q.view().shifted(n1), e.v);
                    } else {
                        apply_with_successor(k, l);
                    }
                }
            }
        }
        // Upper triangle: k < l mod n1.
        for (std::size_t d1 = 1; d1 < n1; ++d1) {
            for (std::size_t u = 0; u + d1 < n1; ++u) {
                apply_with_successor(u, d2 * n1 + u + d1);
            }
        }
    }
    return state;
}

QueryResult query(const FastState& state, std::size_t k, std::size_t l) {
    if (k > l || l >= state.order()) {
        throw std::out_of_range("query: index " + at(k, l) + " out of range");
    }
    const CanonicalIndex c = canonical(k, l, state.block_order());
    const StepResult& e = state.canonical_entry(c.k, c.l);
    return {e.p.view().shifted(c.shift), e.q.view().shifted(c.shift), e.a, e.a_prime, e.v, e.v_prime};
}

TerminalPolynomials terminal_polynomials(const FastState& state) {
    const std::size_t n = state.order();
    TerminalPolynomials t;
    t.n = n;
    for (std::size_t k = 0; k < n; ++k) {
        const QueryResult last = query(state, k, n - 1);
        t.p_last.emplace_back(last.p);
        t.v_prime_last.push_back(last.v_prime);
        const QueryResult first = query(state, 0, k);
        t.q_first.emplace_back(first.q);
        t.v_first.push_back(first.v);
    }
    return t;
}

double predicted_opcount(std::size_t n1, std::size_t n2, double c1) {
    const double a = static_cast<double>(n1);
    const double b = static_cast<double>(n2);
    return c1 * (a * a * a * b * (b - 1.0) / 2.0 + (a - 1.0) * a * (a + 1.0) / 6.0);
}

}  // namespace btinv
