#include "btinv/reflection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace btinv {

namespace {

std::string at(std::size_t k, std::size_t l) {
    return "(" + std::to_string(k) + "," + std::to_string(l) + ")";
}

// x - alpha * y over the union of both windows. Entries covered only by x
// are copied, so leading unit coefficients stay exactly 1.
ComplexVector subtract_scaled(const VectorView& x, Complex alpha, const VectorView& y) {
    const std::size_t begin = std::min(x.begin(), y.begin());
    const std::size_t end = std::max(x.end(), y.end());
    std::vector<Complex> out(end - begin);
    std::copy(x.window().begin(), x.window().end(), out.begin() + static_cast<std::ptrdiff_t>(x.begin() - begin));
    Complex* dst = out.data() + (y.begin() - begin);
    for (const Complex& yi : y.window()) {
        *dst++ -= alpha * yi;
    }
    return ComplexVector(x.size(), begin, std::move(out));
}

template <class Matrix>
StepResult step_impl(const Matrix& m, std::size_t k, std::size_t l, const VectorView& p_prev,
                     double v_prime_prev, const VectorView& q_hat, double v_hat,
                     const StepOptions& options, RecursionStats& stats) {
    if (!(v_hat > 0.0) || !(v_prime_prev > 0.0)) {
        throw NotPositiveDefinite(k, l, "matrix not numerically positive definite at step " + at(k, l) +
                                            ": non-positive denominator");
    }
    const Complex numerator = m.column_dot(p_prev, l);
    const Complex numerator_prime = std::conj(numerator);

    if (options.check_identity) {
        const Complex direct = m.column_dot(q_hat, k);
        const double defect = std::abs(numerator - std::conj(direct)) / (1.0 + std::abs(numerator));
        ++stats.identity_checks;
        stats.max_identity_defect = std::max(stats.max_identity_defect, defect);
        if (!(defect <= options.identity_tolerance)) {
            throw ConsistencyError("conjugate numerator identity violated at step " + at(k, l));
        }
    }
    if (options.check_denominators) {
        const double tol = options.tolerance.for_matrix(m.max_abs(), m.order());
        const double dv = std::abs(m.column_dot(q_hat, l) - v_hat);
        const double dvp = std::abs(m.column_dot(p_prev, k) - v_prime_prev);
        stats.max_denominator_defect = std::max({stats.max_denominator_defect, dv, dvp});
        if (!(dv <= tol) || !(dvp <= tol)) {
            throw ConsistencyError("recurrence denominators disagree with their defining products at step " +
                                   at(k, l));
        }
    }

    StepResult out;
    out.a = numerator / v_hat;
    out.a_prime = numerator_prime / v_prime_prev;
    const Complex product = out.a * out.a_prime;
    const Complex factor = 1.0 - product;
    if (!(factor.real() > options.pd_threshold)) {
        throw NotPositiveDefinite(k, l, "matrix not numerically positive definite at step " + at(k, l));
    }
    if (std::abs(product.imag()) > 1e-10 * std::max(1.0, std::abs(product))) {
        throw ConsistencyError("reflection coefficient product is not real at step " + at(k, l));
    }
    if (product.real() < 0.0) {
        ++stats.negative_products;
    }
    out.p = subtract_scaled(p_prev, out.a, q_hat);
    out.q = subtract_scaled(q_hat, out.a_prime, p_prev);
    out.v = v_hat * factor.real();
    out.v_prime = v_prime_prev * factor.real();

    ++stats.steps;
    stats.op_count += 2 * (p_prev.window().size() + q_hat.window().size());
    return out;
}

StepResult initial_entry(std::size_t n, std::size_t k, double rkk) {
    StepResult e;
    e.p = ComplexVector::basis(n, k);
    e.q = ComplexVector::basis(n, k);
    e.v = rkk;
    e.v_prime = rkk;
    return e;
}

double checked_diagonal(const DenseHermitianMatrix& m, std::size_t k) {
    const double rkk = m(k, k).real();
    if (!(rkk > 0.0)) {
        throw NotPositiveDefinite(k, k, "matrix not positive definite: diagonal entry " + at(k, k) +
                                            " is not positive");
    }
    return rkk;
}

}  // namespace

StepResult reflection_step(const DenseHermitianMatrix& m, std::size_t k, std::size_t l,
                           const VectorView& p_prev, double v_prime_prev, const VectorView& q_hat,
                           double v_hat, const StepOptions& options, RecursionStats& stats) {
    return step_impl(m, k, l, p_prev, v_prime_prev, q_hat, v_hat, options, stats);
}

StepResult reflection_step(const BlockToeplitzMatrix& m, std::size_t k, std::size_t l,
                           const VectorView& p_prev, double v_prime_prev, const VectorView& q_hat,
                           double v_hat, const StepOptions& options, RecursionStats& stats) {
    return step_impl(m, k, l, p_prev, v_prime_prev, q_hat, v_hat, options, stats);
}

RecursionState::RecursionState(std::size_t n)
    : n_(n), entries_(n * (n + 1) / 2), present_(n * (n + 1) / 2, false) {}

std::size_t RecursionState::index(std::size_t k, std::size_t l) const {
    if (k > l || l >= n_) {
        throw std::out_of_range("RecursionState: index " + at(k, l) + " out of range");
    }
    return l * (l + 1) / 2 + k;
}

bool RecursionState::has(std::size_t k, std::size_t l) const {
    return k <= l && l < n_ && present_[index(k, l)];
}

const StepResult& RecursionState::entry(std::size_t k, std::size_t l) const {
    const std::size_t i = index(k, l);
    if (!present_[i]) {
        throw ConsistencyError("RecursionState: entry " + at(k, l) + " has not been computed");
    }
    return entries_[i];
}

void RecursionState::store(std::size_t k, std::size_t l, StepResult result) {
    const std::size_t i = index(k, l);
    entries_[i] = std::move(result);
    present_[i] = true;
}

RecursionState init_state(const DenseHermitianMatrix& m) {
    const std::size_t n = m.order();
    RecursionState state(n);
    for (std::size_t k = 0; k < n; ++k) {
        state.store(k, k, initial_entry(n, k, checked_diagonal(m, k)));
    }
    return state;
}

void step(RecursionState& state, const DenseHermitianMatrix& m, std::size_t k, std::size_t l,
          const VectorView& q_hat, double v_hat, const StepOptions& options) {
    if (k >= l || !state.has(k, l - 1)) {
        throw ConsistencyError("step " + at(k, l) + ": predecessor (k, l-1) is missing");
    }
    StepResult r = reflection_step(m, k, l, state.p(k, l - 1).view(), state.v_prime(k, l - 1), q_hat,
                                   v_hat, options, state.stats);
    state.store(k, l, std::move(r));
}

RecursionState run_dense(const DenseHermitianMatrix& m, const StepOptions& options) {
    RecursionState state = init_state(m);
    const std::size_t n = m.order();
    for (std::size_t d = 1; d < n; ++d) {
        for (std::size_t k = 0; k + d < n; ++k) {
            const std::size_t l = k + d;
            step(state, m, k, l, state.q(k + 1, l).view(), state.v(k + 1, l), options);
        }
    }
    return state;
}

TerminalPolynomials terminal_polynomials(const RecursionState& state) {
    const std::size_t n = state.order();
    TerminalPolynomials t;
    t.n = n;
    for (std::size_t k = 0; k < n; ++k) {
        t.p_last.push_back(state.p(k, n - 1));
        t.v_prime_last.push_back(state.v_prime(k, n - 1));
        t.q_first.push_back(state.q(0, k));
        t.v_first.push_back(state.v(0, k));
    }
    return t;
}

StreamingResult run_dense_streaming(const DenseHermitianMatrix& m, const StepOptions& options) {
    const std::size_t n = m.order();
    StreamingResult out;
    TerminalPolynomials& t = out.terminal;
    t.n = n;
    t.p_last.resize(n);
    t.q_first.resize(n);
    t.v_prime_last.resize(n);
    t.v_first.resize(n);

    // prev[k] holds the entry (k, k + d - 1).
    std::vector<StepResult> prev;
    prev.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        prev.push_back(initial_entry(n, k, checked_diagonal(m, k)));
    }
    auto harvest = [&](const std::vector<StepResult>& diag, std::size_t d) {
        // (0, d) is the first entry; (n-1-d, n-1) the last.
        t.q_first[d] = diag.front().q;
        t.v_first[d] = diag.front().v;
        t.p_last[n - 1 - d] = diag.back().p;
        t.v_prime_last[n - 1 - d] = diag.back().v_prime;
    };
    harvest(prev, 0);
    for (std::size_t d = 1; d < n; ++d) {
        std::vector<StepResult> cur;
        cur.reserve(n - d);
        for (std::size_t k = 0; k + d < n; ++k) {
            const std::size_t l = k + d;
            const StepResult& left = prev[k];       // (k, l-1)
            const StepResult& below = prev[k + 1];  // (k+1, l)
            cur.push_back(reflection_step(m, k, l, left.p.view(), left.v_prime, below.q.view(), below.v,
                                          options, out.stats));
        }
        harvest(cur, d);
        prev = std::move(cur);
    }
    return out;
}

}  // namespace btinv
