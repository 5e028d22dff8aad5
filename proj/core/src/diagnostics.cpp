#include "btinv/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace btinv {

namespace {

double relative(Complex x, Complex y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); }

}  // namespace

double orthogonality_residual(const RecursionState& state, const DenseHermitianMatrix& m) {
    const std::size_t n = state.order();
    double out = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
            const VectorView p = state.p(k, l).view();
            const VectorView q = state.q(k, l).view();
            for (std::size_t j = k; j <= l; ++j) {
                if (j > k) {
                    out = std::max(out, std::abs(m.column_dot(p, j)));
                }
                if (j < l) {
                    out = std::max(out, std::abs(m.column_dot(q, j)));
                }
            }
        }
    }
    return out;
}

double definition_residual(const RecursionState& state, const DenseHermitianMatrix& m) {
    const std::size_t n = state.order();
    double out = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = k; l < n; ++l) {
            out = std::max(out, std::abs(m.column_dot(state.q(k, l).view(), l) - state.v(k, l)));
            out = std::max(out, std::abs(m.column_dot(state.p(k, l).view(), k) - state.v_prime(k, l)));
        }
    }
    return out;
}

double fast_dense_discrepancy(const FastState& fast, const RecursionState& dense) {
    const std::size_t n = fast.order();
    if (dense.order() != n) {
        throw std::invalid_argument("fast_dense_discrepancy: orders differ");
    }
    double out = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = k; l < n; ++l) {
            const QueryResult r = query(fast, k, l);
            out = std::max({out, relative(r.a, dense.a(k, l)), relative(r.a_prime, dense.a_prime(k, l)),
                            relative(r.v, dense.v(k, l)), relative(r.v_prime, dense.v_prime(k, l))});
            const ComplexVector& p = dense.p(k, l);
            const ComplexVector& q = dense.q(k, l);
            for (std::size_t i = 0; i < n; ++i) {
                out = std::max({out, relative(r.p[i], p[i]), relative(r.q[i], q[i])});
            }
        }
    }
    return out;
}

}  // namespace btinv
