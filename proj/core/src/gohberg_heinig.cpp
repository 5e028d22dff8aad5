#include "btinv/gohberg_heinig.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace btinv {

namespace {

// X with U X = B for unit upper triangular U.
ComplexMatrix solve_unit_upper(const ComplexMatrix& u, const ComplexMatrix& b) {
    const std::size_t n = u.rows();
    ComplexMatrix x = b;
    for (std::size_t c = 0; c < b.cols(); ++c) {
        for (std::size_t i = n; i-- > 0;) {
            Complex s = x(i, c);
            for (std::size_t k = i + 1; k < n; ++k) {
                s -= u(i, k) * x(k, c);
            }
            x(i, c) = s;
        }
    }
    return x;
}

// X with L X = B for unit lower triangular L.
ComplexMatrix solve_unit_lower(const ComplexMatrix& l, const ComplexMatrix& b) {
    const std::size_t n = l.rows();
    ComplexMatrix x = b;
    for (std::size_t c = 0; c < b.cols(); ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            Complex s = x(i, c);
            for (std::size_t k = 0; k < i; ++k) {
                s -= l(i, k) * x(k, c);
            }
            x(i, c) = s;
        }
    }
    return x;
}

void require_unit_diagonal(const ComplexMatrix& m, const char* what) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m(i, i) != Complex{1.0, 0.0}) {
            throw ConsistencyError(std::string(what) + " does not have a unit diagonal");
        }
    }
}

// max |R conj(X) diag(1/d) X0^T - target|, with target = I in block row `block`.
double construction_residual(const BlockToeplitzMatrix& m, const std::vector<ComplexMatrix>& blocks,
                             const std::vector<double>& d, const ComplexMatrix& x0, std::size_t block) {
    const std::size_t n1 = m.block_order();
    const std::size_t n = m.order();
    double out = 0.0;
    std::vector<Complex> w(n);
    for (std::size_t c = 0; c < n1; ++c) {
        // Column c of conj(X) diag(1/d) X0^T.
        for (std::size_t i = 0; i < n; ++i) {
            const ComplexMatrix& xb = blocks[i / n1];
            Complex s{};
            for (std::size_t j = 0; j < n1; ++j) {
                s += std::conj(xb(i % n1, j)) / d[j] * x0(c, j);
            }
            w[i] = s;
        }
        const std::vector<Complex> rw = m.multiply(w);
        for (std::size_t i = 0; i < n; ++i) {
            const bool on = i / n1 == block && i % n1 == c;
            out = std::max(out, std::abs(rw[i] - (on ? Complex{1.0, 0.0} : Complex{})));
        }
    }
    return out;
}

double scaled_tolerance(const BlockToeplitzMatrix& m, const Tolerance& tolerance,
                        const std::vector<ComplexMatrix>& blocks) {
    double scale = 1.0;
    for (const ComplexMatrix& b : blocks) {
        scale = std::max(scale, b.max_abs());
    }
    return tolerance.for_matrix(m.max_abs(), m.order()) * scale * scale;
}

// sum_I coeff[I] R_{I,J} for every block column J, compared with target
// placed in block column `target_block`.
double predictor_residual(const BlockToeplitzMatrix& m, const std::vector<ComplexMatrix>& coeff,
                          const ComplexMatrix& target, std::size_t target_block) {
    const std::size_t n1 = m.block_order();
    const std::size_t n2 = m.block_count();
    double out = 0.0;
    for (std::size_t bj = 0; bj < n2; ++bj) {
        for (std::size_t r = 0; r < n1; ++r) {
            for (std::size_t c = 0; c < n1; ++c) {
                Complex s{};
                for (std::size_t bi = 0; bi < n2; ++bi) {
                    for (std::size_t t = 0; t < n1; ++t) {
                        s += coeff[bi](r, t) * m(bi * n1 + t, bj * n1 + c);
                    }
                }
                const Complex expected = bj == target_block ? target(r, c) : Complex{};
                out = std::max(out, std::abs(s - expected));
            }
        }
    }
    return out;
}

}  // namespace

GohbergHeinigInverse gohberg_heinig(const FastState& state, const BlockToeplitzMatrix& m,
                                    const Tolerance& tolerance) {
    const std::size_t n1 = m.block_order();
    const std::size_t n2 = m.block_count();
    const std::size_t n = m.order();
    if (state.block_order() != n1 || state.block_count() != n2) {
        throw std::invalid_argument("gohberg_heinig: state and matrix dimensions differ");
    }
    GohbergHeinigInverse g;
    g.n1 = n1;
    g.n2 = n2;
    g.p_blocks.assign(n2, ComplexMatrix(n1, n1));
    g.q_blocks.assign(n2, ComplexMatrix(n1, n1));
    for (std::size_t k = 0; k < n1; ++k) {
        const QueryResult pr = query(state, k, n - 1);
        g.v_prime.push_back(pr.v_prime);
        for (std::size_t i = pr.p.begin(); i < pr.p.end(); ++i) {
            g.p_blocks[i / n1](i % n1, k) = pr.p[i];
        }
        const QueryResult qr = query(state, 0, n - n1 + k);
        g.v.push_back(qr.v);
        for (std::size_t i = qr.q.begin(); i < qr.q.end(); ++i) {
            // Row block i / n1 from the top is Q_{n2-1-i/n1}.
            g.q_blocks[n2 - 1 - i / n1](i % n1, k) = qr.q[i];
        }
    }
    require_unit_diagonal(g.p_blocks[0], "P_0");
    require_unit_diagonal(g.q_blocks[0], "Q_0");

    // R conj(P) V'^{-1} P_0^T = [I; 0; ...] and R conj(Q) V^{-1} Q_0^T = [...; 0; I],
    // where Q is stacked top-down as Q_{n2-1}..Q_0.
    std::vector<ComplexMatrix> q_top_down(g.q_blocks.rbegin(), g.q_blocks.rend());
    g.construction_residual_p = construction_residual(m, g.p_blocks, g.v_prime, g.p_blocks[0], 0);
    g.construction_residual_q = construction_residual(m, q_top_down, g.v, g.q_blocks[0], n2 - 1);
    if (!(g.construction_residual_p <= scaled_tolerance(m, tolerance, g.p_blocks)) ||
        !(g.construction_residual_q <= scaled_tolerance(m, tolerance, g.q_blocks))) {
        throw ConsistencyError("gohberg_heinig: construction identity residual exceeds tolerance");
    }
    return g;
}

std::vector<Complex> gh_apply(const GohbergHeinigInverse& g, std::span<const Complex> b) {
    const std::size_t n1 = g.n1;
    const std::size_t n2 = g.n2;
    if (b.size() != n1 * n2) {
        throw std::invalid_argument("gh_apply: right-hand side has wrong length");
    }
    auto block = [&](std::span<const Complex> x, std::size_t i) { return x.subspan(i * n1, n1); };

    // y_I = sum_{J >= I} P_{J-I}^T b_J, then scaled by V'^{-1}.
    std::vector<Complex> yp(n1 * n2);
    // y_I = sum_{J > I} Q_{n2-(J-I)}^T b_J, then scaled by V^{-1}.
    std::vector<Complex> yq(n1 * n2);
    for (std::size_t bi = 0; bi < n2; ++bi) {
        for (std::size_t bj = bi; bj < n2; ++bj) {
            const auto bJ = block(b, bj);
            const ComplexMatrix& pb = g.p_blocks[bj - bi];
            for (std::size_t r = 0; r < n1; ++r) {
                Complex s{};
                for (std::size_t c = 0; c < n1; ++c) {
                    s += pb(c, r) * bJ[c];
                }
                yp[bi * n1 + r] += s;
            }
            if (bj > bi) {
                const ComplexMatrix& qb = g.q_blocks[n2 - (bj - bi)];
                for (std::size_t r = 0; r < n1; ++r) {
                    Complex s{};
                    for (std::size_t c = 0; c < n1; ++c) {
                        s += qb(c, r) * bJ[c];
                    }
                    yq[bi * n1 + r] += s;
                }
            }
        }
    }
    for (std::size_t i = 0; i < n1 * n2; ++i) {
        yp[i] /= g.v_prime[i % n1];
        yq[i] /= g.v[i % n1];
    }

    // x_J = sum_{I <= J} conj(P_{J-I}) yp_I - sum_{I < J} conj(Q_{n2-(J-I)}) yq_I.
    std::vector<Complex> x(n1 * n2);
    for (std::size_t bj = 0; bj < n2; ++bj) {
        for (std::size_t bi = 0; bi <= bj; ++bi) {
            const ComplexMatrix& pb = g.p_blocks[bj - bi];
            for (std::size_t r = 0; r < n1; ++r) {
                Complex s{};
                for (std::size_t c = 0; c < n1; ++c) {
                    s += std::conj(pb(r, c)) * yp[bi * n1 + c];
                }
                x[bj * n1 + r] += s;
            }
            if (bi < bj) {
                const ComplexMatrix& qb = g.q_blocks[n2 - (bj - bi)];
                for (std::size_t r = 0; r < n1; ++r) {
                    Complex s{};
                    for (std::size_t c = 0; c < n1; ++c) {
                        s += std::conj(qb(r, c)) * yq[bi * n1 + c];
                    }
                    x[bj * n1 + r] -= s;
                }
            }
        }
    }
    return x;
}

ComplexMatrix gh_invert(const GohbergHeinigInverse& g) {
    const std::size_t n = g.n1 * g.n2;
    ComplexMatrix inv(n, n);
    std::vector<Complex> e(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(e.begin(), e.end(), Complex{});
        e[j] = 1.0;
        const std::vector<Complex> col = gh_apply(g, e);
        for (std::size_t i = 0; i < n; ++i) {
            inv(i, j) = col[i];
        }
    }
    return inv;
}

WWREntities wwr_entities(const GohbergHeinigInverse& g, const BlockToeplitzMatrix& m,
                         const Tolerance& tolerance) {
    const std::size_t n1 = g.n1;
    const std::size_t n2 = g.n2;
    if (m.block_order() != n1 || m.block_count() != n2) {
        throw std::invalid_argument("wwr_entities: matrix dimensions differ");
    }
    require_unit_diagonal(g.p_blocks[0], "P_0");
    require_unit_diagonal(g.q_blocks[0], "Q_0");
    const ComplexMatrix p0t = transpose(g.p_blocks[0]);  // unit upper
    const ComplexMatrix q0t = transpose(g.q_blocks[0]);  // unit lower

    WWREntities w;
    w.a_blocks.push_back(ComplexMatrix::identity(n1));
    w.b_blocks.push_back(ComplexMatrix::identity(n1));
    for (std::size_t i = 1; i < n2; ++i) {
        w.a_blocks.push_back(solve_unit_upper(p0t, transpose(g.p_blocks[i])));
        w.b_blocks.push_back(solve_unit_lower(q0t, transpose(g.q_blocks[i])));
    }

    // Pf = W V' W^H with W = (P_0^T)^{-1}; Pb likewise.
    auto congruence = [n1](const ComplexMatrix& w_inv, const std::vector<double>& d) {
        ComplexMatrix scaled = w_inv;
        for (std::size_t i = 0; i < n1; ++i) {
            for (std::size_t j = 0; j < n1; ++j) {
                scaled(i, j) *= d[j];
            }
        }
        return scaled * adjoint(w_inv);
    };
    w.pf = congruence(solve_unit_upper(p0t, ComplexMatrix::identity(n1)), g.v_prime);
    w.pb = congruence(solve_unit_lower(q0t, ComplexMatrix::identity(n1)), g.v);

    // Backward coefficients multiply block rows 0..n2-1 as B_{n2-1}, ..., B_1, I.
    std::vector<ComplexMatrix> backward(w.b_blocks.rbegin(), w.b_blocks.rend());
    w.forward_residual = predictor_residual(m, w.a_blocks, w.pf, 0);
    w.backward_residual = predictor_residual(m, backward, w.pb, n2 - 1);

    double scale = std::max(1.0, w.pf.max_abs());
    for (const ComplexMatrix& a : w.a_blocks) {
        scale = std::max(scale, a.max_abs());
    }
    for (const ComplexMatrix& b : w.b_blocks) {
        scale = std::max(scale, b.max_abs());
    }
    const double tol = tolerance.for_matrix(m.max_abs(), m.order()) * scale;
    if (!(w.forward_residual <= tol) || !(w.backward_residual <= tol)) {
        throw ConsistencyError("wwr_entities: predictor equations not satisfied within tolerance");
    }
    return w;
}

}  // namespace btinv
