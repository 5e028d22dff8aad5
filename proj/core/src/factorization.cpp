#include "btinv/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace btinv {

namespace {

InverseFactorization build(const TerminalPolynomials& t) {
    const std::size_t n = t.n;
    InverseFactorization f;
    f.n = n;
    f.rp = ComplexMatrix(n, n);
    f.rq = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const ComplexVector& p = t.p_last[k];
        for (std::size_t i = p.begin(); i < p.end(); ++i) {
            f.rp(i, k) = p[i];
        }
        const ComplexVector& q = t.q_first[k];
        for (std::size_t i = q.begin(); i < q.end(); ++i) {
            f.rq(i, k) = q[i];
        }
    }
    f.dp = t.v_prime_last;
    f.dq = t.v_first;
    return f;
}

void verify(InverseFactorization& f, const ComplexMatrix& m, double max_abs, const Tolerance& tolerance) {
    const double base = tolerance.for_matrix(max_abs, f.n);
    f.diagonality_residual_p = diagonality_residual(f.rp, f.dp, m);
    f.diagonality_residual_q = diagonality_residual(f.rq, f.dq, m);
    const double scale_p = std::max(1.0, f.rp.max_abs());
    const double scale_q = std::max(1.0, f.rq.max_abs());
    if (!(f.diagonality_residual_p <= base * scale_p * scale_p)) {
        throw ConsistencyError("assemble: RP^T R conj(RP) is not diagonal within tolerance");
    }
    if (!(f.diagonality_residual_q <= base * scale_q * scale_q)) {
        throw ConsistencyError("assemble: RQ^T R conj(RQ) is not diagonal within tolerance");
    }
}

}  // namespace

double diagonality_residual(const ComplexMatrix& factor, std::span<const double> diagonal,
                            const ComplexMatrix& m) {
    const ComplexMatrix product = (transpose(factor) * m) * conjugate(factor);
    double out = 0.0;
    for (std::size_t i = 0; i < product.rows(); ++i) {
        for (std::size_t j = 0; j < product.cols(); ++j) {
            const Complex expected = i == j ? Complex{diagonal[i], 0.0} : Complex{};
            out = std::max(out, std::abs(product(i, j) - expected));
        }
    }
    return out;
}

InverseFactorization assemble(const TerminalPolynomials& t, const DenseHermitianMatrix& m,
                              const AssembleOptions& options) {
    InverseFactorization f = build(t);
    if (options.verify) {
        verify(f, m.entries(), m.max_abs(), options.tolerance);
    }
    return f;
}

InverseFactorization assemble(const TerminalPolynomials& t, const BlockToeplitzMatrix& m,
                              const AssembleOptions& options) {
    InverseFactorization f = build(t);
    if (options.verify) {
        verify(f, m.materialize(), m.max_abs(), options.tolerance);
    }
    return f;
}

InverseFactorization assemble(const RecursionState& state, const DenseHermitianMatrix& m,
                              const AssembleOptions& options) {
    return assemble(terminal_polynomials(state), m, options);
}

InverseFactorization assemble(const FastState& state, const BlockToeplitzMatrix& m,
                              const AssembleOptions& options) {
    return assemble(terminal_polynomials(state), m, options);
}

std::vector<Complex> solve(const InverseFactorization& f, std::span<const Complex> b, FactorSide side) {
    if (b.size() != f.n) {
        throw std::invalid_argument("solve: right-hand side has wrong length");
    }
    const ComplexMatrix& r = side == FactorSide::P ? f.rp : f.rq;
    const std::vector<double>& d = side == FactorSide::P ? f.dp : f.dq;
    const std::size_t n = f.n;

    // y = R^T b, scaled by D^{-1}.
    std::vector<Complex> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = r.row(i);
        for (std::size_t k = 0; k < n; ++k) {
            y[k] += row[k] * b[i];
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        y[k] /= d[k];
    }
    // x = conj(R) y.
    std::vector<Complex> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = r.row(i);
        Complex sum{};
        for (std::size_t k = 0; k < n; ++k) {
            sum += std::conj(row[k]) * y[k];
        }
        x[i] = sum;
    }
    return x;
}

ComplexMatrix invert(const InverseFactorization& f, FactorSide side) {
    const ComplexMatrix& r = side == FactorSide::P ? f.rp : f.rq;
    const std::vector<double>& d = side == FactorSide::P ? f.dp : f.dq;
    ComplexMatrix scaled = conjugate(r);
    for (std::size_t i = 0; i < f.n; ++i) {
        for (std::size_t k = 0; k < f.n; ++k) {
            scaled(i, k) /= d[k];
        }
    }
    return scaled * transpose(r);
}

}  // namespace btinv
