#include "btinv/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace btinv {

namespace {

ComplexMatrix cholesky(const ComplexMatrix& a) {
    const std::size_t n = a.rows();
    ComplexMatrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double pivot = a(j, j).real();
        for (std::size_t k = 0; k < j; ++k) {
            pivot -= std::norm(l(j, k));
        }
        if (!(pivot > 0.0)) {
            throw NotPositiveDefinite(j, j, "Cholesky oracle: non-positive pivot at " + std::to_string(j));
        }
        const double d = std::sqrt(pivot);
        l(j, j) = d;
        for (std::size_t i = j + 1; i < n; ++i) {
            Complex s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) {
                s -= l(i, k) * std::conj(l(j, k));
            }
            l(i, j) = s / d;
        }
    }
    return l;
}

// Solves L L^H x = b in place.
void substitute(const ComplexMatrix& l, std::vector<Complex>& x) {
    const std::size_t n = l.rows();
    for (std::size_t i = 0; i < n; ++i) {
        Complex s = x[i];
        for (std::size_t k = 0; k < i; ++k) {
            s -= l(i, k) * x[k];
        }
        x[i] = s / l(i, i);
    }
    for (std::size_t i = n; i-- > 0;) {
        Complex s = x[i];
        for (std::size_t k = i + 1; k < n; ++k) {
            s -= std::conj(l(k, i)) * x[k];
        }
        x[i] = s / l(i, i);
    }
}

}  // namespace

ComplexMatrix dense_cholesky_oracle(const DenseHermitianMatrix& m) { return cholesky(m.entries()); }

ComplexMatrix oracle_inverse(const DenseHermitianMatrix& m) {
    const ComplexMatrix l = cholesky(m.entries());
    const std::size_t n = m.order();
    ComplexMatrix inv(n, n);
    std::vector<Complex> x(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(x.begin(), x.end(), Complex{});
        x[j] = 1.0;
        substitute(l, x);
        for (std::size_t i = 0; i < n; ++i) {
            inv(i, j) = x[i];
        }
    }
    return inv;
}

std::vector<Complex> oracle_solve(const DenseHermitianMatrix& m, std::span<const Complex> b) {
    const ComplexMatrix l = cholesky(m.entries());
    std::vector<Complex> x(b.begin(), b.end());
    substitute(l, x);
    return x;
}

bool oracle_is_positive_definite(const ComplexMatrix& m) {
    try {
        cholesky(m);
    } catch (const NotPositiveDefinite&) {
        return false;
    }
    return true;
}

}  // namespace btinv
