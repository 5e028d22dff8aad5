#include "selftest.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "bench.hpp"
#include "btinv/btinv.hpp"
#include "generate.hpp"

namespace btinv::cli {

namespace {

std::string describe(double value, double limit) {
    std::ostringstream s;
    s.precision(3);
    s << "max " << value << " (limit " << limit << ")";
    return s.str();
}

template <class Body>
CheckResult check(const std::string& name, double limit, Body&& body) {
    CheckResult r{name, false, {}};
    try {
        const double value = body();
        r.passed = value <= limit;
        r.detail = describe(value, limit);
    } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

StepOptions strict_options(const Tolerance& tolerance) {
    StepOptions o;
    o.check_identity = true;
    o.check_denominators = true;
    o.tolerance = tolerance;
    return o;
}

}  // namespace

std::vector<CheckResult> run_selftest(std::size_t max_n, const Tolerance& tolerance) {
    std::vector<CheckResult> results;
    const StepOptions options = strict_options(tolerance);

    std::vector<std::size_t> dense_sizes;
    for (std::size_t n : {1, 2, 3, 8, 16, 32}) {
        if (n <= max_n) {
            dense_sizes.push_back(n);
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> grid;
    for (std::size_t n1 = 1; n1 <= 3; ++n1) {
        for (std::size_t n2 = 1; n2 <= 4; ++n2) {
            if (n1 * n2 <= max_n) {
                grid.emplace_back(n1, n2);
            }
        }
    }

    results.push_back(check("dense-vs-fast equivalence", 1e-10, [&] {
        double worst = 0.0;
        for (const auto& [n1, n2] : grid) {
            const BlockToeplitzMatrix m = gen::block_toeplitz(n1, n2, 11 * n1 + n2);
            const FastState fast = run_block_toeplitz(m, options);
            const RecursionState dense = run_dense(m.to_dense(), options);
            worst = std::max(worst, fast_dense_discrepancy(fast, dense));
        }
        return worst;
    }));

    results.push_back(check("conjugate numerator identity", 1e-10, [&] {
        double worst = 0.0;
        for (const std::size_t n : dense_sizes) {
            worst = std::max(worst, run_dense(gen::dense(n, n), options).stats.max_identity_defect);
        }
        for (const auto& [n1, n2] : grid) {
            const FastState fast = run_block_toeplitz(gen::block_toeplitz(n1, n2, n1 + 7 * n2), options);
            worst = std::max(worst, fast.stats.max_identity_defect);
        }
        return worst;
    }));

    results.push_back(check("orthogonality", 1e-9, [&] {
        double worst = 0.0;
        for (const std::size_t n : dense_sizes) {
            const DenseHermitianMatrix m = gen::dense(n, 100 + n);
            worst = std::max(worst, orthogonality_residual(run_dense(m, options), m));
        }
        return worst;
    }));

    results.push_back(check("factor diagonality, residual over tolerance", 1.0, [&] {
        double worst = 0.0;
        for (const std::size_t n : dense_sizes) {
            const DenseHermitianMatrix m = gen::dense(n, 200 + n);
            AssembleOptions ao;
            ao.tolerance = tolerance;
            const InverseFactorization f = assemble(run_dense(m, options), m, ao);
            const double tol = tolerance.for_matrix(m.max_abs(), n);
            worst = std::max({worst, f.diagonality_residual_p / tol, f.diagonality_residual_q / tol});
        }
        return worst;
    }));

    results.push_back(check("two-sided inverse agreement", 1e-9, [&] {
        double worst = 0.0;
        for (const std::size_t n : dense_sizes) {
            const DenseHermitianMatrix m = gen::dense(n, 300 + n);
            const InverseFactorization f = assemble(run_dense_streaming(m, options).terminal, m);
            const ComplexMatrix ip = invert(f, FactorSide::P);
            worst = std::max(worst, max_abs_difference(ip, invert(f, FactorSide::Q)));
            if (max_abs_difference(ip, oracle_inverse(m)) > 1e-8) {
                return 1.0;
            }
        }
        return worst;
    }));

    results.push_back(check("gohberg-heinig vs triangular", 1e-8, [&] {
        double worst = 0.0;
        std::mt19937_64 rng(5);
        for (const auto& [n1, n2] : grid) {
            if (n2 < 2) {
                continue;
            }
            const BlockToeplitzMatrix m = gen::block_toeplitz(n1, n2, 400 + n1 * n2);
            const FastState fast = run_block_toeplitz(m, options);
            const GohbergHeinigInverse g = gohberg_heinig(fast, m, tolerance);
            const InverseFactorization f = assemble(fast, m);
            for (int trial = 0; trial < 5; ++trial) {
                const std::vector<Complex> b = gen::vector(m.order(), rng);
                worst = std::max(worst, max_abs_difference(gh_apply(g, b), solve(f, b)));
            }
            worst = std::max({worst, g.construction_residual_p, g.construction_residual_q});
        }
        return worst;
    }));

    results.push_back(check("WWR residuals", 1e-8, [&] {
        double worst = 0.0;
        for (const auto& [n1, n2] : grid) {
            if (n2 < 2) {
                continue;
            }
            const BlockToeplitzMatrix m = gen::block_toeplitz(n1, n2, 500 + n1 * n2);
            const GohbergHeinigInverse g = gohberg_heinig(run_block_toeplitz(m, options), m, tolerance);
            const WWREntities w = wwr_entities(g, m, tolerance);
            if (!oracle_is_positive_definite(w.pf) || !oracle_is_positive_definite(w.pb)) {
                return 1.0;
            }
            worst = std::max({worst, w.forward_residual, w.backward_residual});
        }
        return worst;
    }));

    results.push_back(check("op-count scaling", 0.15, [&] {
        std::vector<double> n2s;
        std::vector<double> ops;
        std::vector<std::size_t> sizes;
        for (const std::size_t n2 : {4, 8, 16, 32}) {
            if (2 * n2 <= max_n) {
                sizes.push_back(n2);
            }
        }
        if (sizes.size() > 3) {
            sizes.erase(sizes.begin());
        }
        for (const std::size_t n2 : sizes) {
            const FastState fast = run_block_toeplitz(gen::block_toeplitz(2, n2, 600 + n2));
            if (static_cast<double>(fast.stats.op_count) != predicted_opcount(2, n2, 4.0)) {
                return 1.0;
            }
            n2s.push_back(static_cast<double>(n2));
            ops.push_back(static_cast<double>(fast.stats.op_count));
        }
        const auto slope = loglog_slope(n2s, ops);
        return slope ? std::abs(*slope - 2.0) : 0.0;
    }));

    results.push_back(check("not-positive-definite detection", 0.0, [&] {
        double failures = 0.0;
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const DenseHermitianMatrix m = gen::indefinite(std::min<std::size_t>(6, max_n), 700 + seed);
            try {
                run_dense(m, options);
                failures += 1.0;
            } catch (const NotPositiveDefinite&) {
            }
        }
        return failures;
    }));

    return results;
}

}  // namespace btinv::cli
