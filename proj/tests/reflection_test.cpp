#include <gtest/gtest.h>

#include <cmath>

#include "btinv/diagnostics.hpp"
#include "btinv/reflection.hpp"
#include "generate.hpp"
#include "test_support.hpp"

using namespace btinv;
using btinv::testing::hermitian;

TEST(InitState, IdentityAndDiagonal) {
    const RecursionState s = init_state(DenseHermitianMatrix(ComplexMatrix::identity(3)));
    for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_EQ(s.v(k, k), 1.0);
        EXPECT_EQ(s.v_prime(k, k), 1.0);
        EXPECT_EQ(s.p(k, k).dense(), ComplexVector::basis(3, k).dense());
        EXPECT_EQ(s.q(k, k).dense(), ComplexVector::basis(3, k).dense());
    }
    const RecursionState t = init_state(hermitian(2, {2.0, 1.0, 2.0}));
    EXPECT_EQ(t.v(0, 0), 2.0);
    EXPECT_EQ(t.v(1, 1), 2.0);
}

TEST(InitState, ZeroDiagonalIsNotPositiveDefinite) {
    try {
        init_state(hermitian(2, {1.0, 0.0, 0.0}));
        FAIL() << "expected NotPositiveDefinite";
    } catch (const NotPositiveDefinite& e) {
        EXPECT_EQ(e.k(), 1u);
        EXPECT_EQ(e.l(), 1u);
    }
}

TEST(Step, HandTwoByTwo) {
    const RecursionState s = run_dense(hermitian(2, {1.0, 0.5, 1.0}));
    EXPECT_EQ(s.a(0, 1), Complex(0.5));
    EXPECT_EQ(s.a_prime(0, 1), Complex(0.5));
    EXPECT_EQ(s.p(0, 1).dense(), (std::vector<Complex>{1.0, -0.5}));
    EXPECT_EQ(s.q(0, 1).dense(), (std::vector<Complex>{-0.5, 1.0}));
    EXPECT_DOUBLE_EQ(s.v(0, 1), 0.75);
    EXPECT_DOUBLE_EQ(s.v_prime(0, 1), 0.75);
}

TEST(Step, ComplexTwoByTwo) {
    const Complex c{0.3, 0.4};
    const RecursionState s = run_dense(hermitian(2, {1.0, c, 1.0}));
    EXPECT_LE(std::abs(s.a(0, 1) - c), 1e-16);
    EXPECT_LE(std::abs(s.a_prime(0, 1) - std::conj(c)), 1e-16);
    EXPECT_NEAR(s.v(0, 1), 0.75, 1e-16);
    EXPECT_NEAR(s.v_prime(0, 1), 0.75, 1e-16);
}

TEST(Step, IdentityGivesZeroCoefficients) {
    const RecursionState s = run_dense(DenseHermitianMatrix(ComplexMatrix::identity(4)));
    for (std::size_t k = 0; k < 4; ++k) {
        for (std::size_t l = k + 1; l < 4; ++l) {
            EXPECT_EQ(s.a(k, l), Complex{});
            EXPECT_EQ(s.a_prime(k, l), Complex{});
            EXPECT_EQ(s.v(k, l), 1.0);
            EXPECT_EQ(s.p(k, l).dense(), ComplexVector::basis(4, k).dense());
        }
    }
}

TEST(Step, ExplicitDriverMatchesRunDense) {
    const DenseHermitianMatrix m = gen::dense(3, 5);
    RecursionState s = init_state(m);
    step(s, m, 0, 1, s.q(1, 1).view(), s.v(1, 1));
    step(s, m, 1, 2, s.q(2, 2).view(), s.v(2, 2));
    step(s, m, 0, 2, s.q(1, 2).view(), s.v(1, 2));
    const RecursionState ref = run_dense(m);
    EXPECT_EQ(s.p(0, 2).dense(), ref.p(0, 2).dense());
    EXPECT_EQ(s.v(0, 2), ref.v(0, 2));
}

TEST(Step, MissingPredecessorIsConsistencyError) {
    const DenseHermitianMatrix m = gen::dense(3, 5);
    RecursionState s = init_state(m);
    EXPECT_THROW(step(s, m, 0, 2, s.q(2, 2).view(), 1.0), ConsistencyError);
}

TEST(RunDense, SingleEntry) {
    const RecursionState s = run_dense(hermitian(1, {3.0}));
    EXPECT_EQ(s.v(0, 0), 3.0);
    EXPECT_EQ(s.stats.steps, 0u);
}

TEST(RunDense, InvariantsOnRandomInstances) {
    StepOptions options;
    options.check_denominators = true;
    for (const std::size_t n : {2, 5, 9, 16}) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const DenseHermitianMatrix m = gen::dense(n, seed * 100 + n);
            const RecursionState s = run_dense(m, options);
            EXPECT_LE(orthogonality_residual(s, m), 1e-9);
            EXPECT_LE(definition_residual(s, m), 1e-9);
            EXPECT_LE(s.stats.max_identity_defect, 1e-10);
            EXPECT_EQ(s.stats.identity_checks, s.stats.steps);
            EXPECT_EQ(s.stats.op_count, 4u * (n - 1) * n * (n + 1) / 6);
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t l = k; l < n; ++l) {
                    EXPECT_GT(s.v(k, l), 0.0);
                    EXPECT_GT(s.v_prime(k, l), 0.0);
                    EXPECT_EQ(s.p(k, l)[k], Complex(1.0));
                    EXPECT_EQ(s.q(k, l)[l], Complex(1.0));
                    EXPECT_GE(s.p(k, l).begin(), k);
                    EXPECT_LE(s.p(k, l).end(), l + 1);
                    EXPECT_GE(s.q(k, l).begin(), k);
                    EXPECT_LE(s.q(k, l).end(), l + 1);
                    const Complex prod = s.a(k, l) * s.a_prime(k, l);
                    EXPECT_LE(std::abs(prod.imag()), 1e-10);
                    EXPECT_LT(prod.real(), 1.0);
                }
            }
        }
    }
}

TEST(RunDense, RealToeplitzCollapsesToClassicalCoefficients) {
    const std::size_t n = 8;
    std::vector<double> r(n);
    for (std::size_t t = 0; t < n; ++t) {
        r[t] = std::pow(0.7, static_cast<double>(t)) * std::cos(0.5 * static_cast<double>(t));
    }
    ComplexMatrix full(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            full(i, j) = r[i > j ? i - j : j - i];
        }
    }
    const RecursionState s = run_dense(DenseHermitianMatrix(full));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
            EXPECT_EQ(s.a(k, l).imag(), 0.0);
            EXPECT_NEAR(s.a(k, l).real(), s.a_prime(k, l).real(), 1e-12);
            // Toeplitz: every diagonal carries one coefficient.
            EXPECT_NEAR(s.a(k, l).real(), s.a(0, l - k).real(), 1e-12);
        }
    }
}

TEST(RunDense, IndefiniteInputRaisesWithStep) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const DenseHermitianMatrix m = gen::indefinite(7, seed);
        try {
            run_dense(m);
            FAIL() << "seed " << seed << " completed";
        } catch (const NotPositiveDefinite& e) {
            EXPECT_LE(e.k(), e.l());
            EXPECT_LT(e.l(), 7u);
            EXPECT_NE(std::string(e.what()).find("(" + std::to_string(e.k())), std::string::npos);
        }
    }
}

TEST(RunDense, IndefiniteTwoByTwoFailsAtFirstStep) {
    try {
        run_dense(hermitian(2, {1.0, 2.0, 1.0}));
        FAIL();
    } catch (const NotPositiveDefinite& e) {
        EXPECT_EQ(e.k(), 0u);
        EXPECT_EQ(e.l(), 1u);
    }
}

TEST(RunDenseStreaming, MatchesFullStateBitForBit) {
    const DenseHermitianMatrix m = gen::dense(11, 77);
    const RecursionState s = run_dense(m);
    const TerminalPolynomials full = terminal_polynomials(s);
    const StreamingResult streamed = run_dense_streaming(m);
    EXPECT_EQ(streamed.stats.op_count, s.stats.op_count);
    for (std::size_t k = 0; k < 11; ++k) {
        EXPECT_EQ(streamed.terminal.p_last[k].dense(), full.p_last[k].dense());
        EXPECT_EQ(streamed.terminal.q_first[k].dense(), full.q_first[k].dense());
        EXPECT_EQ(streamed.terminal.v_prime_last[k], full.v_prime_last[k]);
        EXPECT_EQ(streamed.terminal.v_first[k], full.v_first[k]);
    }
}
