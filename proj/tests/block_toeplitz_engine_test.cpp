#include <gtest/gtest.h>

#include <set>

#include "btinv/block_toeplitz_engine.hpp"
#include "btinv/diagnostics.hpp"
#include "generate.hpp"
#include "test_support.hpp"

using namespace btinv;
using btinv::testing::brute_force_opcount;
using btinv::testing::identity_blocks;
using btinv::testing::scalar_toeplitz;

TEST(Canonical, Examples) {
    EXPECT_EQ(canonical(0, 5, 2), (CanonicalIndex{0, 5, 0}));
    EXPECT_EQ(canonical(3, 5, 2), (CanonicalIndex{1, 3, 2}));
    EXPECT_EQ(canonical(5, 7, 3), (CanonicalIndex{2, 4, 3}));
    EXPECT_EQ(canonical(4, 4, 1), (CanonicalIndex{0, 0, 4}));
}

TEST(Canonical, IsIdempotent) {
    for (std::size_t n1 = 1; n1 <= 4; ++n1) {
        for (std::size_t k = 0; k < 12; ++k) {
            for (std::size_t l = k; l < 12; ++l) {
                const CanonicalIndex c = canonical(k, l, n1);
                EXPECT_LT(c.k, n1);
                EXPECT_EQ(c.k + c.shift, k);
                EXPECT_EQ(c.l + c.shift, l);
                EXPECT_EQ(canonical(c.k, c.l, n1), (CanonicalIndex{c.k, c.l, 0}));
            }
        }
    }
}

TEST(RunBlockToeplitz, ScalarTwoByTwo) {
    const FastState s = run_block_toeplitz(scalar_toeplitz({1.0, 0.5}));
    const QueryResult r = query(s, 0, 1);
    EXPECT_EQ(r.a, Complex(0.5));
    EXPECT_EQ(r.a_prime, Complex(0.5));
    EXPECT_DOUBLE_EQ(r.v, 0.75);
    EXPECT_EQ(ComplexVector(r.p).dense(), (std::vector<Complex>{1.0, -0.5}));
    EXPECT_EQ(ComplexVector(r.q).dense(), (std::vector<Complex>{-0.5, 1.0}));
}

TEST(RunBlockToeplitz, SingleBlockEqualsDense) {
    for (std::size_t n1 = 1; n1 <= 5; ++n1) {
        const BlockToeplitzMatrix m = gen::block_toeplitz(n1, 1, n1);
        const FastState fast = run_block_toeplitz(m);
        const RecursionState dense = run_dense(m.to_dense());
        EXPECT_EQ(fast_dense_discrepancy(fast, dense), 0.0);
        EXPECT_EQ(fast.boundary_rule_count, 0u);
    }
}

TEST(RunBlockToeplitz, IdentityBlocks) {
    const FastState s = run_block_toeplitz(identity_blocks(3, 4));
    for (std::size_t k = 0; k < 12; ++k) {
        for (std::size_t l = k; l < 12; ++l) {
            const QueryResult r = query(s, k, l);
            EXPECT_EQ(r.a, Complex{});
            EXPECT_EQ(r.v, 1.0);
            EXPECT_EQ(ComplexVector(r.p).dense(), ComplexVector::basis(12, k).dense());
            EXPECT_EQ(ComplexVector(r.q).dense(), ComplexVector::basis(12, l).dense());
        }
    }
}

TEST(RunBlockToeplitz, AgreesWithDenseRecursionOnGrid) {
    for (std::size_t n1 = 1; n1 <= 4; ++n1) {
        for (std::size_t n2 = 1; n2 <= 8; ++n2) {
            for (std::uint64_t seed = 0; seed < 2; ++seed) {
                const BlockToeplitzMatrix m = gen::block_toeplitz(n1, n2, 1000 * seed + 10 * n1 + n2);
                const FastState fast = run_block_toeplitz(m);
                const RecursionState dense = run_dense(m.to_dense());
                EXPECT_LE(fast_dense_discrepancy(fast, dense), 1e-10) << n1 << "x" << n2;
            }
        }
    }
}

TEST(RunBlockToeplitz, ScheduleVisitsEachOffDiagonalCanonicalIndexOnce) {
    for (std::size_t n1 = 1; n1 <= 4; ++n1) {
        for (std::size_t n2 = 1; n2 <= 6; ++n2) {
            const FastState s = run_block_toeplitz(identity_blocks(n1, n2));
            std::set<std::pair<std::size_t, std::size_t>> seen(s.visits.begin(), s.visits.end());
            EXPECT_EQ(seen.size(), s.visits.size());
            std::set<std::pair<std::size_t, std::size_t>> expected;
            for (std::size_t k = 0; k < n1; ++k) {
                for (std::size_t l = k + 1; l < n1 * n2; ++l) {
                    expected.insert({k, l});
                }
            }
            EXPECT_EQ(seen, expected);
            EXPECT_EQ(s.boundary_rule_count, (n2 - 1) * n1);
            EXPECT_EQ(s.stats.steps, s.visits.size());
        }
    }
}

TEST(RunBlockToeplitz, PredecessorsComputedBeforeUse) {
    const FastState s = run_block_toeplitz(identity_blocks(3, 4));
    std::set<std::pair<std::size_t, std::size_t>> done;
    const std::size_t n1 = 3;
    auto available = [&](std::size_t k, std::size_t l) {
        const CanonicalIndex c = canonical(k, l, n1);
        return c.k == c.l || done.count({c.k, c.l}) > 0;
    };
    for (const auto& [k, l] : s.visits) {
        EXPECT_TRUE(available(k, l - 1)) << k << "," << l;
        EXPECT_TRUE(available(k + 1, l)) << k << "," << l;
        done.insert({k, l});
    }
}

TEST(RunBlockToeplitz, OpCountMatchesClosedForm) {
    for (std::size_t n1 = 1; n1 <= 5; ++n1) {
        for (std::size_t n2 = 1; n2 <= 6; ++n2) {
            const FastState s = run_block_toeplitz(gen::block_toeplitz(n1, n2, 3));
            EXPECT_EQ(static_cast<double>(s.stats.op_count), predicted_opcount(n1, n2, 4.0));
        }
    }
    EXPECT_EQ(predicted_opcount(2, 3, 4.0), 100.0);
}

TEST(PredictedOpcount, EqualsTermByTermSum) {
    for (std::size_t n1 = 1; n1 <= 8; ++n1) {
        for (std::size_t n2 = 1; n2 <= 8; ++n2) {
            EXPECT_EQ(predicted_opcount(n1, n2, 1.0), brute_force_opcount(n1, n2, 1.0));
            EXPECT_EQ(predicted_opcount(n1, n2, 4.0), brute_force_opcount(n1, n2, 4.0));
        }
    }
}

TEST(PredictedOpcount, MonotoneInBothArguments) {
    for (std::size_t n1 = 1; n1 <= 6; ++n1) {
        for (std::size_t n2 = 1; n2 <= 6; ++n2) {
            EXPECT_LE(predicted_opcount(n1, n2, 1.0), predicted_opcount(n1 + 1, n2, 1.0));
            EXPECT_LE(predicted_opcount(n1, n2, 1.0), predicted_opcount(n1, n2 + 1, 1.0));
        }
    }
}

TEST(Query, OutOfRange) {
    const FastState s = run_block_toeplitz(identity_blocks(2, 2));
    EXPECT_THROW(query(s, 2, 1), std::out_of_range);
    EXPECT_THROW(query(s, 0, 4), std::out_of_range);
}

TEST(FastState, MissingEntryIsConsistencyError) {
    const FastState s(2, 2);
    EXPECT_THROW(s.canonical_entry(0, 3), ConsistencyError);
}

TEST(RunBlockToeplitz, IndefiniteRaises) {
    EXPECT_THROW(run_block_toeplitz(scalar_toeplitz({1.0, 0.9, -0.9})), NotPositiveDefinite);
    EXPECT_THROW(run_block_toeplitz(scalar_toeplitz({1.0, 1.5})), NotPositiveDefinite);
}
