#include "hdq/walsh.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace hdq {
namespace {

SignMatrix from_grid(const oracle::Grid& g) {
    SignMatrix out(g.size(), g[0].size());
    for (std::size_t r = 0; r < g.size(); ++r) {
        for (std::size_t c = 0; c < g[0].size(); ++c) out(r, c) = g[r][c];
    }
    return out;
}

TEST(Sylvester, SmallOrdersMatchPrintedMatrices) {
    EXPECT_EQ(sylvester(0), (SignMatrix{{1}}));
    EXPECT_EQ(sylvester(1), (SignMatrix{{1, 1}, {1, -1}}));
    EXPECT_EQ(sylvester(2), (SignMatrix{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}}));
}

TEST(Sylvester, EqualsKroneckerPowerOfH2) {
    const SignMatrix h2 = sylvester(1);
    SignMatrix power{{1}};
    for (int k = 0; k <= 10; ++k) {
        EXPECT_EQ(sylvester(k), power) << "k=" << k;
        EXPECT_EQ(sylvester(k), from_grid(oracle::sylvester(k))) << "k=" << k;
        power = kronecker(h2, power);
    }
}

TEST(Sylvester, GramIsScaledIdentity) {
    for (int k = 0; k <= 6; ++k) {
        const SignMatrix h = sylvester(k);
        const long n = static_cast<long>(h.rows());
        for (std::size_t a = 0; a < h.rows(); ++a) {
            for (std::size_t b = 0; b < h.rows(); ++b) {
                long dot = 0;
                for (std::size_t c = 0; c < h.cols(); ++c) dot += h(a, c) * h(b, c);
                ASSERT_EQ(dot, a == b ? n : 0);
            }
        }
    }
}

TEST(Sylvester, RejectsHugeOrders) {
    EXPECT_THROW(sylvester(20), ResourceError);
    EXPECT_THROW(sylvester(-1), ArgumentError);
}

TEST(Kronecker, IdentityFactors) {
    const SignMatrix a{{1, -1, 1}, {-1, -1, 1}};
    const SignMatrix one{{1}};
    EXPECT_EQ(kronecker(a, one), a);
    EXPECT_EQ(kronecker(one, a), a);
    EXPECT_EQ(kronecker(sylvester(1), sylvester(1)), sylvester(2));
}

TEST(Kronecker, Dimensions) {
    const Matrix<long> a(2, 3, 2);
    const Matrix<long> b(4, 5, 3);
    const auto k = kronecker(a, b);
    EXPECT_EQ(k.rows(), 8u);
    EXPECT_EQ(k.cols(), 15u);
    EXPECT_EQ(k(7, 14), 6);
}

TEST(TruthTable, PrintedMatrices) {
    EXPECT_EQ(truth_table(1), (SignMatrix{{1}}));
    EXPECT_EQ(truth_table(2), (SignMatrix{{1, 1}, {1, -1}}));
    EXPECT_EQ(truth_table(3), (SignMatrix{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}}));
    EXPECT_EQ(truth_table(4), (SignMatrix{{1, 1, 1, 1, 1, 1, 1, 1},
                                          {1, -1, 1, -1, 1, -1, 1, -1},
                                          {1, 1, -1, -1, 1, 1, -1, -1},
                                          {1, 1, 1, 1, -1, -1, -1, -1}}));
}

TEST(TruthTable, MatchesRecursion) {
    for (int m = 1; m <= 12; ++m) EXPECT_EQ(truth_table(m), from_grid(oracle::truth_table(m))) << m;
}

TEST(TruthTable, RowsSitInSylvester) {
    for (int m = 2; m <= 12; ++m) {
        const SignMatrix h = sylvester(m - 1);
        const SignMatrix t = truth_table(m);
        for (int k = 1; k <= m; ++k) {
            const std::size_t hrow = k == 1 ? 0 : (std::size_t{1} << (k - 2));
            for (std::size_t c = 0; c < t.cols(); ++c) {
                ASSERT_EQ(t(static_cast<std::size_t>(k - 1), c), h(hrow, c)) << m << ' ' << k;
            }
        }
    }
}

TEST(TruthTable, RowsOrthogonal) {
    for (int m = 2; m <= 10; ++m) {
        const SignMatrix t = truth_table(m);
        for (std::size_t a = 0; a < t.rows(); ++a) {
            for (std::size_t b = a + 1; b < t.rows(); ++b) {
                long dot = 0;
                for (std::size_t c = 0; c < t.cols(); ++c) dot += t(a, c) * t(b, c);
                ASSERT_EQ(dot, 0);
            }
        }
    }
}

TEST(TruthTable, EntryErrors) {
    EXPECT_THROW(truth_table_entry(3, 0, 1), ArgumentError);
    EXPECT_THROW(truth_table_entry(3, 4, 1), ArgumentError);
    EXPECT_THROW(truth_table_entry(3, 1, 5), ArgumentError);
    EXPECT_THROW(truth_table_entry(3, 1, 0), ArgumentError);
    EXPECT_THROW(truth_table(17), ArgumentError);
    EXPECT_EQ(truth_table_entry(64, 64, ColumnIndex{1} << 63), -1);
}

TEST(SignColumn, ParentFollowsRecursion) {
    for (int m = 2; m <= 8; ++m) {
        for (ColumnIndex j = 1; j <= column_count(m); ++j) {
            const SignColumn c(m, j);
            const SignColumn p = c.parent();
            for (int k = 1; k < m; ++k) ASSERT_EQ(c.entry(k), p.entry(k));
            ASSERT_EQ(c.entry(m), j <= column_count(m - 1) ? 1 : -1);
            ASSERT_EQ(SignColumn::from_signs(c.signs()), c);
        }
    }
    EXPECT_THROW(SignColumn(1, 1).parent(), ArgumentError);
    const std::vector<int> bad{-1, 1};
    EXPECT_THROW(SignColumn::from_signs(bad), ArgumentError);
}

TEST(PairIndex, LinearBijection) {
    for (int m = 2; m <= 20; ++m) {
        std::set<std::size_t> seen;
        for (const auto& p : all_pairs(m)) {
            const std::size_t l = p.linear();
            EXPECT_GE(l, 1u);
            EXPECT_LE(l, pair_count(m));
            EXPECT_TRUE(seen.insert(l).second);
            EXPECT_EQ(PairIndex::from_linear(l), p);
        }
        EXPECT_EQ(seen.size(), pair_count(m));
    }
    EXPECT_EQ((PairIndex{1, 2}.linear()), 1u);
    EXPECT_EQ((PairIndex{2, 3}.linear()), 3u);
    EXPECT_EQ((PairIndex{1, 4}.linear()), 4u);
    EXPECT_THROW(PairIndex::make(4, 2, 2), ArgumentError);
    EXPECT_THROW(PairIndex::make(4, 1, 5), ArgumentError);
}

TEST(CppVector, Examples) {
    EXPECT_EQ(cpp_vector(std::vector<int>{1, -1, 1}), (std::vector<int>{-1, 1, -1}));
    EXPECT_EQ(cpp_vector(std::vector<int>(5, 1)), std::vector<int>(10, 1));
    EXPECT_EQ(cpp_vector(std::vector<int>{2, 2, -2}), (std::vector<int>{4, -4, -4}));
    EXPECT_THROW(cpp_vector(std::vector<int>{1}), ArgumentError);
}

TEST(CppVector, EvenUnderNegation) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> v(2 + trial % 9);
        for (auto& x : v) x = coord(rng);
        std::vector<double> neg(v);
        for (auto& x : neg) x = -x;
        EXPECT_EQ(cpp_vector(v), cpp_vector(neg));
    }
}

TEST(CtTable, PrintedMatrices) {
    EXPECT_EQ(ct_table(2), (SignMatrix{{1, -1}}));
    EXPECT_EQ(ct_table(3), (SignMatrix{{1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}}));
    EXPECT_EQ(ct_table(4), (SignMatrix{{1, -1, 1, -1, 1, -1, 1, -1},
                                       {1, 1, -1, -1, 1, 1, -1, -1},
                                       {1, -1, -1, 1, 1, -1, -1, 1},
                                       {1, 1, 1, 1, -1, -1, -1, -1},
                                       {1, -1, 1, -1, -1, 1, -1, 1},
                                       {1, 1, -1, -1, -1, -1, 1, 1}}));
}

TEST(CtTable, RowsAreHadamardRowsAtPairMasks) {
    for (int m = 2; m <= 12; ++m) {
        const SignMatrix h = sylvester(m - 1);
        const oracle::Grid ct = oracle::ct_table(m);
        ASSERT_EQ(ct_table(m), from_grid(ct));
        for (const auto& p : all_pairs(m)) {
            const RowMask mask = pair_to_mask(p);
            for (ColumnIndex j = 1; j <= column_count(m); ++j) {
                ASSERT_EQ(ct_table_entry(m, p.linear(), j), h(mask, j - 1));
                ASSERT_EQ(ct[p.linear() - 1][j - 1], h(mask, j - 1));
            }
        }
    }
}

TEST(CtTable, RecursionByConcatenation) {
    // CT_m = [(r, r) for rows r of CT_(m-1)] over [(t, -t) for rows t of T_(m-1)].
    for (int m = 3; m <= 9; ++m) {
        const SignMatrix prev_ct = ct_table(m - 1);
        const SignMatrix prev_t = truth_table(m - 1);
        const SignMatrix ct = ct_table(m);
        const std::size_t half = prev_t.cols();
        for (std::size_t r = 0; r < prev_ct.rows(); ++r) {
            for (std::size_t c = 0; c < half; ++c) {
                ASSERT_EQ(ct(r, c), prev_ct(r, c));
                ASSERT_EQ(ct(r, c + half), prev_ct(r, c));
            }
        }
        for (std::size_t r = 0; r < prev_t.rows(); ++r) {
            for (std::size_t c = 0; c < half; ++c) {
                ASSERT_EQ(ct(prev_ct.rows() + r, c), prev_t(r, c));
                ASSERT_EQ(ct(prev_ct.rows() + r, c + half), -prev_t(r, c));
            }
        }
    }
}

TEST(CtTable, RowsOrthogonalToEachOtherAndOnes) {
    for (int m = 2; m <= 9; ++m) {
        const SignMatrix ct = ct_table(m);
        for (std::size_t a = 0; a < ct.rows(); ++a) {
            long ones = 0;
            for (std::size_t c = 0; c < ct.cols(); ++c) ones += ct(a, c);
            ASSERT_EQ(ones, 0);
            for (std::size_t b = a + 1; b < ct.rows(); ++b) {
                long dot = 0;
                for (std::size_t c = 0; c < ct.cols(); ++c) dot += ct(a, c) * ct(b, c);
                ASSERT_EQ(dot, 0);
            }
        }
    }
}

TEST(CtTable, EntryErrors) {
    EXPECT_THROW(ct_table_entry(3, 0, 1), ArgumentError);
    EXPECT_THROW(ct_table_entry(3, 4, 1), ArgumentError);
    EXPECT_THROW(ct_table_entry(1, 1, 1), ArgumentError);
}

TEST(Masks, Examples) {
    EXPECT_EQ(rm_masks(2), (std::vector<RowMask>{1}));
    EXPECT_EQ(rc_masks(2), (std::vector<RowMask>{0}));
    EXPECT_EQ(rm_masks(3), (std::vector<RowMask>{1, 2, 3}));
    EXPECT_EQ(rc_masks(3), (std::vector<RowMask>{0}));
    EXPECT_EQ(pair_to_mask({1, 2}), 1u);
    EXPECT_EQ(rc_masks(4), (std::vector<RowMask>{0, 7}));
}

TEST(Masks, Cardinalities) {
    for (int m = 2; m <= 16; ++m) {
        const auto rm = rm_masks(m);
        EXPECT_EQ(std::set<RowMask>(rm.begin(), rm.end()).size(), pair_count(m));
        EXPECT_EQ(rc_masks(m).size(), column_count(m) - pair_count(m));
        EXPECT_EQ(rc_masks(m).front(), 0u);
    }
}

TEST(Wht, Examples) {
    EXPECT_EQ(wht(std::vector<long>{1, 1, 1, 1}), (std::vector<long>{4, 0, 0, 0}));
    EXPECT_EQ(wht(std::vector<long>{1, 0, 0, 0}), (std::vector<long>{1, 1, 1, 1}));
    const std::vector<long> v{7, 9, 0, 0, 5, 1, 0, 1};
    const auto h = oracle::sylvester(3);
    std::vector<long> expected;
    for (const auto& row : h) expected.push_back(oracle::naive_dot(v, row));
    EXPECT_EQ(wht(v), expected);
}

TEST(Wht, MatchesNaiveOnRandomRationals) {
    std::mt19937_64 rng(11);
    for (int k = 0; k <= 8; ++k) {
        const auto h = oracle::sylvester(k);
        std::vector<Rational> v(h.size());
        for (auto& x : v) x = oracle::random_rational(rng);
        const auto spectrum = wht(v);
        for (std::size_t u = 0; u < h.size(); ++u) ASSERT_EQ(spectrum[u], oracle::naive_dot(v, h[u]));
        auto twice = wht(spectrum);
        for (std::size_t i = 0; i < v.size(); ++i) ASSERT_EQ(twice[i], v[i] * static_cast<long>(v.size()));
    }
}

TEST(Wht, RejectsNonPowerOfTwo) {
    EXPECT_THROW(wht(std::vector<long>{1, 2, 3}), ArgumentError);
    EXPECT_THROW(wht(std::vector<long>{}), ArgumentError);
}

}  // namespace
}  // namespace hdq
