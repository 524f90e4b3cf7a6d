#include "hdq/construct.hpp"

#include "hdq/text_format.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace hdq {
namespace {

std::vector<Rational> rats(std::initializer_list<Rational> xs) { return xs; }

// <v, CT_m row L> for every L, from the recursive oracle tables.
std::vector<Rational> oracle_dots(const CRVector& v) {
    std::vector<Rational> out;
    for (const auto& row : oracle::ct_table(v.order())) out.push_back(oracle::naive_dot(v.values(), row));
    return out;
}

TEST(ConstructCrv, ZeroTargetGivesTruthTable) {
    for (int m = 2; m <= 7; ++m) {
        const CRVector v = construct_crv(PairDotVector::zeros(m));
        EXPECT_EQ(v, CRVector::all_ones(m));
        EXPECT_EQ(realize_canonical(v).expand(), to_exact(truth_table(m)));
    }
}

TEST(ConstructCrv, HandEvaluatedOrderTwo) {
    const PairDotVector a(rats({2}));
    EXPECT_EQ(unshifted_crv(a), rats({1, -1}));
    EXPECT_EQ(construct_crv(a).values(), rats({2, 0}));
    ConstructionOptions opts;
    opts.shift = ShiftPolicy::explicit_value;
    opts.explicit_shift = 5;
    EXPECT_EQ(construct_crv(a, opts).values(), rats({6, 4}));
    opts.explicit_shift = Rational(1, 2);
    EXPECT_THROW(construct_crv(a, opts), ArgumentError);
    opts.explicit_shift = 0;
    EXPECT_THROW(construct_crv(PairDotVector::zeros(3), opts), ArgumentError);
}

TEST(ConstructCrv, IntegerShift) {
    const PairDotVector a(rats({Rational(1, 2)}));
    EXPECT_EQ(construct_crv(a).values(), rats({Rational(1, 2), 0}));
    ConstructionOptions opts;
    opts.shift = ShiftPolicy::minimal_integer;
    EXPECT_EQ(construct_crv(a, opts).values(), rats({Rational(5, 4), Rational(3, 4)}));
}

TEST(ConstructCrv, ExactReevaluationOnRandomTargets) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 2 + trial % 7;
        const PairDotVector a = oracle::random_target(rng, m);
        const CRVector v = construct_crv(a);
        EXPECT_EQ(oracle_dots(v), a.values());
        bool has_zero = false;
        for (const auto& x : v.values()) has_zero = has_zero || sgn(x) == 0;
        EXPECT_TRUE(has_zero) << "minimal shift must touch zero";
        EXPECT_EQ(pairwise_dots(realize_canonical(v)), a);
    }
}

TEST(ConstructCrv, ShiftInvariance) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 2 + trial % 6;
        const PairDotVector a = oracle::random_target(rng, m);
        const Rational base = minimal_shift(unshifted_crv(a));
        ConstructionOptions opts;
        opts.shift = ShiftPolicy::explicit_value;
        opts.explicit_shift = base + oracle::random_positive_rational(rng);
        const CRVector shifted = construct_crv(a, opts);
        EXPECT_EQ(pairwise_dots(realize_canonical(shifted)), a);
        EXPECT_TRUE(same_row_dots(shifted, construct_crv(a)).in_span);
    }
}

TEST(RealizeCanonical, Examples) {
    EXPECT_EQ(realize_canonical(CRVector::all_ones(4)).expand(), to_exact(truth_table(4)));

    const HadamardesqueMatrix two = realize_canonical(CRVector(rats({2, 0})));
    ASSERT_EQ(two.columns().size(), 1u);
    EXPECT_EQ(two.columns()[0], (WeightedColumn{2, 1}));
    EXPECT_EQ(pairwise_dots(two).values(), rats({2}));

    const HadamardesqueMatrix h = realize_canonical(CRVector(rats({1, 0, 0, 1, 0, 1, 1, 0})));
    EXPECT_TRUE(is_hadamard(h.expand()));
    std::vector<ColumnIndex> cols;
    for (const auto& c : h.columns()) cols.push_back(c.col);
    EXPECT_EQ(cols, (std::vector<ColumnIndex>{1, 4, 6, 7}));

    EXPECT_THROW(realize_canonical(CRVector(rats({0, 0}))), ArgumentError);
}

TEST(UniformRational, HandEvaluatedOrderTwo) {
    const PairDotVector a(rats({Rational(1, 2)}));
    const HadamardesqueMatrix stage1 = realize_rational_entries(construct_crv(a));
    ASSERT_EQ(stage1.columns().size(), 1u);
    EXPECT_EQ(stage1.columns()[0], (WeightedColumn{Rational(1, 4), 1, 2}));

    const UniformRealization u = realize_uniform_rational(a);
    EXPECT_EQ(u.denominator, 2);
    const ExactMatrix dense = u.matrix.expand();
    EXPECT_EQ(dense, (ExactMatrix{{SignedRoot::from_rational(Rational(1, 2)), SignedRoot::from_rational(Rational(1, 2))},
                                  {SignedRoot::from_rational(Rational(1, 2)), SignedRoot::from_rational(Rational(1, 2))}}));
    EXPECT_EQ(dense_pairwise_dots(dense).values(), rats({Rational(1, 2)}));
}

TEST(UniformRational, ZeroTargetIsTruthTable) {
    const UniformRealization u = realize_uniform_rational(PairDotVector::zeros(2));
    EXPECT_EQ(u.denominator, 1);
    EXPECT_EQ(u.matrix.expand(), to_exact(truth_table(2)));
}

TEST(UniformRational, StageTwoUsesLcm) {
    // v = (1/2, 1/3): stage one gives 2 copies of c1/2 and 3 copies of c2/3;
    // d = 6 turns them into 2*9 and 3*4 copies of c/6.
    const CRVector v(rats({Rational(1, 2), Rational(1, 3)}));
    const UniformRealization u = uniformize(realize_rational_entries(v));
    EXPECT_EQ(u.denominator, 6);
    ASSERT_EQ(u.matrix.columns().size(), 2u);
    EXPECT_EQ(u.matrix.columns()[0], (WeightedColumn{Rational(1, 36), 1, 18}));
    EXPECT_EQ(u.matrix.columns()[1], (WeightedColumn{Rational(1, 36), 2, 12}));
    EXPECT_EQ(crv(u.matrix), v);
}

TEST(UniformRational, RandomTargetsAreUniformAndExact) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 2 + trial % 5;
        const PairDotVector a = oracle::random_target(rng, m, 6, 4);
        const UniformRealization u = realize_uniform_rational(a);
        const Rational q(Integer(1), Integer(u.denominator * u.denominator));
        for (const auto& c : u.matrix.columns()) ASSERT_EQ(c.q, q);
        EXPECT_EQ(crv(u.matrix), construct_crv(a));
        EXPECT_EQ(PairDotVector(oracle::pairwise_dots(u.matrix)), a);
        if (u.matrix.column_count() <= 2000) {
            const ExactMatrix dense = u.matrix.expand();
            const SignedRoot modulus = SignedRoot::from_rational(Rational(Integer(1), u.denominator));
            for (std::size_t r = 0; r < dense.rows(); ++r) {
                for (std::size_t c = 0; c < dense.cols(); ++c) {
                    ASSERT_TRUE(dense(r, c) == modulus || dense(r, c) == -modulus);
                }
            }
            EXPECT_EQ(dense_pairwise_dots(dense), a);
        }
        // Different matrix than the canonical one, same dot products.
        const HadamardesqueMatrix canonical = realize_canonical(construct_crv(a));
        EXPECT_TRUE(same_row_dots(crv(canonical), crv(u.matrix)).in_span);
        EXPECT_EQ(pairwise_dots(canonical), pairwise_dots(u.matrix));
    }
}

TEST(UniformRational, IrrationalTargetsAreInfeasible) {
    const std::vector<SignedRoot> mixed{1L, SignedRoot(1, 2), 0L, 0L, SignedRoot::from_rational(Rational(1, 3)), 0L};
    EXPECT_THROW(rational_target(mixed), InfeasibleError);
    ConstructionOptions opts;
    opts.flavor = Flavor::uniform_rational;
    EXPECT_THROW(construct(4, mixed, opts), InfeasibleError);
    opts.flavor = Flavor::uniform_irrational;
    EXPECT_THROW(construct(4, mixed, opts), InfeasibleError);
    // sqrt of a perfect square is rational and accepted.
    const std::vector<SignedRoot> fine{SignedRoot(1, 4)};
    EXPECT_EQ(rational_target(fine).values(), rats({2}));
}

TEST(UniformIrrational, Examples) {
    const UniformRealization zero = realize_uniform_irrational(PairDotVector::zeros(2));
    EXPECT_EQ(zero.matrix.column_count(), 4);
    for (const auto& c : zero.matrix.columns()) EXPECT_EQ(c.q, Rational(1, 2));
    EXPECT_TRUE(pairwise_dots(zero.matrix).is_zero());

    const UniformRealization half = realize_uniform_irrational(PairDotVector(rats({Rational(1, 2)})));
    EXPECT_EQ(half.matrix.column_count(), 4);
    const ExactMatrix dense = half.matrix.expand();
    for (std::size_t c = 0; c < dense.cols(); ++c) {
        EXPECT_EQ(dense(0, c).square(), Rational(1, 8));
        EXPECT_FALSE(dense(0, c).is_rational());
    }
    EXPECT_EQ(dense_pairwise_dots(dense).values(), rats({Rational(1, 2)}));
}

TEST(UniformIrrational, RandomTargets) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = 2 + trial % 5;
        const PairDotVector a = oracle::random_target(rng, m, 6, 4);
        const UniformRealization u = realize_uniform_irrational(a);
        const Rational q(Integer(1), Integer(2 * u.denominator * u.denominator));
        for (const auto& c : u.matrix.columns()) {
            ASSERT_EQ(c.q, q);
            ASSERT_FALSE(exact_sqrt(c.q).has_value());
        }
        EXPECT_EQ(PairDotVector(oracle::pairwise_dots(u.matrix)), a);
    }
}

TEST(Construct, DispatchAndExpansion) {
    const std::vector<SignedRoot> target{2L};
    ConstructionOptions opts;
    opts.expand = true;
    const Realization r = construct(2, target, opts);
    ASSERT_TRUE(r.dense.has_value());
    EXPECT_EQ(format_matrix(*r.dense), "2 1\nsqrt(2)\nsqrt(2)\n");
    EXPECT_FALSE(r.denominator.has_value());
    EXPECT_THROW(construct(3, target, opts), ArgumentError);

    opts.flavor = Flavor::uniform_rational;
    opts.column_cap = 1;
    EXPECT_THROW(construct(2, target, opts), ResourceError);
}

}  // namespace
}  // namespace hdq
