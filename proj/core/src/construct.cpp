#include "hdq/construct.hpp"

#include <algorithm>

namespace hdq {

std::vector<Rational> unshifted_crv(const PairDotVector& a) {
    const int m = a.order();
    check_order(m, kMaxVectorOrder, 2);
    std::vector<Rational> spectrum(column_count(m), Rational(0));
    const auto masks = rm_masks(m);
    for (std::size_t l = 0; l < masks.size(); ++l) spectrum[masks[l]] = a.values()[l];
    // The transform is its own inverse up to the factor N.
    auto v = wht(std::move(spectrum));
    const Rational scale(1, column_count(m));
    for (auto& x : v) x *= scale;
    return v;
}

Rational minimal_shift(std::span<const Rational> unshifted) {
    Rational s = 0;
    for (const auto& x : unshifted) s = std::max(s, Rational(-x));
    return s;
}

CRVector construct_crv(const PairDotVector& a, const ConstructionOptions& opts) {
    const int m = a.order();
    check_order(m, kMaxVectorOrder, 2);
    if (a.is_zero() && opts.shift != ShiftPolicy::explicit_value) return CRVector::all_ones(m);

    auto v = unshifted_crv(a);
    Rational s;
    switch (opts.shift) {
    case ShiftPolicy::minimal:
        s = minimal_shift(v);
        break;
    case ShiftPolicy::minimal_integer: {
        const Rational exact = minimal_shift(v);
        Integer ceil;
        mpz_cdiv_q(ceil.get_mpz_t(), exact.get_num_mpz_t(), exact.get_den_mpz_t());
        s = ceil;
        break;
    }
    case ShiftPolicy::explicit_value:
        s = opts.explicit_shift;
        if (s < minimal_shift(v)) {
            throw ArgumentError("shift " + format_rational(s) +
                                " leaves a negative CRV coordinate; need at least " +
                                format_rational(minimal_shift(v)));
        }
        break;
    }
    bool any_positive = false;
    for (auto& x : v) {
        x += s;
        any_positive = any_positive || sgn(x) > 0;
    }
    if (!any_positive) throw ArgumentError("shift 0 on a zero target gives an empty matrix");
    return CRVector(std::move(v));
}

HadamardesqueMatrix realize_canonical(const CRVector& v) {
    std::vector<WeightedColumn> columns;
    for (ColumnIndex j = 1; j <= v.values().size(); ++j) {
        if (sgn(v[j]) > 0) columns.push_back({v[j], j});
    }
    if (columns.empty()) throw ArgumentError("the zero CRV has no realization");
    return {v.order(), std::move(columns)};
}

HadamardesqueMatrix realize_rational_entries(const CRVector& v) {
    std::vector<WeightedColumn> columns;
    for (ColumnIndex j = 1; j <= v.values().size(); ++j) {
        const Rational& x = v[j];
        if (sgn(x) == 0) continue;
        const Integer& p = x.get_num();
        const Integer& q = x.get_den();
        columns.push_back({Rational(Integer(1), Integer(q * q)), j, Integer(p * q)});
    }
    if (columns.empty()) throw ArgumentError("the zero CRV has no realization");
    return {v.order(), std::move(columns)};
}

UniformRealization uniformize(const HadamardesqueMatrix& m) {
    Integer d = 1;
    std::vector<Rational> scales;
    scales.reserve(m.columns().size());
    for (const auto& c : m.columns()) {
        auto r = exact_sqrt(c.q);
        if (!r) {
            throw InfeasibleError("column scale sqrt(" + format_rational(c.q) +
                                  ") is irrational; cannot uniformize");
        }
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), r->get_den_mpz_t());
        scales.push_back(*r);
    }
    std::vector<WeightedColumn> columns;
    columns.reserve(scales.size());
    const Rational q(Integer(1), Integer(d * d));
    for (std::size_t k = 0; k < scales.size(); ++k) {
        const auto& c = m.columns()[k];
        // (n/d_i) c with multiplicity k becomes k n^2 (d/d_i)^2 copies of (1/d) c.
        const Integer ratio = d / scales[k].get_den();
        const Integer& n = scales[k].get_num();
        columns.push_back({q, c.col, Integer(c.multiplicity * n * n * ratio * ratio)});
    }
    return {HadamardesqueMatrix(m.order(), std::move(columns)), d};
}

PairDotVector rational_target(std::span<const SignedRoot> target) {
    std::vector<Rational> a;
    a.reserve(target.size());
    for (std::size_t l = 0; l < target.size(); ++l) {
        auto r = target[l].to_rational();
        if (!r) {
            throw InfeasibleError(
                "target coordinate " + std::to_string(l + 1) + " = " + format_entry(target[l]) +
                " is irrational; row dot products of a matrix with entries ±r are integer "
                "multiples of r^2, so no uniform-entry realization exists");
        }
        a.push_back(*r);
    }
    return PairDotVector(std::move(a));
}

UniformRealization realize_uniform_rational(const PairDotVector& a, const ConstructionOptions& opts) {
    const CRVector v = construct_crv(a, opts);
    return uniformize(realize_rational_entries(v));
}

UniformRealization realize_uniform_irrational(const PairDotVector& a,
                                              const ConstructionOptions& opts) {
    UniformRealization base = realize_uniform_rational(a, opts);
    const Rational q(Integer(1), Integer(2 * base.denominator * base.denominator));
    std::vector<WeightedColumn> columns;
    columns.reserve(base.matrix.columns().size());
    for (const auto& c : base.matrix.columns()) {
        columns.push_back({q, c.col, Integer(2 * c.multiplicity)});
    }
    return {HadamardesqueMatrix(base.matrix.order(), std::move(columns)), base.denominator};
}

Realization construct(int m, std::span<const SignedRoot> target, const ConstructionOptions& opts) {
    check_order(m, kMaxVectorOrder, 2);
    if (target.size() != pair_count(m)) {
        throw ArgumentError("m=" + std::to_string(m) + " needs " + std::to_string(pair_count(m)) +
                            " target values, got " + std::to_string(target.size()));
    }
    const PairDotVector a = rational_target(target);
    const CRVector v = construct_crv(a, opts);

    std::optional<HadamardesqueMatrix> matrix;
    std::optional<Integer> d;
    switch (opts.flavor) {
    case Flavor::canonical:
        matrix = realize_canonical(v);
        break;
    case Flavor::uniform_rational: {
        auto u = realize_uniform_rational(a, opts);
        matrix = std::move(u.matrix);
        d = u.denominator;
        break;
    }
    case Flavor::uniform_irrational: {
        auto u = realize_uniform_irrational(a, opts);
        matrix = std::move(u.matrix);
        d = u.denominator;
        break;
    }
    }
    Realization out{v, std::move(*matrix), d, std::nullopt};
    if (opts.expand) out.dense = out.matrix.expand(opts.column_cap);
    return out;
}

}  // namespace hdq
