#pragma once

// Realizing a prescribed vector `a` of pairwise row dot products.
//
// v' = 2^-(m-1) * sum_L a_L * (CT_m row L) satisfies <v', CT row L> = a_L
// because CT rows are mutually orthogonal Hadamard rows of squared norm
// 2^(m-1). Adding s * (all-ones), itself a Hadamard row outside CT_m, keeps
// every such inner product and makes the vector a valid nonnegative CRV.

#include "hdq/hadamardesque.hpp"

#include <optional>
#include <span>

namespace hdq {

enum class ShiftPolicy { minimal, minimal_integer, explicit_value };
enum class Flavor { canonical, uniform_rational, uniform_irrational };

struct ConstructionOptions {
    ShiftPolicy shift = ShiftPolicy::minimal;
    /// Used when shift == explicit_value; must leave every coordinate >= 0.
    Rational explicit_shift = 0;
    Flavor flavor = Flavor::canonical;
    /// Materialize the dense matrix in construct().
    bool expand = false;
    std::size_t column_cap = kDefaultExpansionCap;
};

/// v' before the shift. Coordinates may be negative.
std::vector<Rational> unshifted_crv(const PairDotVector& a);
/// Smallest s >= 0 with v' + s >= 0 coordinatewise.
Rational minimal_shift(std::span<const Rational> unshifted);

/// The shifted CRV. A zero target under a minimal policy yields the
/// all-ones CRV, realized by T_m itself.
CRVector construct_crv(const PairDotVector& a, const ConstructionOptions& opts = {});

/// One column sqrt(v_i) * c_i per nonzero coordinate.
HadamardesqueMatrix realize_canonical(const CRVector& v);

/// For v_i = p/q in lowest terms, p*q copies of (1/q) c_i. Every entry is
/// rational.
HadamardesqueMatrix realize_rational_entries(const CRVector& v);

struct UniformRealization {
    HadamardesqueMatrix matrix;
    /// Common denominator d: every entry is ±1/d (rational flavor) or
    /// ±1/(d sqrt 2) (irrational flavor).
    Integer denominator;
};

/// Rescales every column to the common modulus 1/d, d the lcm of the column
/// denominators, by replicating columns. Requires rational column scales.
UniformRealization uniformize(const HadamardesqueMatrix& m);

/// Exact rational target, or InfeasibleError naming the first irrational
/// coordinate (uniform-entry realizations need rational dot products).
PairDotVector rational_target(std::span<const SignedRoot> target);

UniformRealization realize_uniform_rational(const PairDotVector& a,
                                            const ConstructionOptions& opts = {});
/// Doubles every column and divides by sqrt 2: entries ±1/(d sqrt 2).
UniformRealization realize_uniform_irrational(const PairDotVector& a,
                                              const ConstructionOptions& opts = {});

struct Realization {
    CRVector crv;
    HadamardesqueMatrix matrix;
    std::optional<Integer> denominator;
    std::optional<ExactMatrix> dense;
};

/// Flavor dispatch. Targets may carry sqrt tokens; every flavor needs them
/// to be rational (the canonical flavor because CRVs are exact rationals).
Realization construct(int m, std::span<const SignedRoot> target, const ConstructionOptions& opts = {});

}  // namespace hdq
