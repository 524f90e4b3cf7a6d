#pragma once

// m-Hadamardesque matrices: every column is a positive multiple of a column
// of T_m, i.e. all coordinates of a column share one modulus and the first
// coordinate is positive. Such a matrix is summarized by its Column
// Representation Vector (CRV): coordinate i is the sum of the squared scales
// of all columns with sign pattern c_i. Every pairwise row dot product is
// <CRV, CT_m row>, so row orthogonality is equivalent to the CRV lying in
// the span of the Hadamard rows RC_m that do not occur in CT_m.

#include "hdq/matrix.hpp"
#include "hdq/scalar.hpp"
#include "hdq/walsh.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hdq {

/// Default refusal threshold for dense expansion of multiplicity-compressed
/// matrices.
inline constexpr std::size_t kDefaultExpansionCap = 1'000'000;

/// `multiplicity` copies of the column sqrt(q) * c_col.
struct WeightedColumn {
    Rational q;
    ColumnIndex col;
    Integer multiplicity = 1;

    friend bool operator==(const WeightedColumn&, const WeightedColumn&) = default;
};

class HadamardesqueMatrix {
public:
    HadamardesqueMatrix(int m, std::vector<WeightedColumn> columns);

    int order() const { return m_; }
    const std::vector<WeightedColumn>& columns() const { return columns_; }
    /// Total number of dense columns (sum of multiplicities).
    Integer column_count() const;

    ExactMatrix expand(std::size_t column_cap = kDefaultExpansionCap) const;

    friend bool operator==(const HadamardesqueMatrix&, const HadamardesqueMatrix&) = default;

private:
    int m_;
    std::vector<WeightedColumn> columns_;
};

class CRVector {
public:
    /// Requires size 2^(m-1) for some m and nonnegative coordinates.
    explicit CRVector(std::vector<Rational> values);

    static CRVector all_ones(int m);
    /// 0/1 vector marking the given (1-based, distinct) columns.
    static CRVector indicator(int m, std::span<const ColumnIndex> columns);

    int order() const { return m_; }
    const std::vector<Rational>& values() const { return v_; }
    const Rational& operator[](ColumnIndex j) const { return v_[j - 1]; }

    friend bool operator==(const CRVector&, const CRVector&) = default;

private:
    int m_;
    std::vector<Rational> v_;
};

class PairDotVector {
public:
    /// Requires size m(m-1)/2 for some m >= 2.
    explicit PairDotVector(std::vector<Rational> values);
    static PairDotVector zeros(int m);

    int order() const { return m_; }
    const std::vector<Rational>& values() const { return a_; }
    const Rational& at(PairIndex p) const { return a_[p.linear() - 1]; }
    bool is_zero() const;

    friend bool operator==(const PairDotVector&, const PairDotVector&) = default;

private:
    int m_;
    std::vector<Rational> a_;
};

/// Order m with size == 2^(m-1), or nullopt.
std::optional<int> order_from_crv_length(std::size_t size);
/// Order m >= 2 with size == m(m-1)/2, or nullopt.
std::optional<int> order_from_pair_count(std::size_t size);

struct Factorization {
    HadamardesqueMatrix matrix;
    /// 1-based input columns that were negated so their first entry is positive.
    std::vector<std::size_t> negated_columns;
};

Factorization to_hadamardesque(const ExactMatrix& m);
/// Float ingestion: moduli within a column must agree to `relative_tol` of
/// their mean; q is the squared mean modulus, converted exactly.
Factorization to_hadamardesque(const FloatMatrix& m, double relative_tol = 1e-9);

CRVector crv(const HadamardesqueMatrix& m);

/// Sum of the Column Pairwise Products of the columns, weighted by q.
PairDotVector pairwise_dots(const HadamardesqueMatrix& m);
/// Row-by-row dot products of a dense matrix. Throws ShapeError if a cross
/// term is irrational (possible only for non-Hadamardesque input).
PairDotVector dense_pairwise_dots(const ExactMatrix& m);
/// <CRV, CT_m row L> for every L, via the fast transform.
PairDotVector crv_pairwise_dots(const CRVector& v);

struct SpanViolation {
    PairIndex pair;
    Rational residual;
};

struct SpanReport {
    bool in_span = true;
    std::vector<SpanViolation> violations;
};

/// Decides whether v (any sign) lies in span RC_m; violations list every
/// pair whose CT row has nonzero inner product with v.
SpanReport in_span_rc(std::span<const Rational> v);
SpanReport in_span_rc(const CRVector& v);

/// Whether realizations of v and w have equal pairwise row dot products.
SpanReport same_row_dots(const CRVector& v, const CRVector& w);

bool is_hadamard(const SignMatrix& m);
bool is_hadamard(const ExactMatrix& m);

struct PartialHadamardReport {
    bool entries_pm1 = false;
    bool rows_orthogonal = false;
    /// Only evaluated when entries are ±1 and m <= kMaxVectorOrder.
    std::optional<bool> crv_in_span;
    /// CRV has n ones and 2^(m-1) - n zeros.
    std::optional<bool> crv_is_indicator;

    bool partial_hadamard() const { return entries_pm1 && rows_orthogonal; }
};

PartialHadamardReport partial_hadamard_report(const ExactMatrix& m);
bool is_partial_hadamard(const ExactMatrix& m);

/// The three equivalent characterizations of a Hadamard matrix of order m,
/// each evaluated independently.
struct ClassificationReport {
    std::size_t order = 0;
    /// ±1 entries and M M^T = m I, checked directly.
    bool hadamard = false;
    /// ±1 Hadamardesque (after column normalization) with CRV in span RC_m.
    bool pm1_crv_in_span = false;
    /// Hadamardesque, CRV has m ones and 2^(m-1) - m zeros, CRV in span RC_m.
    bool lattice_point = false;

    std::optional<CRVector> crv;
    std::vector<std::size_t> negated_columns;
    SpanReport span;
    /// Why the matrix is not Hadamardesque, when it is not.
    std::string shape_error;

    bool consistent() const { return hadamard == pm1_crv_in_span && hadamard == lattice_point; }
};

ClassificationReport classify_square(const ExactMatrix& m);

}  // namespace hdq
