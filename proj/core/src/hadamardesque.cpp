#include "hdq/hadamardesque.hpp"

#include <bit>
#include <cmath>

namespace hdq {

HadamardesqueMatrix::HadamardesqueMatrix(int m, std::vector<WeightedColumn> columns)
    : m_(m), columns_(std::move(columns)) {
    check_order(m, kMaxOracleOrder);
    if (columns_.empty()) throw ArgumentError("a Hadamardesque matrix needs at least one column");
    const ColumnIndex n = hdq::column_count(m);
    for (auto& c : columns_) {
        c.q.canonicalize();
        if (sgn(c.q) <= 0) throw ArgumentError("column scale q must be positive");
        if (c.col < 1 || c.col > n) {
            throw ArgumentError("column index " + std::to_string(c.col) + " outside T_" +
                                std::to_string(m));
        }
        if (sgn(c.multiplicity) <= 0) throw ArgumentError("column multiplicity must be positive");
    }
}

Integer HadamardesqueMatrix::column_count() const {
    Integer n = 0;
    for (const auto& c : columns_) n += c.multiplicity;
    return n;
}

ExactMatrix HadamardesqueMatrix::expand(std::size_t column_cap) const {
    const Integer n = column_count();
    if (n > Integer(static_cast<unsigned long>(column_cap))) {
        throw ResourceError("dense expansion needs " + n.get_str() + " columns, cap is " +
                            std::to_string(column_cap));
    }
    const auto cols = static_cast<std::size_t>(n.get_ui());
    ExactMatrix out(static_cast<std::size_t>(m_), cols);
    std::size_t c = 0;
    for (const auto& wc : columns_) {
        const SignColumn sc(m_, wc.col);
        for (unsigned long copy = 0; copy < wc.multiplicity.get_ui(); ++copy, ++c) {
            for (int k = 1; k <= m_; ++k) {
                out(static_cast<std::size_t>(k - 1), c) = SignedRoot(sc.entry(k), wc.q);
            }
        }
    }
    return out;
}

std::optional<int> order_from_crv_length(std::size_t size) {
    if (size == 0 || !std::has_single_bit(size)) return std::nullopt;
    return std::countr_zero(size) + 1;
}

std::optional<int> order_from_pair_count(std::size_t size) {
    for (int m = 2; pair_count(m) <= size; ++m) {
        if (pair_count(m) == size) return m;
    }
    return std::nullopt;
}

CRVector::CRVector(std::vector<Rational> values) : v_(std::move(values)) {
    auto m = order_from_crv_length(v_.size());
    if (!m) {
        throw ArgumentError("CRV length " + std::to_string(v_.size()) + " is not a power of two");
    }
    check_order(*m, kMaxVectorOrder);
    m_ = *m;
    for (auto& x : v_) {
        x.canonicalize();
        if (sgn(x) < 0) throw ArgumentError("CRV coordinates must be nonnegative");
    }
}

CRVector CRVector::all_ones(int m) {
    check_order(m, kMaxVectorOrder);
    return CRVector(std::vector<Rational>(column_count(m), Rational(1)));
}

CRVector CRVector::indicator(int m, std::span<const ColumnIndex> columns) {
    check_order(m, kMaxVectorOrder);
    std::vector<Rational> v(column_count(m), Rational(0));
    for (ColumnIndex j : columns) {
        if (j < 1 || j > v.size()) throw ArgumentError("column index " + std::to_string(j) + " out of range");
        if (v[j - 1] != 0) throw ArgumentError("duplicate column index " + std::to_string(j));
        v[j - 1] = 1;
    }
    return CRVector(std::move(v));
}

PairDotVector::PairDotVector(std::vector<Rational> values) : a_(std::move(values)) {
    auto m = order_from_pair_count(a_.size());
    if (!m) {
        throw ArgumentError("pair-dot vector length " + std::to_string(a_.size()) +
                            " is not m(m-1)/2 for any m >= 2");
    }
    m_ = *m;
    for (auto& x : a_) x.canonicalize();
}

PairDotVector PairDotVector::zeros(int m) {
    check_order(m, kMaxOracleOrder, 2);
    return PairDotVector(std::vector<Rational>(pair_count(m), Rational(0)));
}

bool PairDotVector::is_zero() const {
    for (const auto& x : a_) {
        if (sgn(x) != 0) return false;
    }
    return true;
}

Factorization to_hadamardesque(const ExactMatrix& m) {
    const int order = static_cast<int>(m.rows());
    check_order(order, kMaxOracleOrder);
    std::vector<WeightedColumn> columns;
    std::vector<std::size_t> negated;
    columns.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const Rational& q = m(0, c).square();
        if (sgn(q) == 0) throw ShapeError("column " + std::to_string(c + 1) + " is zero");
        for (std::size_t r = 1; r < m.rows(); ++r) {
            if (m(r, c).square() != q) {
                throw ShapeError("column " + std::to_string(c + 1) +
                                 " has entries of unequal modulus (rows 1 and " +
                                 std::to_string(r + 1) + ")");
            }
        }
        const int flip = m(0, c).sign();
        if (flip < 0) negated.push_back(c + 1);
        std::vector<int> signs(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) signs[r] = m(r, c).sign() * flip;
        columns.push_back({q, SignColumn::from_signs(signs).index()});
    }
    return {HadamardesqueMatrix(order, std::move(columns)), std::move(negated)};
}

Factorization to_hadamardesque(const FloatMatrix& m, double relative_tol) {
    if (!(relative_tol >= 0.0)) throw ArgumentError("tolerance must be nonnegative");
    const int order = static_cast<int>(m.rows());
    check_order(order, kMaxOracleOrder);
    std::vector<WeightedColumn> columns;
    std::vector<std::size_t> negated;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        double mean = 0.0;
        for (std::size_t r = 0; r < m.rows(); ++r) mean += std::abs(m(r, c));
        mean /= static_cast<double>(m.rows());
        if (!(mean > 0.0) || !std::isfinite(mean)) {
            throw ShapeError("column " + std::to_string(c + 1) + " is zero or not finite");
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (std::abs(std::abs(m(r, c)) - mean) > relative_tol * mean) {
                throw ShapeError("column " + std::to_string(c + 1) +
                                 " has entries of unequal modulus (row " + std::to_string(r + 1) +
                                 ")");
            }
        }
        const int flip = m(0, c) < 0 ? -1 : 1;
        if (flip < 0) negated.push_back(c + 1);
        std::vector<int> signs(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) signs[r] = (m(r, c) < 0 ? -1 : 1) * flip;
        Rational q(mean);
        q *= q;
        columns.push_back({q, SignColumn::from_signs(signs).index()});
    }
    return {HadamardesqueMatrix(order, std::move(columns)), std::move(negated)};
}

CRVector crv(const HadamardesqueMatrix& m) {
    check_order(m.order(), kMaxVectorOrder);
    std::vector<Rational> v(hdq::column_count(m.order()), Rational(0));
    for (const auto& c : m.columns()) v[c.col - 1] += c.q * c.multiplicity;
    return CRVector(std::move(v));
}

PairDotVector pairwise_dots(const HadamardesqueMatrix& m) {
    check_order(m.order(), kMaxOracleOrder, 2);
    std::vector<Rational> sum(pair_count(m.order()), Rational(0));
    for (const auto& c : m.columns()) {
        const auto products = cpp_vector(SignColumn(m.order(), c.col).signs());
        const Rational weight = c.q * c.multiplicity;
        for (std::size_t l = 0; l < products.size(); ++l) {
            if (products[l] > 0) {
                sum[l] += weight;
            } else {
                sum[l] -= weight;
            }
        }
    }
    return PairDotVector(std::move(sum));
}

PairDotVector dense_pairwise_dots(const ExactMatrix& m) {
    const int order = static_cast<int>(m.rows());
    check_order(order, kMaxOracleOrder, 2);
    std::vector<Rational> out;
    out.reserve(pair_count(order));
    for (const auto& p : all_pairs(order)) {
        Rational dot = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto term = (m(static_cast<std::size_t>(p.i - 1), c) *
                               m(static_cast<std::size_t>(p.j - 1), c))
                                  .to_rational();
            if (!term) {
                throw ShapeError("irrational cross term in column " + std::to_string(c + 1));
            }
            dot += *term;
        }
        out.push_back(dot);
    }
    return PairDotVector(std::move(out));
}

namespace {

std::vector<Rational> rm_spectrum(std::span<const Rational> v, int m) {
    auto spectrum = wht(std::vector<Rational>(v.begin(), v.end()));
    std::vector<Rational> out;
    out.reserve(pair_count(m));
    for (RowMask u : rm_masks(m)) out.push_back(spectrum[u]);
    return out;
}

}  // namespace

PairDotVector crv_pairwise_dots(const CRVector& v) {
    check_order(v.order(), kMaxVectorOrder, 2);
    return PairDotVector(rm_spectrum(v.values(), v.order()));
}

SpanReport in_span_rc(std::span<const Rational> v) {
    auto m = order_from_crv_length(v.size());
    if (!m) throw ArgumentError("vector length " + std::to_string(v.size()) + " is not a power of two");
    check_order(*m, kMaxVectorOrder);
    SpanReport report;
    if (*m < 2) return report;
    const auto residuals = rm_spectrum(v, *m);
    const auto pairs = all_pairs(*m);
    for (std::size_t l = 0; l < residuals.size(); ++l) {
        if (sgn(residuals[l]) != 0) report.violations.push_back({pairs[l], residuals[l]});
    }
    report.in_span = report.violations.empty();
    return report;
}

SpanReport in_span_rc(const CRVector& v) {
    return in_span_rc(std::span<const Rational>(v.values()));
}

SpanReport same_row_dots(const CRVector& v, const CRVector& w) {
    if (v.order() != w.order()) {
        throw ArgumentError("CRVs of different order (" + std::to_string(v.order()) + " vs " +
                            std::to_string(w.order()) + ")");
    }
    std::vector<Rational> diff(v.values().size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = v.values()[i] - w.values()[i];
    return in_span_rc(std::span<const Rational>(diff));
}

bool is_hadamard(const SignMatrix& m) {
    if (m.rows() != m.cols()) return false;
    const std::size_t n = m.rows();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (m(r, c) != 1 && m(r, c) != -1) return false;
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            long dot = 0;
            for (std::size_t c = 0; c < n; ++c) dot += m(a, c) * m(b, c);
            if (dot != 0) return false;
        }
    }
    return true;
}

namespace {

std::optional<SignMatrix> as_sign_matrix(const ExactMatrix& m) {
    SignMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const SignedRoot& x = m(r, c);
            if (x.square() != 1) return std::nullopt;
            out(r, c) = x.sign();
        }
    }
    return out;
}

bool rows_orthogonal(const SignMatrix& m) {
    for (std::size_t a = 0; a < m.rows(); ++a) {
        for (std::size_t b = a + 1; b < m.rows(); ++b) {
            long dot = 0;
            for (std::size_t c = 0; c < m.cols(); ++c) dot += m(a, c) * m(b, c);
            if (dot != 0) return false;
        }
    }
    return true;
}

bool is_indicator(const CRVector& v, std::size_t ones) {
    std::size_t count = 0;
    for (const auto& x : v.values()) {
        if (x == 1) {
            ++count;
        } else if (sgn(x) != 0) {
            return false;
        }
    }
    return count == ones;
}

}  // namespace

bool is_hadamard(const ExactMatrix& m) {
    auto signs = as_sign_matrix(m);
    return signs && is_hadamard(*signs);
}

PartialHadamardReport partial_hadamard_report(const ExactMatrix& m) {
    PartialHadamardReport report;
    auto signs = as_sign_matrix(m);
    if (!signs) return report;
    report.entries_pm1 = true;
    report.rows_orthogonal = rows_orthogonal(*signs);
    const int order = static_cast<int>(m.rows());
    if (order <= kMaxVectorOrder) {
        const CRVector v = crv(to_hadamardesque(m).matrix);
        report.crv_in_span = in_span_rc(v).in_span;
        report.crv_is_indicator = is_indicator(v, m.cols());
    }
    return report;
}

bool is_partial_hadamard(const ExactMatrix& m) {
    return partial_hadamard_report(m).partial_hadamard();
}

ClassificationReport classify_square(const ExactMatrix& m) {
    if (m.rows() != m.cols()) {
        throw ArgumentError("classify_square needs a square matrix, got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    const int order = static_cast<int>(m.rows());
    check_order(order, kMaxVectorOrder);
    ClassificationReport report;
    report.order = m.rows();
    report.hadamard = is_hadamard(m);

    std::optional<Factorization> factored;
    try {
        factored = to_hadamardesque(m);
    } catch (const ShapeError& e) {
        report.shape_error = e.what();
        return report;
    }
    report.negated_columns = factored->negated_columns;
    const CRVector v = crv(factored->matrix);
    report.span = in_span_rc(v);

    bool unit_scales = true;
    for (const auto& c : factored->matrix.columns()) unit_scales = unit_scales && c.q == 1;
    report.pm1_crv_in_span = unit_scales && report.span.in_span;
    report.lattice_point = is_indicator(v, m.rows()) && report.span.in_span;
    report.crv = v;
    return report;
}

}  // namespace hdq
