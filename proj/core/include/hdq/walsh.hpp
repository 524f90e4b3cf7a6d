#pragma once

// Sylvester Hadamard matrices, the truth table T_m of sign columns
// (1, ±1, ..., ±1), its column-pairwise-product table CT_m, and the fast
// Walsh-Hadamard transform.
//
// Indexing conventions (all 1-based, matching the usual matrix notation):
//   * column j of T_m, 1 <= j <= 2^(m-1): row k >= 2 is -1 iff bit (k-2) of
//     (j-1) is set; row 1 is always +1.
//   * pair (i, j), i < j, has linear index L = (j-1)(j-2)/2 + i.
//   * Hadamard row with mask u (row u+1 of H_N) has entry
//     (-1)^popcount(u & (j-1)) at column j.
// With these conventions row k of T_m is Hadamard row mask mu(k), where
// mu(1) = 0 and mu(k) = 2^(k-2), and the CT_m row of pair (i, j) is
// Hadamard row mask mu(i) ^ mu(j). Permuting the columns of T_m permutes
// the columns of CT_m and of the Hadamard rows it contains in the same way.

#include "hdq/errors.hpp"
#include "hdq/matrix.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hdq {

using ColumnIndex = std::uint64_t;
using RowMask = std::uint64_t;

/// Largest m accepted by the O(1) entry oracles (column indices are 64-bit).
inline constexpr int kMaxOracleOrder = 64;
/// Largest m accepted by anything that allocates a 2^(m-1)-length vector.
inline constexpr int kMaxVectorOrder = 30;
/// Default largest m for which T_m / CT_m are materialized densely.
inline constexpr int kDefaultDenseOrderCap = 16;

void check_order(int m, int max_order, int min_order = 1);

/// 2^(m-1), the number of columns of T_m.
ColumnIndex column_count(int m);
/// m(m-1)/2, the number of rows of CT_m.
std::size_t pair_count(int m);

class SignColumn {
public:
    SignColumn(int m, ColumnIndex j);

    /// Column whose normalized sign pattern is `signs` (signs[0] must be +1).
    static SignColumn from_signs(std::span<const int> signs);

    int order() const { return m_; }
    ColumnIndex index() const { return j_; }
    /// Entry in row k, 1 <= k <= m.
    int entry(int k) const;
    std::vector<int> signs() const;
    /// The column of T_(m-1) this column extends (m >= 2).
    SignColumn parent() const;

    friend bool operator==(const SignColumn&, const SignColumn&) = default;

private:
    int m_;
    ColumnIndex j_;
};

struct PairIndex {
    int i;
    int j;

    /// Validated constructor: 1 <= i < j <= m.
    static PairIndex make(int m, int i, int j);
    /// Inverse of linear(): the pair with linear index L >= 1.
    static PairIndex from_linear(std::size_t linear);

    std::size_t linear() const {
        return static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(j - 2) / 2 +
               static_cast<std::size_t>(i);
    }

    friend bool operator==(const PairIndex&, const PairIndex&) = default;
};

/// All pairs of order m in linear-index order.
std::vector<PairIndex> all_pairs(int m);

/// mu(k): mask of the Hadamard row holding row k of T_m.
inline RowMask truth_row_mask(int k) {
    return k == 1 ? RowMask{0} : RowMask{1} << (k - 2);
}

inline int hadamard_entry(RowMask mask, ColumnIndex j) {
    return (std::popcount(mask & (j - 1)) & 1) != 0 ? -1 : 1;
}

inline RowMask pair_to_mask(PairIndex p) {
    return truth_row_mask(p.i) ^ truth_row_mask(p.j);
}

/// Masks of R_m in linear pair order (all distinct).
std::vector<RowMask> rm_masks(int m);
/// Masks of RC_m, ascending. Always contains 0 (the all-ones row).
std::vector<RowMask> rc_masks(int m);

/// H_(2^k); throws ResourceError beyond the dense budget.
SignMatrix sylvester(int k);

int truth_table_entry(int m, int k, ColumnIndex j);
SignMatrix truth_table(int m, int dense_order_cap = kDefaultDenseOrderCap);

int ct_table_entry(int m, std::size_t linear, ColumnIndex j);
SignMatrix ct_table(int m, int dense_order_cap = kDefaultDenseOrderCap);

/// Column Pairwise Product: (v1v2, v1v3, v2v3, v1v4, ...).
template <class T>
std::vector<T> cpp_vector(std::span<const T> v) {
    if (v.size() < 2) throw ArgumentError("cpp_vector needs at least 2 coordinates");
    const int m = static_cast<int>(v.size());
    std::vector<T> out;
    out.reserve(pair_count(m));
    for (int j = 2; j <= m; ++j) {
        for (int i = 1; i < j; ++i) out.push_back(T(v[i - 1] * v[j - 1]));
    }
    return out;
}

template <class T>
std::vector<T> cpp_vector(const std::vector<T>& v) {
    return cpp_vector(std::span<const T>(v));
}

inline void check_transform_length(std::size_t n) {
    if (n == 0 || !std::has_single_bit(n)) {
        throw ArgumentError("Walsh-Hadamard transform length " + std::to_string(n) +
                            " is not a power of two");
    }
    if (n > (std::size_t{1} << (kMaxVectorOrder - 1))) {
        throw ArgumentError("Walsh-Hadamard transform length " + std::to_string(n) + " too large");
    }
}

/// In-place fast Walsh-Hadamard transform in natural (Sylvester) order:
/// afterwards v[u] = <v_in, Hadamard row with mask u>.
template <class T>
void wht_inplace(std::span<T> v) {
    check_transform_length(v.size());
    const std::size_t n = v.size();
    for (std::size_t half = 1; half < n; half <<= 1) {
        for (std::size_t block = 0; block < n; block += 2 * half) {
            for (std::size_t k = block; k < block + half; ++k) {
                T lo = v[k];
                T hi = v[k + half];
                v[k] = lo + hi;
                v[k + half] = lo - hi;
            }
        }
    }
}

template <class T>
std::vector<T> wht(std::vector<T> v) {
    wht_inplace(std::span<T>(v));
    return v;
}

}  // namespace hdq
