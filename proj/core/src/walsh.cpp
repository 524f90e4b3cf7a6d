#include "hdq/walsh.hpp"

#include <algorithm>

namespace hdq {

void check_order(int m, int max_order, int min_order) {
    if (m < min_order || m > max_order) {
        throw ArgumentError("order m=" + std::to_string(m) + " outside [" +
                            std::to_string(min_order) + ", " + std::to_string(max_order) + "]");
    }
}

ColumnIndex column_count(int m) {
    check_order(m, kMaxOracleOrder);
    return ColumnIndex{1} << (m - 1);
}

std::size_t pair_count(int m) {
    return static_cast<std::size_t>(m) * static_cast<std::size_t>(m - 1) / 2;
}

SignColumn::SignColumn(int m, ColumnIndex j) : m_(m), j_(j) {
    if (j < 1 || j > column_count(m)) {
        throw ArgumentError("column index " + std::to_string(j) + " outside [1, " +
                            std::to_string(column_count(m)) + "]");
    }
}

SignColumn SignColumn::from_signs(std::span<const int> signs) {
    const int m = static_cast<int>(signs.size());
    check_order(m, kMaxOracleOrder);
    if (signs[0] != 1) throw ArgumentError("sign column must start with +1");
    ColumnIndex bits = 0;
    for (int k = 2; k <= m; ++k) {
        int s = signs[static_cast<std::size_t>(k - 1)];
        if (s == -1) {
            bits |= ColumnIndex{1} << (k - 2);
        } else if (s != 1) {
            throw ArgumentError("sign column entries must be +1 or -1");
        }
    }
    return {m, bits + 1};
}

int SignColumn::entry(int k) const {
    if (k < 1 || k > m_) throw ArgumentError("row index " + std::to_string(k) + " out of range");
    return hadamard_entry(truth_row_mask(k), j_);
}

std::vector<int> SignColumn::signs() const {
    std::vector<int> out(static_cast<std::size_t>(m_));
    for (int k = 1; k <= m_; ++k) out[static_cast<std::size_t>(k - 1)] = entry(k);
    return out;
}

SignColumn SignColumn::parent() const {
    if (m_ < 2) throw ArgumentError("T_1 columns have no parent");
    return {m_ - 1, ((j_ - 1) % column_count(m_ - 1)) + 1};
}

PairIndex PairIndex::make(int m, int i, int j) {
    if (i < 1 || j > m || i >= j) {
        throw ArgumentError("pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") invalid for m=" + std::to_string(m));
    }
    return {i, j};
}

PairIndex PairIndex::from_linear(std::size_t linear) {
    if (linear < 1) throw ArgumentError("pair linear index must be >= 1");
    int j = 2;
    while (static_cast<std::size_t>(j) * static_cast<std::size_t>(j - 1) / 2 < linear) ++j;
    std::size_t before = static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(j - 2) / 2;
    return {static_cast<int>(linear - before), j};
}

std::vector<PairIndex> all_pairs(int m) {
    std::vector<PairIndex> out;
    out.reserve(pair_count(m));
    for (int j = 2; j <= m; ++j) {
        for (int i = 1; i < j; ++i) out.push_back({i, j});
    }
    return out;
}

std::vector<RowMask> rm_masks(int m) {
    check_order(m, kMaxOracleOrder, 2);
    std::vector<RowMask> out;
    out.reserve(pair_count(m));
    for (const auto& p : all_pairs(m)) out.push_back(pair_to_mask(p));
    return out;
}

std::vector<RowMask> rc_masks(int m) {
    check_order(m, kMaxVectorOrder, 2);
    auto rm = rm_masks(m);
    std::sort(rm.begin(), rm.end());
    std::vector<RowMask> out;
    const ColumnIndex n = column_count(m);
    out.reserve(n - rm.size());
    for (RowMask u = 0; u < n; ++u) {
        if (!std::binary_search(rm.begin(), rm.end(), u)) out.push_back(u);
    }
    return out;
}

SignMatrix sylvester(int k) {
    if (k < 0 || k > 31) throw ArgumentError("sylvester order exponent out of range");
    const std::size_t n = std::size_t{1} << k;
    check_dense_size(n, n);
    SignMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) out(r, c) = hadamard_entry(r, c + 1);
    }
    return out;
}

int truth_table_entry(int m, int k, ColumnIndex j) {
    return SignColumn(m, j).entry(k);
}

SignMatrix truth_table(int m, int dense_order_cap) {
    check_order(m, std::min(dense_order_cap, kMaxVectorOrder));
    const ColumnIndex n = column_count(m);
    SignMatrix out(static_cast<std::size_t>(m), n);
    for (int k = 1; k <= m; ++k) {
        for (ColumnIndex j = 1; j <= n; ++j) {
            out(static_cast<std::size_t>(k - 1), j - 1) = hadamard_entry(truth_row_mask(k), j);
        }
    }
    return out;
}

int ct_table_entry(int m, std::size_t linear, ColumnIndex j) {
    check_order(m, kMaxOracleOrder, 2);
    if (linear < 1 || linear > pair_count(m)) {
        throw ArgumentError("pair index " + std::to_string(linear) + " outside [1, " +
                            std::to_string(pair_count(m)) + "]");
    }
    const PairIndex p = PairIndex::from_linear(linear);
    return truth_table_entry(m, p.i, j) * truth_table_entry(m, p.j, j);
}

SignMatrix ct_table(int m, int dense_order_cap) {
    check_order(m, std::min(dense_order_cap, kMaxVectorOrder), 2);
    const ColumnIndex n = column_count(m);
    SignMatrix out(pair_count(m), n);
    for (const auto& p : all_pairs(m)) {
        const RowMask mask = pair_to_mask(p);
        for (ColumnIndex j = 1; j <= n; ++j) out(p.linear() - 1, j - 1) = hadamard_entry(mask, j);
    }
    return out;
}

}  // namespace hdq
