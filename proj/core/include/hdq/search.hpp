#pragma once

// Hadamard matrices of order m as lattice points: a set S of m distinct
// columns of T_m whose Column Pairwise Products sum to zero. Equivalently
// the 0/1 indicator of S lies in span RC_m, and the m x m matrix with
// columns c_j, j in S, is Hadamard (up to column order).
//
// The engine is a depth-first backtracking search over ascending column
// indices. Row k of the chosen columns is kept as a bitset over the chosen
// slots (bit t set iff the t-th chosen column is -1 in row k), so the
// running sum for pair (i, j) after t columns is t - 2 popcount(row_i ^ row_j).
//
// Pruning layers:
//   * parity: each pair sum of m terms ±1 has the parity of m, so odd
//     m >= 3 has no solution and is refuted at the root;
//   * bound: a pair sum with |sum| > (columns still to choose) cannot return
//     to zero;
//   * optional normalization forcing column 1 (all ones) into S. Negating
//     rows of a Hadamard matrix keeps it Hadamard, so every solution class
//     has a representative containing column 1; counts then differ from the
//     unnormalized enumeration.
//
// Work is split by the first two chosen columns. The solution set is
// deterministic under any worker count; discovery order is not.

#include "hdq/hadamardesque.hpp"
#include "hdq/matrix.hpp"
#include "hdq/walsh.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hdq {

inline constexpr int kDefaultSearchOrderCap = 28;
/// Largest m for which emitted solutions are re-checked with the full
/// transform-based span test.
inline constexpr int kSpanVerificationOrderCap = 20;

struct SearchOptions {
    std::optional<std::uint64_t> solution_limit;
    /// Checked every few hundred nodes per worker, so may overshoot slightly.
    std::optional<std::uint64_t> node_limit;
    std::optional<std::chrono::milliseconds> time_limit;
    bool force_first_column = false;
    bool parity_prune = true;
    bool bound_prune = true;
    unsigned workers = 1;
    /// Attach the dense ±1 matrix to each solution.
    bool materialize = true;
    int order_cap = kDefaultSearchOrderCap;
};

enum class LimitHit { none, solutions, nodes, time };

std::string to_string(LimitHit limit);

struct ColumnSetVerification {
    bool size_ok = false;
    bool sums_zero = false;
    /// Indicator CRV in span RC_m; not evaluated above kSpanVerificationOrderCap.
    std::optional<bool> in_span;
    bool dense_hadamard = false;

    bool accepted() const { return size_ok && sums_zero && in_span.value_or(true) && dense_hadamard; }
    /// All evaluated layers agree.
    bool consistent() const {
        return (size_ok && sums_zero) == dense_hadamard && (!in_span || *in_span == sums_zero);
    }
};

struct Solution {
    std::vector<ColumnIndex> columns;
    std::optional<SignMatrix> dense;
    ColumnSetVerification verification;
};

struct SearchReport {
    int order = 0;
    std::vector<Solution> solutions;  // sorted by column set
    std::uint64_t nodes = 0;
    std::chrono::duration<double> elapsed{};
    bool exhaustive = false;
    LimitHit limit = LimitHit::none;
    bool normalized = false;
    unsigned workers = 1;
};

using SolutionCallback = std::function<void(const Solution&)>;

/// Callback runs under the collector lock, once per accepted solution, in
/// discovery order.
SearchReport find_hadamard_column_sets(int m, const SearchOptions& opts = {},
                                       const SolutionCallback& on_solution = {});

/// m x |S| matrix whose columns are c_j, j in S, in the given order.
SignMatrix column_set_matrix(int m, std::span<const ColumnIndex> columns);

ColumnSetVerification verify_column_set(int m, std::span<const ColumnIndex> columns);

}  // namespace hdq
