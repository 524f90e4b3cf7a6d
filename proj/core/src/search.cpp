#include "hdq/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace hdq {

std::string to_string(LimitHit limit) {
    switch (limit) {
    case LimitHit::none: return "none";
    case LimitHit::solutions: return "solutions";
    case LimitHit::nodes: return "nodes";
    case LimitHit::time: return "time";
    }
    return "unknown";
}

SignMatrix column_set_matrix(int m, std::span<const ColumnIndex> columns) {
    check_order(m, kMaxOracleOrder);
    SignMatrix out(static_cast<std::size_t>(m), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const SignColumn col(m, columns[c]);
        for (int k = 1; k <= m; ++k) out(static_cast<std::size_t>(k - 1), c) = col.entry(k);
    }
    return out;
}

ColumnSetVerification verify_column_set(int m, std::span<const ColumnIndex> columns) {
    check_order(m, kMaxOracleOrder);
    const ColumnIndex n = column_count(m);
    std::set<ColumnIndex> seen;
    for (ColumnIndex j : columns) {
        if (j < 1 || j > n) {
            throw ArgumentError("column index " + std::to_string(j) + " outside [1, " +
                                std::to_string(n) + "]");
        }
        if (!seen.insert(j).second) throw ArgumentError("duplicate column index " + std::to_string(j));
    }

    ColumnSetVerification out;
    out.size_ok = columns.size() == static_cast<std::size_t>(m);
    out.sums_zero = true;
    for (const auto& p : all_pairs(m)) {
        const RowMask mask = pair_to_mask(p);
        long sum = 0;
        for (ColumnIndex j : columns) sum += hadamard_entry(mask, j);
        out.sums_zero = out.sums_zero && sum == 0;
    }
    if (m <= kSpanVerificationOrderCap) {
        out.in_span = in_span_rc(CRVector::indicator(m, columns)).in_span;
    }
    out.dense_hadamard = !columns.empty() && is_hadamard(column_set_matrix(m, columns));
    return out;
}

namespace {

constexpr int kMaxSlots = 32;
constexpr std::uint64_t kFlushInterval = 256;

struct State {
    int depth = 0;
    std::array<ColumnIndex, kMaxSlots> chosen{};
    // rows[k-1]: bit t set iff chosen[t] is -1 in row k. Row 1 stays 0.
    std::array<std::uint32_t, kMaxSlots> rows{};
};

class Engine {
public:
    Engine(int m, const SearchOptions& opts, const SolutionCallback& cb)
        : m_(m), n_(column_count(m)), opts_(opts), callback_(cb),
          start_(std::chrono::steady_clock::now()) {
        for (const auto& p : all_pairs(m)) pairs_.push_back({p.i - 1, p.j - 1});
    }

    SearchReport run() {
        SearchReport report;
        report.order = m_;
        report.normalized = opts_.force_first_column;
        report.workers = std::max(1u, opts_.workers);
        nodes_ = 1;  // root

        const bool parity_refuted = opts_.parity_prune && m_ % 2 == 1 && m_ >= 3;
        if (!parity_refuted) {
            const unsigned workers = report.workers;
            if (workers == 1) {
                work();
            } else {
                std::vector<std::jthread> pool;
                pool.reserve(workers);
                for (unsigned w = 0; w < workers; ++w) pool.emplace_back([this] { work(); });
            }
        }

        std::sort(found_.begin(), found_.end(),
                  [](const Solution& a, const Solution& b) { return a.columns < b.columns; });
        report.solutions = std::move(found_);
        report.nodes = nodes_.load();
        report.elapsed = std::chrono::steady_clock::now() - start_;
        report.limit = limit_;
        report.exhaustive = limit_ == LimitHit::none;
        return report;
    }

private:
    void place(State& s, ColumnIndex c) const {
        const ColumnIndex bits = c - 1;
        const std::uint32_t slot = std::uint32_t{1} << s.depth;
        for (int k = 2; k <= m_; ++k) {
            if ((bits >> (k - 2)) & 1U) s.rows[static_cast<std::size_t>(k - 1)] |= slot;
        }
        s.chosen[static_cast<std::size_t>(s.depth)] = c;
        ++s.depth;
    }

    void unplace(State& s) const {
        --s.depth;
        const std::uint32_t keep = ~(std::uint32_t{1} << s.depth);
        for (int k = 2; k <= m_; ++k) s.rows[static_cast<std::size_t>(k - 1)] &= keep;
    }

    bool admissible(const State& s) const {
        const int remaining = m_ - s.depth;
        for (const auto& [a, b] : pairs_) {
            const int disagreements = std::popcount(s.rows[a] ^ s.rows[b]);
            const int sum = s.depth - 2 * disagreements;
            if (remaining == 0) {
                if (sum != 0) return false;
            } else if (opts_.bound_prune && std::abs(sum) > remaining) {
                return false;
            }
        }
        return true;
    }

    // Candidate range for the next slot: ascending, leaving room for the rest.
    std::pair<ColumnIndex, ColumnIndex> candidates(const State& s) const {
        const ColumnIndex lo = s.depth == 0 ? 1 : s.chosen[static_cast<std::size_t>(s.depth - 1)] + 1;
        ColumnIndex hi = n_ - static_cast<ColumnIndex>(m_ - s.depth - 1);
        if (s.depth == 0 && opts_.force_first_column) hi = std::min<ColumnIndex>(hi, 1);
        return {lo, hi};
    }

    // Serial enumeration of admissible prefixes of depth min(2, m), under
    // gen_mu_. Leaves met on the way are recorded directly.
    bool next_prefix(State& out) {
        std::lock_guard lock(gen_mu_);
        const int target = std::min(2, m_);
        while (!stop_.load(std::memory_order_relaxed)) {
            if (gen_.depth == target) {
                if (target == m_) record(gen_);
                else out = gen_;
                const bool have = target < m_;
                unplace(gen_);
                gen_next_ = gen_.chosen[static_cast<std::size_t>(gen_.depth)] + 1;
                if (have) return true;
                continue;
            }
            const auto [lo, hi] = candidates(gen_);
            const ColumnIndex start = std::max(lo, gen_next_);
            if (start > hi) {
                if (gen_.depth == 0) return false;
                unplace(gen_);
                gen_next_ = gen_.chosen[static_cast<std::size_t>(gen_.depth)] + 1;
                continue;
            }
            count_nodes(1);
            place(gen_, start);
            gen_next_ = 0;
            if (!admissible(gen_)) {
                unplace(gen_);
                gen_next_ = start + 1;
            }
        }
        return false;
    }

    void work() {
        State s;
        std::uint64_t local = 0;
        while (next_prefix(s)) {
            dfs(s, local);
            count_nodes(local);
            local = 0;
        }
    }

    void dfs(State& s, std::uint64_t& local) {
        if (s.depth == m_) {
            record(s);
            return;
        }
        const auto [lo, hi] = candidates(s);
        for (ColumnIndex c = lo; c <= hi; ++c) {
            if (stop_.load(std::memory_order_relaxed)) return;
            if (++local == kFlushInterval) {
                count_nodes(local);
                local = 0;
            }
            place(s, c);
            if (admissible(s)) dfs(s, local);
            unplace(s);
        }
    }

    void count_nodes(std::uint64_t k) {
        if (k == 0) return;
        const std::uint64_t total = nodes_.fetch_add(k, std::memory_order_relaxed) + k;
        if (opts_.node_limit && total >= *opts_.node_limit) halt(LimitHit::nodes);
        if (opts_.time_limit && std::chrono::steady_clock::now() - start_ >= *opts_.time_limit) {
            halt(LimitHit::time);
        }
    }

    void halt(LimitHit why) {
        std::lock_guard lock(limit_mu_);
        if (limit_ == LimitHit::none) limit_ = why;
        stop_ = true;
    }

    void record(const State& s) {
        Solution sol;
        sol.columns.assign(s.chosen.begin(), s.chosen.begin() + s.depth);
        sol.verification = verify_column_set(m_, sol.columns);
        if (!sol.verification.accepted() || !sol.verification.consistent()) {
            throw std::logic_error("search emitted a column set that fails verification");
        }
        if (opts_.materialize) sol.dense = column_set_matrix(m_, sol.columns);

        std::lock_guard lock(collector_mu_);
        if (opts_.solution_limit && found_.size() >= *opts_.solution_limit) return;
        if (callback_) callback_(sol);
        found_.push_back(std::move(sol));
        if (opts_.solution_limit && found_.size() >= *opts_.solution_limit) {
            halt(LimitHit::solutions);
        }
    }

    int m_;
    ColumnIndex n_;
    const SearchOptions& opts_;
    const SolutionCallback& callback_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;

    std::mutex gen_mu_;
    State gen_;
    ColumnIndex gen_next_ = 0;

    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> stop_{false};
    std::mutex limit_mu_;
    LimitHit limit_ = LimitHit::none;

    std::mutex collector_mu_;
    std::vector<Solution> found_;
};

}  // namespace

SearchReport find_hadamard_column_sets(int m, const SearchOptions& opts,
                                       const SolutionCallback& on_solution) {
    const int cap = std::min(opts.order_cap, kMaxSlots - 1);
    check_order(m, cap, 2);
    if (opts.solution_limit && *opts.solution_limit == 0) {
        throw ArgumentError("solution limit must be positive");
    }
    Engine engine(m, opts, on_solution);
    return engine.run();
}

}  // namespace hdq
