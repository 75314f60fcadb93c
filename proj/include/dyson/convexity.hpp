#ifndef DYSON_CONVEXITY_HPP
#define DYSON_CONVEXITY_HPP

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "bigint.hpp"
#include "rank_table.hpp"

namespace dyson
{

/// Outcome of N(r,t;a) N(r,t;b) > N(r,t;a+b) for one pair.
struct PairCheck {
    bool holds = false;
    BigInt lhs;
    BigInt rhs;
};

struct Violation {
    int a = 0;
    int b = 0;
    BigInt lhs;
    BigInt rhs;
    friend bool operator==(const Violation &, const Violation &) = default;
};

/// Region a_min <= a <= a_max, b_min <= b <= b_max, restricted to a <= b.
struct ScanRange {
    int a_min = 1;
    int a_max = 1;
    int b_min = 1;
    int b_max = 1;
};

struct ConvexityReport {
    int r = 0;
    int t = 3;
    ScanRange range;
    std::vector<Violation> violations;
    long long pairs_checked = 0;
};

inline PairCheck check_pair(const RankTable &table, int r, int t, int a, int b)
{
    if (a < 1 || b < 1) {
        throw std::out_of_range("check_pair: a and b must be >= 1");
    }
    if (a + b > table.n_max()) {
        throw std::out_of_range("check_pair: a + b = " + std::to_string(a + b) + " exceeds table n_max " +
                                std::to_string(table.n_max()));
    }
    PairCheck c;
    c.lhs = residue_count(table, r, t, a) * residue_count(table, r, t, b);
    c.rhs = residue_count(table, r, t, a + b);
    c.holds = c.lhs > c.rhs;
    return c;
}

namespace detail
{

inline void scan_strip(std::span<const BigInt> values, const ScanRange &range, int a_begin, int a_end,
                       std::vector<Violation> &out, long long &checked)
{
    BigInt lhs;
    for (int a = a_begin; a < a_end; ++a) {
        const BigInt &va = values[static_cast<std::size_t>(a)];
        for (int b = std::max(a, range.b_min); b <= range.b_max; ++b) {
            lhs = va * values[static_cast<std::size_t>(b)];
            const BigInt &rhs = values[static_cast<std::size_t>(a + b)];
            ++checked;
            if (!(lhs > rhs)) {
                out.push_back({a, b, lhs, rhs});
            }
        }
    }
}

} // namespace detail

/// Exhaustive check over the range with a <= b; violations sorted by (a, b).
/// `threads` > 1 splits the a-axis into strips checked concurrently.
inline ConvexityReport scan_region(const RankTable &table, int r, int t, const ScanRange &range, int threads = 1)
{
    if (range.a_min < 1 || range.b_min < 1) {
        throw std::out_of_range("scan_region: a_min and b_min must be >= 1");
    }
    if (range.a_max + range.b_max > table.n_max()) {
        throw std::out_of_range("scan_region: a_max + b_max = " + std::to_string(range.a_max + range.b_max) +
                                " exceeds table n_max " + std::to_string(table.n_max()));
    }
    ConvexityReport report;
    report.r = r;
    report.t = t;
    report.range = range;
    const int a_hi = std::min(range.a_max, range.b_max);
    if (range.a_min > a_hi) {
        return report;
    }
    const std::vector<BigInt> values = residue_counts(table, r, t);

    const int span = a_hi - range.a_min + 1;
    const int workers = std::clamp(threads, 1, span);
    std::vector<std::vector<Violation>> found(static_cast<std::size_t>(workers));
    std::vector<long long> counted(static_cast<std::size_t>(workers), 0);
    // Interleave a-values across workers so triangular rows balance.
    auto job = [&](int w) {
        for (int a = range.a_min + w; a <= a_hi; a += workers) {
            detail::scan_strip(values, range, a, a + 1, found[static_cast<std::size_t>(w)],
                               counted[static_cast<std::size_t>(w)]);
        }
    };
    if (workers == 1) {
        job(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(job, w);
        }
    }
    for (int w = 0; w < workers; ++w) {
        auto &f = found[static_cast<std::size_t>(w)];
        report.violations.insert(report.violations.end(), std::make_move_iterator(f.begin()),
                                 std::make_move_iterator(f.end()));
        report.pairs_checked += counted[static_cast<std::size_t>(w)];
    }
    std::sort(report.violations.begin(), report.violations.end(),
              [](const Violation &x, const Violation &y) { return x.a != y.a ? x.a < y.a : x.b < y.b; });
    return report;
}

/// Smallest s such that no violation with 1 <= a <= b <= search_max has a >= s.
inline int sharpness_frontier(const RankTable &table, int r, int t, int search_max, int threads = 1)
{
    if (2 * search_max > table.n_max()) {
        throw std::out_of_range("sharpness_frontier: 2 * search_max exceeds table n_max");
    }
    const auto report = scan_region(table, r, t, ScanRange{1, search_max, 1, search_max}, threads);
    int frontier = 1;
    for (const auto &v : report.violations) {
        frontier = std::max(frontier, std::min(v.a, v.b) + 1);
    }
    return frontier;
}

} // namespace dyson

#endif
