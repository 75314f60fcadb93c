#ifndef DYSON_CONJECTURES_HPP
#define DYSON_CONJECTURES_HPP

// Exploratory checks for the modulus-2 and general-modulus extensions. Nothing
// here is a theorem: a mismatch is data about the conjecture, not a defect.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "convexity.hpp"
#include "max_product.hpp"

namespace dyson
{

/// Convexity thresholds conjectured for t = 2: a, b >= 11 (r = 0) and >= 12 (r = 1).
constexpr int conjectured_t2_threshold(int r)
{
    return r == 0 ? 11 : 12;
}

inline ConvexityReport conjecture1_scan(const RankTable &table, int r, int upto, int threads = 1)
{
    if (r != 0 && r != 1) {
        throw std::invalid_argument("conjecture1_scan: r must be 0 or 1");
    }
    const int lo = conjectured_t2_threshold(r);
    return scan_region(table, r, 2, ScanRange{lo, upto, lo, upto}, threads);
}

struct ConjectureMismatch {
    int n = 0;
    BigInt expected_value;
    BigInt dp_value;
    std::size_t expected_optima = 0;
    std::size_t dp_optima = 0;
    std::string note;
};

struct ConjectureReport {
    int r = 0;
    int t = 2;
    int n_lo = 0;
    int n_hi = 0;
    int agreements = 0;
    std::vector<ConjectureMismatch> mismatches;
    [[nodiscard]] bool agrees() const noexcept
    {
        return mismatches.empty();
    }
};

/// Closure of a partition under (2,2) <-> (4) and (2,2,2) <-> (6), applied in both directions.
inline std::vector<Partition> substitution_closure(const Partition &seed)
{
    std::set<Partition> seen{seed};
    std::vector<Partition> frontier{seed};
    while (!frontier.empty()) {
        const Partition cur = frontier.back();
        frontier.pop_back();
        std::vector<int> parts(cur.parts().begin(), cur.parts().end());
        auto replace = [&](std::multiset<int> take, std::vector<int> give) {
            std::vector<int> next;
            for (int p : parts) {
                auto it = take.find(p);
                if (it != take.end()) {
                    take.erase(it);
                } else {
                    next.push_back(p);
                }
            }
            if (!take.empty()) {
                return;
            }
            next.insert(next.end(), give.begin(), give.end());
            Partition q = Partition::from_multiset(std::move(next));
            if (seen.insert(q).second) {
                frontier.push_back(std::move(q));
            }
        };
        replace({2, 2}, {4});
        replace({2, 2, 2}, {6});
        replace({4}, {2, 2});
        replace({6}, {2, 2, 2});
    }
    return {seen.begin(), seen.end()};
}

/// Conjectured maxN(r,2;n) and the class of optimal partitions.
struct ConjecturedOptimum {
    BigInt value;
    std::vector<Partition> optima;
};

inline ConjecturedOptimum conjectured_t2(int r, int n)
{
    ConjecturedOptimum c;
    std::vector<int> parts;
    if (r == 0) {
        if (n < 6) {
            throw std::invalid_argument("conjectured_t2: r = 0 needs n >= 6");
        }
        int head = 0;
        switch (n % 3) {
        case 0:
            c.value = 1;
            break;
        case 1:
            c.value = 11;
            head = 7;
            break;
        default:
            c.value = 5;
            head = 5;
            break;
        }
        if (head) {
            parts.push_back(head);
        }
        const int threes = (n - head) / 3;
        c.value *= boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(threes));
        parts.insert(parts.end(), static_cast<std::size_t>(threes), 3);
        c.optima = {Partition::from_multiset(parts)};
    } else if (r == 1) {
        if (n < 8) {
            throw std::invalid_argument("conjectured_t2: r = 1 needs n >= 8");
        }
        const int head = n % 2 == 0 ? 0 : 9;
        c.value = head ? 12 : 1;
        if (head) {
            parts.push_back(head);
        }
        const int twos = (n - head) / 2;
        c.value *= boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(twos));
        parts.insert(parts.end(), static_cast<std::size_t>(twos), 2);
        c.optima = substitution_closure(Partition::from_multiset(parts));
    } else {
        throw std::invalid_argument("conjectured_t2: r must be 0 or 1");
    }
    return c;
}

inline constexpr std::size_t kConjectureOptimaCap = 1 << 14;

/// Compares maxN(r,2;n) from the DP with the conjectured closed form on [n_lo, n_hi].
inline ConjectureReport conjecture_t2(const RankTable &table, int r, int n_lo, int n_hi)
{
    const int lo = r == 0 ? 6 : 8;
    if (n_lo < lo) {
        throw std::invalid_argument("conjecture_t2: n_lo must be >= " + std::to_string(lo));
    }
    if (n_hi > table.n_max()) {
        throw std::out_of_range("conjecture_t2: n_hi exceeds table n_max");
    }
    ConjectureReport rep;
    rep.r = r;
    rep.n_lo = n_lo;
    rep.n_hi = n_hi;
    if (n_hi < n_lo) {
        return rep;
    }
    const MaxProductSolver solver(table, r, 2, n_hi);
    for (int n = n_lo; n <= n_hi; ++n) {
        const ConjecturedOptimum c = conjectured_t2(r, n);
        const MaxProductEntry e = solver.entry(n, kConjectureOptimaCap);
        std::string note;
        if (e.value != c.value) {
            note = "value differs";
        } else if (e.optima_truncated) {
            note = "optima set exceeds cap";
        } else if (e.optima != c.optima) {
            note = "optima set differs";
        }
        if (note.empty()) {
            ++rep.agreements;
        } else {
            rep.mismatches.push_back({n, c.value, e.value, c.optima.size(), e.optima.size(), note});
        }
    }
    return rep;
}

struct FrontierRow {
    int r = 0;
    int t = 0;
    int frontier = 0;
    /// true when the frontier sits in the upper half of the search window, so the
    /// window is too small to say anything.
    bool inconclusive = false;
};

/// Empirical convexity frontier for every residue of each modulus 2..t_max.
inline std::vector<FrontierRow> conjecture3_frontiers(const RankTable &table, int t_max, int search_max,
                                                      int threads = 1)
{
    std::vector<FrontierRow> rows;
    for (int t = 2; t <= t_max; ++t) {
        for (int r = 0; r < t; ++r) {
            const int f = sharpness_frontier(table, r, t, search_max, threads);
            rows.push_back({r, t, f, 2 * f > search_max});
        }
    }
    return rows;
}

} // namespace dyson

#endif
