#ifndef DYSON_MAX_PRODUCT_HPP
#define DYSON_MAX_PRODUCT_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "known_values.hpp"
#include "partition.hpp"
#include "rank_table.hpp"

namespace dyson
{

/// maxN(r,t;n) with its optimal partitions in reverse-lexicographic order.
struct MaxProductEntry {
    int n = 0;
    BigInt value;
    std::vector<Partition> optima;
    /// Set when more than the requested cap of optima exist; `optima` then holds the first cap.
    bool optima_truncated = false;
};

inline constexpr std::size_t kDefaultOptimaCap = 64;

/// Product of N(r,t; part) over the parts; the empty partition gives 1.
inline BigInt product_over_partition(const RankTable &table, int r, int t, const Partition &lambda)
{
    BigInt prod = 1;
    for (int part : lambda.parts()) {
        if (part > table.n_max()) {
            throw std::out_of_range("product_over_partition: part " + std::to_string(part) +
                                    " exceeds table n_max " + std::to_string(table.n_max()));
        }
        prod *= residue_count(table, r, t, part);
    }
    return prod;
}

/// Dynamic program over (size, largest allowed part).
///
/// best(n, j) is the maximal product over partitions of n with parts <= j. Optima are
/// rebuilt by walking the states whose value is attained, largest first part first,
/// so each multiset is produced once and the output is in reverse-lexicographic order.
class MaxProductSolver
{
public:
    MaxProductSolver(const RankTable &table, int r, int t, int n_max)
        : n_max_(n_max), values_(residue_counts_upto(table, r, t, n_max))
    {
        best_.resize(static_cast<std::size_t>(n_max_) + 1);
        best_[0].assign(1, BigInt(1));
        for (int n = 1; n <= n_max_; ++n) {
            auto &row = best_[static_cast<std::size_t>(n)];
            row.resize(static_cast<std::size_t>(n) + 1);
            row[0] = -1; // no partition of n > 0 with parts <= 0
            for (int j = 1; j <= n; ++j) {
                BigInt with_j = values_[static_cast<std::size_t>(j)] * best(n - j, j);
                const BigInt &without = row[static_cast<std::size_t>(j - 1)];
                row[static_cast<std::size_t>(j)] = with_j > without ? std::move(with_j) : without;
            }
        }
    }

    [[nodiscard]] int n_max() const noexcept
    {
        return n_max_;
    }

    [[nodiscard]] const BigInt &value(int n) const
    {
        check(n);
        return best(n, n);
    }

    [[nodiscard]] MaxProductEntry entry(int n, std::size_t cap = kDefaultOptimaCap) const
    {
        check(n);
        MaxProductEntry e;
        e.n = n;
        e.value = value(n);
        std::vector<int> prefix;
        Collector col{cap, e.optima, e.optima_truncated};
        collect(n, n, e.value, false, prefix, col);
        return e;
    }

private:
    struct Collector {
        std::size_t cap;
        std::vector<Partition> &out;
        bool &truncated;
        [[nodiscard]] bool full() const noexcept
        {
            return truncated;
        }
        void add(const std::vector<int> &parts)
        {
            if (out.size() >= cap) {
                truncated = true;
                return;
            }
            out.emplace_back(parts);
        }
    };

    static std::vector<BigInt> residue_counts_upto(const RankTable &table, int r, int t, int n_max)
    {
        if (n_max < 0 || n_max > table.n_max()) {
            throw std::out_of_range("max_table: n_max must lie in [0, table n_max]");
        }
        std::vector<BigInt> v;
        v.reserve(static_cast<std::size_t>(n_max) + 1);
        for (int k = 0; k <= n_max; ++k) {
            v.push_back(residue_count(table, r, t, k));
        }
        return v;
    }

    void check(int n) const
    {
        if (n < 0 || n > n_max_) {
            throw std::out_of_range("max product solver covers 0 <= n <= " + std::to_string(n_max_));
        }
    }

    [[nodiscard]] const BigInt &best(int n, int j) const
    {
        return best_[static_cast<std::size_t>(n)][static_cast<std::size_t>(std::min(j, n))];
    }

    // Emits every partition of n with parts <= j whose product equals target;
    // with `any` set, every partition of n with parts <= j.
    void collect(int n, int j, const BigInt &target, bool any, std::vector<int> &prefix, Collector &col) const
    {
        if (col.full()) {
            return;
        }
        if (n == 0) {
            col.add(prefix);
            return;
        }
        for (int p = std::min(j, n); p >= 1 && !col.full(); --p) {
            const BigInt &vp = values_[static_cast<std::size_t>(p)];
            const BigInt &rest = best(n - p, p);
            prefix.push_back(p);
            if (any || (vp.is_zero() && target.is_zero())) {
                collect(n - p, p, rest, true, prefix, col);
            } else if (!vp.is_zero() && vp * rest == target) {
                collect(n - p, p, rest, false, prefix, col);
            }
            prefix.pop_back();
        }
    }

    int n_max_;
    std::vector<BigInt> values_;
    std::vector<std::vector<BigInt>> best_;
};

/// maxN(r,t;n) and its optima for n = 0..n_max.
inline std::vector<MaxProductEntry> max_table(const RankTable &table, int r, int t, int n_max,
                                              std::size_t cap = kDefaultOptimaCap)
{
    const MaxProductSolver solver(table, r, t, n_max);
    std::vector<MaxProductEntry> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(solver.entry(n, cap));
    }
    return out;
}

/// Exhaustive maximization over all partitions of n; the complete optima set.
inline MaxProductEntry brute_max(const RankTable &table, int r, int t, int n)
{
    MaxProductEntry e;
    e.n = n;
    e.value = -1;
    std::vector<BigInt> values;
    for (int k = 0; k <= n; ++k) {
        values.push_back(residue_count(table, r, t, k));
    }
    for_each_partition(n, [&](Partition p) {
        BigInt prod = 1;
        for (int part : p.parts()) {
            prod *= values[static_cast<std::size_t>(part)];
        }
        if (prod > e.value) {
            e.value = std::move(prod);
            e.optima.clear();
            e.optima.push_back(std::move(p));
        } else if (prod == e.value) {
            e.optima.push_back(std::move(p));
        }
        return true;
    });
    return e;
}

/// One residue class of the closed form for large n:
///   value = coefficient * base^((n - shift) / step),
///   partition = head parts followed by (n - shift) / step copies of `step`.
struct ClosedFormCase {
    int residue_class;
    BigInt coefficient;
    std::vector<int> head;
    int shift;
};

struct ClosedFormFamily {
    int step;      // 7 for r = 0, 14 for r = 1, 2
    BigInt base;   // N(r,3;step): 7 or 46
    int threshold; // 33 for r = 0, 22 for r = 1, 2
    std::vector<ClosedFormCase> cases;
};

inline const ClosedFormFamily &closed_form_family(int r)
{
    static const ClosedFormFamily zero{
        7,
        7,
        33,
        {
            {0, 1, {}, 0},
            {1, BigInt(37 * 37 * 16), {13, 13, 10}, 36},
            {2, BigInt(37 * 16), {13, 10}, 23},
            {3, BigInt(16), {10}, 10},
            {4, BigInt(37 * 37 * 37), {13, 13, 13}, 39},
            {5, BigInt(37 * 37), {13, 13}, 26},
            {6, BigInt(37), {13}, 13},
        }};
    static const ClosedFormFamily one{
        14,
        46,
        22,
        {
            {0, 1, {}, 0},
            {1, BigInt(59), {15}, 15},
            {2, BigInt(59 * 59), {15, 15}, 30},
            {3, BigInt(101), {17}, 17},
            {4, BigInt(101 * 59), {17, 15}, 32},
            {5, BigInt(20 * 20 * 20), {11, 11, 11}, 33},
            {6, BigInt(26 * 20 * 20), {12, 11, 11}, 34},
            {7, BigInt(26 * 26 * 20), {12, 12, 11}, 35},
            {8, BigInt(20 * 20), {11, 11}, 22},
            {9, BigInt(26 * 20), {12, 11}, 23},
            {10, BigInt(26 * 26), {12, 12}, 24},
            {11, BigInt(20), {11}, 11},
            {12, BigInt(26), {12}, 12},
            {13, BigInt(59 * 26), {15, 12}, 27},
        }};
    if (r == 0) {
        return zero;
    }
    if (r == 1 || r == 2) {
        return one;
    }
    throw std::invalid_argument("closed form exists for r in {0, 1, 2} only");
}

struct ClosedForm {
    BigInt value;
    /// Canonical nonincreasing form.
    Partition partition;
    /// Head parts in display order followed by the filler parts.
    std::vector<int> displayed;
};

inline ClosedForm closed_form(int r, int n)
{
    const ClosedFormFamily &fam = closed_form_family(r);
    if (n < fam.threshold) {
        throw std::invalid_argument("closed_form: requires n >= " + std::to_string(fam.threshold) + " for r = " +
                                    std::to_string(r) + ", got " + std::to_string(n));
    }
    const ClosedFormCase &c = fam.cases[static_cast<std::size_t>(n % fam.step)];
    const int fillers = (n - c.shift) / fam.step;
    ClosedForm out;
    out.value = c.coefficient * boost::multiprecision::pow(fam.base, static_cast<unsigned>(fillers));
    out.displayed = c.head;
    out.displayed.insert(out.displayed.end(), static_cast<std::size_t>(fillers), fam.step);
    out.partition = Partition::from_multiset(out.displayed);
    return out;
}

struct Theorem2Mismatch {
    int n = 0;
    BigInt dp_value;
    BigInt closed_value;
    std::vector<Partition> dp_optima;
    Partition expected;
};

struct Theorem2Report {
    int r = 0;
    int n_lo = 0;
    int n_hi = 0;
    std::vector<Theorem2Mismatch> mismatches;
    [[nodiscard]] bool ok() const noexcept
    {
        return mismatches.empty();
    }
};

/// Compares the DP against the closed form on [n_lo, n_hi]: equal value and a
/// single optimum equal to the closed-form partition.
inline Theorem2Report verify_theorem2(const RankTable &table, int r, int n_lo, int n_hi)
{
    const ClosedFormFamily &fam = closed_form_family(r);
    if (n_lo < fam.threshold) {
        throw std::invalid_argument("verify_theorem2: n_lo must be >= " + std::to_string(fam.threshold));
    }
    if (n_hi > table.n_max()) {
        throw std::out_of_range("verify_theorem2: n_hi exceeds table n_max");
    }
    Theorem2Report rep{r, n_lo, n_hi, {}};
    if (n_hi < n_lo) {
        return rep;
    }
    const MaxProductSolver solver(table, r, 3, n_hi);
    for (int n = n_lo; n <= n_hi; ++n) {
        const MaxProductEntry e = solver.entry(n, 2);
        const ClosedForm cf = closed_form(r, n);
        const bool unique = e.optima.size() == 1 && !e.optima_truncated;
        if (e.value != cf.value || !unique || e.optima.front() != cf.partition) {
            rep.mismatches.push_back({n, e.value, cf.value, e.optima, cf.partition});
        }
    }
    return rep;
}

/// A multiset substitution claimed to strictly increase the product.
struct RuleCheck {
    std::string source;
    Partition before;
    Partition after;
    BigInt before_value;
    BigInt after_value;
    [[nodiscard]] bool holds() const
    {
        return after_value > before_value;
    }
};

struct ReplacementReport {
    int r = 0;
    std::vector<RuleCheck> checks;
    [[nodiscard]] bool ok() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const RuleCheck &c) { return c.holds(); });
    }
};

/// Every substitution used to prune optimal partitions, evaluated exactly.
///
/// Explicit substitutions are hard-coded. The generic ones replace a block by the
/// optimal partition of its sum: from the DP below the closed-form threshold and
/// from the closed form at or above it.
inline ReplacementReport verify_replacement_rules(const RankTable &table, int r)
{
    const ClosedFormFamily &fam = closed_form_family(r);
    const int small_max = fam.threshold - 1;
    const MaxProductSolver solver(table, r, 3, std::min(small_max, table.n_max()));
    auto representation = [&](int s) -> Partition {
        if (s >= fam.threshold) {
            return closed_form(r, s).partition;
        }
        return solver.entry(s, 1).optima.front();
    };
    ReplacementReport rep;
    rep.r = r;
    auto add = [&](std::string source, std::vector<int> before, const Partition &after) {
        Partition b = Partition::from_multiset(std::move(before));
        RuleCheck c{std::move(source), b, after, product_over_partition(table, r, 3, b),
                    product_over_partition(table, r, 3, after)};
        rep.checks.push_back(std::move(c));
    };
    auto explicit_rule = [&](const char *source, std::vector<int> before, std::vector<int> after) {
        add(source, std::move(before), Partition::from_multiset(std::move(after)));
    };

    if (r == 0) {
        for (int i : {2, 5, 8, 11, 12, 14, 15, 17, 18, 19, 20, 21, 22, 23}) {
            add("single part replaced by optimal partition", {i}, representation(i));
        }
        explicit_rule("multiplicity", {1, 1, 1, 1}, {4});
        explicit_rule("multiplicity", {3, 3}, {6});
        explicit_rule("multiplicity", {4, 4, 4, 4, 4}, {13, 7});
        explicit_rule("multiplicity", {6, 6}, {4, 4, 4});
        explicit_rule("multiplicity", {9, 9}, {7, 7, 4});
        explicit_rule("multiplicity", {10, 10}, {13, 7});
        explicit_rule("multiplicity", {13, 13, 13, 13}, {10, 7, 7, 7, 7, 7, 7});
        const std::array<int, 8> present{3, 4, 6, 7, 9, 10, 13, 16};
        const std::array<int, 3> lonely{3, 6, 16};
        for (std::size_t si = 0; si < lonely.size(); ++si) {
            for (int a : present) {
                const int s = lonely[si];
                // unordered pairs among {3, 6, 16} are listed once
                const bool seen = a != s && std::find(lonely.begin(), lonely.begin() + static_cast<long>(si), a) !=
                                                lonely.begin() + static_cast<long>(si);
                if (a == s || seen) {
                    continue;
                }
                add("pair with a 3, 6 or 16 replaced by optimal partition", {a, s}, representation(a + s));
            }
        }
        explicit_rule("parts of size 1 or 4 with 7s", {7, 1}, {4, 4});
        explicit_rule("parts of size 1 or 4 with 7s", {7, 7, 4, 4, 4}, {13, 13});
        explicit_rule("parts of size 1 or 4 with 7s", {7, 7, 7, 7, 4, 4}, {13, 13, 10});
        explicit_rule("parts of size 1 or 4 with 7s", {7, 7, 7, 7, 7, 4}, {13, 13, 13});
    } else {
        for (int i = 1; i <= 21; ++i) {
            if (i == 2 || i == 11 || i == 12 || i == 14 || i == 15) {
                continue;
            }
            add("doubled part replaced by optimal partition", {i, i}, representation(2 * i));
        }
        explicit_rule("multiplicity", {2, 2, 2}, {6});
        explicit_rule("multiplicity", {11, 11, 11, 11}, {15, 15, 14});
        explicit_rule("multiplicity", {12, 12, 12}, {14, 11, 11});
        explicit_rule("multiplicity", {15, 15, 15}, {12, 11, 11, 11});
        for (int i = 1; i <= 21; ++i) {
            if (i != 2) {
                add("part of size 2 merged", {i, 2}, representation(i + 2));
            }
        }
    }
    return rep;
}

struct SmallTableMismatch {
    int n = 0;
    std::string what;
};

struct SmallTableReport {
    int r = 0;
    int rows_checked = 0;
    std::vector<SmallTableMismatch> mismatches;
    [[nodiscard]] bool ok() const noexcept
    {
        return mismatches.empty();
    }
};

/// Checks N(r,3;n), maxN(r,3;n) and the complete optima sets against the published rows.
inline SmallTableReport verify_small_tables(const RankTable &table, int r)
{
    if (r < 0 || r > 2) {
        throw std::invalid_argument("verify_small_tables: r must be 0, 1 or 2");
    }
    const auto &rows = reference_rows(r);
    const int top = rows.back().n;
    if (table.n_max() < top) {
        throw std::out_of_range("verify_small_tables: table must reach n = " + std::to_string(top));
    }
    const MaxProductSolver solver(table, r, 3, top);
    SmallTableReport rep;
    rep.r = r;
    for (const auto &row : rows) {
        ++rep.rows_checked;
        const BigInt count = residue_count(table, r, 3, row.n);
        if (count != row.count) {
            rep.mismatches.push_back({row.n, "N = " + to_string(count) + ", expected " + std::to_string(row.count)});
        }
        const MaxProductEntry e = solver.entry(row.n);
        if (e.value != row.max_value) {
            rep.mismatches.push_back(
                {row.n, "maxN = " + to_string(e.value) + ", expected " + std::to_string(row.max_value)});
        }
        std::vector<Partition> expected = row.optima;
        std::sort(expected.begin(), expected.end());
        if (e.optima != expected || e.optima_truncated) {
            std::string got;
            for (const auto &p : e.optima) {
                got += p.str();
            }
            rep.mismatches.push_back({row.n, "optima " + got + " differ from the reference set"});
        }
    }
    return rep;
}

} // namespace dyson

#endif
