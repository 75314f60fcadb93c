// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "dyson/analytic_bounds.hpp"
#include "dyson/conjectures.hpp"
#include "dyson/convexity.hpp"
#include "dyson/known_values.hpp"
#include "dyson/max_product.hpp"
#include "dyson/rank_table.hpp"

namespace
{

using dyson::BigInt;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string &why)
    {
        if (pass) {
            detail = why;
        }
        pass = false;
    }
};

int threads()
{
    return static_cast<int>(std::max(1u, std::min(8u, std::thread::hardware_concurrency())));
}

const dyson::RankTable &big_table()
{
    static const dyson::RankTable t = dyson::build_rank_table(2000);
    return t;
}

Outcome table_reproduction()
{
    Outcome o;
    const dyson::RankTable t = dyson::build_rank_table(64);
    int rows = 0;
    for (int r : {0, 1}) {
        for (const auto &row : dyson::reference_rows(r)) {
            ++rows;
            const BigInt got = dyson::residue_count(t, r, 3, row.n);
            if (got != row.count) {
                o.fail("N(" + std::to_string(r) + ",3;" + std::to_string(row.n) + ") = " + dyson::to_string(got) +
                       ", reference row says " + std::to_string(row.count));
            }
        }
    }
    if (o.pass) {
        o.detail = std::to_string(rows) + " rows";
    }
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    const dyson::RankTable t = dyson::build_rank_table(40);
    for (int n = 0; n <= 40 && o.pass; ++n) {
        const auto brute = dyson::brute_rank_counts(n);
        for (int m = -n; m <= n; ++m) {
            const auto it = brute.find(m);
            if (t.count(m, n) != (it == brute.end() ? BigInt(0) : it->second)) {
                o.fail("m=" + std::to_string(m) + " n=" + std::to_string(n));
            }
        }
    }
    if (o.pass) {
        o.detail = "all m, n <= 40";
    }
    return o;
}

Outcome global_identities()
{
    Outcome o;
    const auto &t = big_table();
    const auto p = dyson::partition_numbers(1000);
    for (int n = 0; n <= 1000; ++n) {
        if (t.row_sum(n) != p[static_cast<std::size_t>(n)]) {
            o.fail("row sum at n=" + std::to_string(n));
        }
        for (int m = 1; m <= n; ++m) {
            if (t.count(m, n) != t.count(-m, n)) {
                o.fail("symmetry at m=" + std::to_string(m) + " n=" + std::to_string(n));
            }
        }
    }
    for (const auto &[mod, off] : {std::pair{5, 4}, std::pair{7, 5}}) {
        for (int n = off; n <= 1000; n += mod) {
            const BigInt share = p[static_cast<std::size_t>(n)] / mod;
            for (int r = 0; r < mod; ++r) {
                if (dyson::residue_count(t, r, mod, n) != share) {
                    o.fail("congruence mod " + std::to_string(mod) + " at n=" + std::to_string(n));
                }
            }
        }
    }
    if (o.pass) {
        o.detail = "n <= 1000";
    }
    return o;
}

Outcome convexity_scan()
{
    Outcome o;
    const dyson::RankTable t = dyson::build_rank_table(1000);
    std::size_t pairs = 0;
    for (int r = 0; r < 3; ++r) {
        const int lo = r == 0 ? 12 : 11;
        const auto rep = dyson::scan_region(t, r, 3, dyson::ScanRange{lo, 500, lo, 500}, threads());
        pairs += rep.pairs_checked;
        if (!rep.violations.empty()) {
            const auto &v = rep.violations.front();
            o.fail("r=" + std::to_string(r) + " a=" + std::to_string(v.a) + " b=" + std::to_string(v.b));
        }
    }
    const auto c0 = dyson::check_pair(t, 0, 3, 11, 11);
    if (c0.holds || c0.lhs != 256 || c0.rhs != 340) {
        o.fail("counterexample 256 < 340 not reproduced");
    }
    for (int r : {1, 2}) {
        const auto c = dyson::check_pair(t, r, 3, 10, 10);
        if (c.holds || c.lhs != 169 || c.rhs != 211) {
            o.fail("counterexample 169 < 211 not reproduced");
        }
    }
    if (o.pass) {
        o.detail = std::to_string(pairs) + " pairs, counterexamples reproduced";
    }
    return o;
}

Outcome lehmer_sandwich()
{
    Outcome o;
    const auto p = dyson::partition_numbers(1000);
    for (int n = 2; n <= 1000; ++n) {
        const auto b = dyson::lehmer_bounds(n);
        const BigInt &pn = p[static_cast<std::size_t>(n)];
        if (!(dyson::exact_less(b.lower, pn) && dyson::exact_less(pn, b.upper))) {
            o.fail("sandwich at n=" + std::to_string(n));
        }
    }
    for (int n = 1; n <= 500; ++n) {
        const auto e = dyson::lehmer_estimate(n);
        if (!(std::abs(dyson::to_double(p[static_cast<std::size_t>(n)]) - e.value) < e.error_cap)) {
            o.fail("estimate at n=" + std::to_string(n));
        }
    }
    if (o.pass) {
        o.detail = "2 <= n <= 1000, estimate n <= 500";
    }
    return o;
}

Outcome error_budget()
{
    Outcome o;
    const auto &t = big_table();
    double worst = 0.0;
    for (int n = 500; n <= 2000; n += 50) {
        const auto eb = dyson::error_budget(n);
        const BigInt a = dyson::a_third_exact(t, n);
        const bool inside = dyson::compare_exact(a, eb.main - eb.total) == std::partial_ordering::greater &&
                            dyson::compare_exact(a, eb.main + eb.total) == std::partial_ordering::less;
        if (!inside) {
            o.fail("|A - M| exceeds the budget at n=" + std::to_string(n));
        }
        if (!(eb.total < dyson::kBudgetEnvelopeFactor * eb.env_lower)) {
            o.fail("budget exceeds 0.58 L at n=" + std::to_string(n));
        }
        worst = std::max(worst, eb.total / eb.env_lower);
    }
    if (o.pass) {
        o.detail = "max budget/L = " + std::to_string(worst);
    }
    return o;
}

Outcome ratio_caps()
{
    Outcome o;
    std::string values;
    for (int i = 1; i <= 6; ++i) {
        const auto idx = static_cast<std::size_t>(i - 1);
        const double f = dyson::ratio_F(i, 500);
        if (!(f <= dyson::kDerivedRatioCaps[idx])) {
            o.fail("F" + std::to_string(i) + "(500) = " + std::to_string(f));
        }
        double prev = f;
        for (int n = 550; n <= 5000; n += 50) {
            const double g = dyson::ratio_F(i, n);
            if (g > prev) {
                o.fail("F" + std::to_string(i) + " increases at n=" + std::to_string(n));
            }
            prev = g;
        }
        char buf[48];
        std::snprintf(buf, sizeof buf, "%sF%d=%.3g", i > 1 ? " " : "", i, f);
        values += buf;
    }
    for (int i : dyson::ratio_cap_discrepancies()) {
        const auto idx = static_cast<std::size_t>(i - 1);
        char buf[96];
        std::snprintf(buf, sizeof buf, "; flagged: F%d cap %.2g vs tabulated %.2g", i, dyson::kDerivedRatioCaps[idx],
                      dyson::kTableRatioCaps[idx]);
        values += buf;
    }
    if (o.pass) {
        o.detail = values;
    }
    return o;
}

Outcome threshold_inequality()
{
    Outcome o;
    std::vector<int> xs;
    for (int x = 500; x <= 600; ++x) {
        xs.push_back(x);
    }
    xs.insert(xs.end(), {1000, 2000, 5000});
    for (int x : xs) {
        if (!dyson::lemma_threshold(x, 3, 0.01)) {
            o.fail("x=" + std::to_string(x));
        }
    }
    if (o.pass) {
        o.detail = std::to_string(xs.size()) + " points";
    }
    return o;
}

Outcome closed_form_equivalence()
{
    Outcome o;
    const auto &t = big_table();
    for (int r = 0; r < 3; ++r) {
        const auto rep = dyson::verify_theorem2(t, r, r == 0 ? 33 : 22, 500);
        if (!rep.mismatches.empty()) {
            o.fail("r=" + std::to_string(r) + " n=" + std::to_string(rep.mismatches.front().n));
        }
        const auto &rows = dyson::reference_rows(r);
        const dyson::MaxProductSolver s(t, r, 3, rows.back().n);
        for (const auto &row : rows) {
            const auto e = s.entry(row.n);
            auto want = row.optima;
            std::sort(want.begin(), want.end());
            if (e.value != row.max_value || e.optima != want || e.optima_truncated) {
                o.fail("small table r=" + std::to_string(r) + " n=" + std::to_string(row.n));
            }
        }
    }
    if (o.pass) {
        o.detail = "33..500 (r=0), 22..500 (r=1,2), small rows incl. multi-optima";
    }
    return o;
}

Outcome dp_brute_equivalence()
{
    Outcome o;
    const auto &t = big_table();
    int cases = 0;
    for (int mod : {2, 3}) {
        for (int r = 0; r < std::min(mod, 3); ++r) {
            const auto dp = dyson::max_table(t, r, mod, 35, 1 << 16);
            for (int n = 1; n <= 35; ++n) {
                ++cases;
                const auto b = dyson::brute_max(t, r, mod, n);
                const auto &e = dp[static_cast<std::size_t>(n)];
                if (e.value != b.value || e.optima != b.optima || e.optima_truncated) {
                    o.fail("r=" + std::to_string(r) + " t=" + std::to_string(mod) + " n=" + std::to_string(n));
                }
            }
        }
    }
    if (o.pass) {
        o.detail = std::to_string(cases) + " cases";
    }
    return o;
}

Outcome conjecture_suites()
{
    Outcome o;
    const auto &t = big_table();
    for (int r : {0, 1}) {
        const auto scan = dyson::conjecture1_scan(t, r, 300, threads());
        if (!scan.violations.empty()) {
            o.fail("convexity mod 2 fails for r=" + std::to_string(r));
        }
        const auto rep = dyson::conjecture_t2(t, r, r == 0 ? 6 : 8, 200);
        if (!rep.agrees()) {
            o.fail("closed form mod 2 differs for r=" + std::to_string(r) + " at n=" +
                   std::to_string(rep.mismatches.front().n));
        }
    }
    const auto e = dyson::MaxProductSolver(t, 1, 2, 8).entry(8);
    const std::vector<dyson::Partition> listed{{6, 2}, {4, 4}, {4, 2, 2}, {2, 2, 2, 2}};
    if (e.value != 16 || e.optima != listed) {
        o.fail("maxN(1,2;8) example");
    }
    if (o.pass) {
        o.detail = "agreement; maxN(1,2;8) = 16 with 4 optima";
    }
    return o;
}

struct Criterion {
    int id;
    const char *name;
    double limit_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "table reproduction", 10, table_reproduction},
        {2, "q-series vs enumeration", 120, oracle_equivalence},
        {3, "global identities", 600, global_identities},
        {4, "convexity scan mod 3", 300, convexity_scan},
        {5, "Lehmer sandwich", 600, lehmer_sandwich},
        {6, "error budget", 600, error_budget},
        {7, "ratio caps", 600, ratio_caps},
        {8, "threshold inequality", 600, threshold_inequality},
        {9, "closed form vs DP", 60, closed_form_equivalence},
        {10, "DP vs brute force", 300, dp_brute_equivalence},
        {11, "conjecture suites", 600, conjecture_suites},
    };
    // criterion 9 is timed given the table, so build it ahead of the clock
    (void)big_table();
    int failed = 0;
    for (const auto &c : criteria) {
        const auto start = Clock::now();
        Outcome o = c.run();
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (secs > c.limit_seconds) {
            o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
        }
        failed += o.pass ? 0 : 1;
        std::printf("[%s] AC%-2d %-26s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
    return failed ? 1 : 0;
}
