#ifndef DYSON_COMMANDS_HPP
#define DYSON_COMMANDS_HPP

// Command implementations behind the command-line front end. Each returns an
// OutputRecord; parsing, table acquisition and printing live in the tool.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "analytic_bounds.hpp"
#include "bigint.hpp"
#include "conjectures.hpp"
#include "convexity.hpp"
#include "max_product.hpp"
#include "output.hpp"
#include "rank_table.hpp"

namespace dyson
{

/// The loaded table does not reach the size a command needs.
class TableTooSmall : public std::runtime_error
{
public:
    TableTooSmall(int required, int available)
        : std::runtime_error("this command needs a rank table up to n = " + std::to_string(required) +
                             " but the table stops at " + std::to_string(available) + "; rerun with --n-max " +
                             std::to_string(required) + " or larger"),
          required_(required)
    {
    }
    [[nodiscard]] int required() const noexcept
    {
        return required_;
    }

private:
    int required_;
};

/// Bad argument combination; maps to the usage exit code.
class UsageError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail
{

inline void require_table(const RankTable &table, int n)
{
    if (n > table.n_max()) {
        throw TableTooSmall(n, table.n_max());
    }
}

inline void require_residue(int r, int t)
{
    if (t < 1) {
        throw UsageError("--t must be >= 1");
    }
    if (r < 0 || r >= t) {
        throw UsageError("--r must satisfy 0 <= r < t");
    }
}

inline Json partitions_json(const std::vector<Partition> &ps)
{
    Json a = Json::array();
    for (const auto &p : ps) {
        a.push_back(p.str());
    }
    return a;
}

inline int theorem_threshold(int r)
{
    return r == 0 ? 12 : 11;
}

} // namespace detail

inline OutputRecord cmd_count(const RankTable &table, int r, int t, int n, bool with_row = false)
{
    detail::require_residue(r, t);
    if (n < 0) {
        throw UsageError("--n must be >= 0");
    }
    detail::require_table(table, n);
    OutputRecord rec;
    rec.command = "count";
    rec.set("r", r);
    rec.set("t", t);
    rec.set("n", n);
    rec.results["r"] = r;
    rec.results["t"] = t;
    rec.results["n"] = n;
    rec.results["value"] = to_string(residue_count(table, r, t, n));
    if (with_row) {
        Json row = Json::array();
        const int lim = std::max(n - 1, 0);
        for (int m = -lim; m <= lim; ++m) {
            row.push_back(Json{{"m", m}, {"count", to_string(table.count(m, n))}});
        }
        rec.results["row"] = std::move(row);
    }
    return rec;
}

inline OutputRecord cmd_rank_table(const RankTable &table, int from, int to)
{
    if (from < 0 || to < from) {
        throw UsageError("rank-table needs 0 <= --from <= --to");
    }
    detail::require_table(table, to);
    OutputRecord rec;
    rec.command = "rank-table";
    rec.set("from", from);
    rec.set("to", to);
    Json rows = Json::array();
    for (int n = from; n <= to; ++n) {
        const int lim = std::max(n - 1, 0);
        for (int m = -lim; m <= lim; ++m) {
            rows.push_back(Json{{"n", n}, {"m", m}, {"count", to_string(table.count(m, n))}});
        }
    }
    rec.results["rows"] = std::move(rows);
    return rec;
}

inline OutputRecord cmd_maxn(const RankTable &table, int r, int t, int from, int to, bool show_partitions)
{
    detail::require_residue(r, t);
    if (from < 0 || to < from) {
        throw UsageError("maxn needs 0 <= --from <= --to");
    }
    detail::require_table(table, to);
    OutputRecord rec;
    rec.command = "maxn";
    rec.set("r", r);
    rec.set("t", t);
    rec.set("from", from);
    rec.set("to", to);
    rec.set("show_partitions", show_partitions ? "true" : "false");
    const MaxProductSolver solver(table, r, t, to);
    const bool has_closed = t == 3;
    Json rows = Json::array();
    bool all_agree = true;
    for (int n = from; n <= to; ++n) {
        const MaxProductEntry e = solver.entry(n);
        Json row = Json::object();
        row["n"] = n;
        row["value"] = to_string(e.value);
        row["optima_count"] = e.optima_truncated ? Json(std::to_string(e.optima.size()) + "+") : Json(e.optima.size());
        if (show_partitions) {
            row["optima"] = detail::partitions_json(e.optima);
        }
        if (has_closed && n >= closed_form_family(r).threshold) {
            const ClosedForm cf = closed_form(r, n);
            const bool agrees = cf.value == e.value && e.optima.size() == 1 && !e.optima_truncated &&
                                e.optima.front() == cf.partition;
            row["closed_form"] = to_string(cf.value);
            row["closed_form_partition"] = cf.partition.str();
            row["agrees"] = agrees;
            all_agree = all_agree && agrees;
        } else {
            row["closed_form"] = nullptr;
            row["closed_form_partition"] = nullptr;
            row["agrees"] = nullptr;
        }
        rows.push_back(std::move(row));
    }
    rec.results["rows"] = std::move(rows);
    rec.status = all_agree ? Status::ok : Status::violation_found;
    return rec;
}

inline Json violations_json(const std::vector<Violation> &vs, std::optional<int> r = std::nullopt)
{
    Json a = Json::array();
    for (const auto &v : vs) {
        Json o = Json::object();
        if (r) {
            o["r"] = *r;
        }
        o["a"] = v.a;
        o["b"] = v.b;
        o["lhs"] = to_string(v.lhs);
        o["rhs"] = to_string(v.rhs);
        a.push_back(std::move(o));
    }
    return a;
}

inline OutputRecord cmd_convexity(const RankTable &table, int r, int t, int lo, int hi, int threads = 1)
{
    detail::require_residue(r, t);
    if (lo < 1 || hi < lo) {
        throw UsageError("convexity needs 1 <= --min <= --max");
    }
    detail::require_table(table, 2 * hi);
    const ConvexityReport rep = scan_region(table, r, t, ScanRange{lo, hi, lo, hi}, threads);
    OutputRecord rec;
    rec.command = "convexity";
    rec.set("r", r);
    rec.set("t", t);
    rec.set("min", lo);
    rec.set("max", hi);
    rec.results["pairs_checked"] = rep.pairs_checked;
    rec.results["violation_count"] = rep.violations.size();
    rec.results["violations"] = violations_json(rep.violations);
    rec.status = rep.violations.empty() ? Status::ok : Status::violation_found;
    return rec;
}

namespace detail
{

inline Json bounds_row(const RankTable &table, const std::vector<BigInt> &p, int n, bool &violated)
{
    const BoundPair b = lehmer_bounds(n);
    const LehmerEstimate le = lehmer_estimate(n);
    const ErrorBudget eb = error_budget(n);
    const BigInt &pn = p[static_cast<std::size_t>(n)];
    Json row = Json::object();
    row["n"] = n;
    row["p"] = to_string(pn);
    row["mu"] = b.mu;
    row["lehmer_lower"] = b.lower;
    row["lehmer_upper"] = b.upper;
    const bool sandwich = n < 2 || (exact_less(b.lower, pn) && exact_less(pn, b.upper));
    row["sandwich_holds"] = sandwich;
    row["lehmer_estimate"] = le.value;
    row["lehmer_error_cap"] = le.error_cap;
    row["hardy_ramanujan"] = hardy_ramanujan(n);
    row["main_term"] = eb.main;
    row["env_lower"] = eb.env_lower;
    row["env_upper"] = eb.env_upper;
    Json e = Json::array();
    for (double x : eb.e_tilde) {
        e.push_back(x);
    }
    row["e_tilde"] = std::move(e);
    row["budget_total"] = eb.total;
    row["budget_over_L"] = eb.total / eb.env_lower;
    bool budget_ok = true;
    if (n <= table.n_max()) {
        const BigInt a = a_third_exact(table, n);
        row["a_third"] = to_string(a);
        row["residual"] = std::abs(to_double(a) - eb.main);
        budget_ok = compare_exact(a, eb.main - eb.total) != std::partial_ordering::less &&
                    compare_exact(a, eb.main + eb.total) != std::partial_ordering::greater;
        row["within_budget"] = budget_ok;
    } else {
        row["a_third"] = nullptr;
        row["residual"] = nullptr;
        row["within_budget"] = nullptr;
    }
    if (n >= kAnalyticThreshold) {
        Json f = Json::array();
        for (int i = 1; i <= 6; ++i) {
            f.push_back(ratio_F(i, n));
        }
        row["F"] = std::move(f);
        budget_ok = budget_ok && eb.total <= kBudgetEnvelopeFactor * eb.env_lower;
    } else {
        row["F"] = nullptr;
    }
    violated = violated || !sandwich || (n >= kAnalyticThreshold && !budget_ok);
    return row;
}

} // namespace detail

inline OutputRecord cmd_bounds(const RankTable &table, int from, int to, int step)
{
    if (from < 1 || to < from || step < 1) {
        throw UsageError("bounds needs 1 <= --from <= --to and --step >= 1");
    }
    OutputRecord rec;
    rec.command = "bounds";
    rec.set("from", from);
    rec.set("to", to);
    rec.set("step", step);
    const auto p = partition_numbers(to);
    Json rows = Json::array();
    bool violated = false;
    for (int n = from; n <= to; n += step) {
        rows.push_back(detail::bounds_row(table, p, n, violated));
    }
    rec.results["rows"] = std::move(rows);
    rec.status = violated ? Status::violation_found : Status::ok;
    return rec;
}

/// Optional range flags shared by the verification suites; unset means suite default.
struct VerifyOptions {
    std::optional<int> r;
    std::optional<int> min;
    std::optional<int> max;
    std::optional<int> from;
    std::optional<int> to;
    std::optional<int> step;
    int threads = 1;
};

inline const std::vector<std::string> &verify_suites()
{
    static const std::vector<std::string> names{"tables", "convexity", "theorem2", "bounds", "budget", "conjectures"};
    return names;
}

namespace detail
{

inline std::vector<int> residues_for(const VerifyOptions &o)
{
    if (o.r) {
        if (*o.r < 0 || *o.r > 2) {
            throw UsageError("--r must be 0, 1 or 2");
        }
        return {*o.r};
    }
    return {0, 1, 2};
}

inline OutputRecord verify_tables(const RankTable &table, const VerifyOptions &o)
{
    require_table(table, 32);
    OutputRecord rec;
    rec.command = "verify";
    rec.set("suite", "tables");
    Json checks = Json::array();
    Json bad = Json::array();
    for (int r : residues_for(o)) {
        const SmallTableReport rep = verify_small_tables(table, r);
        checks.push_back(Json{{"r", r}, {"rows_checked", rep.rows_checked}, {"mismatch_count", rep.mismatches.size()}});
        for (const auto &m : rep.mismatches) {
            bad.push_back(Json{{"r", r}, {"n", m.n}, {"what", m.what}});
        }
    }
    rec.results["checks"] = std::move(checks);
    rec.results["mismatches"] = std::move(bad);
    rec.status = rec.results["mismatches"].empty() ? Status::ok : Status::violation_found;
    return rec;
}

inline OutputRecord verify_convexity(const RankTable &table, const VerifyOptions &o)
{
    const int hi = o.max.value_or(500);
    require_table(table, std::max(2 * hi, 22));
    OutputRecord rec;
    rec.command = "verify";
    rec.set("suite", "convexity");
    if (o.min) {
        rec.set("min", *o.min);
    }
    rec.set("max", hi);
    Json scans = Json::array();
    Json all = Json::array();
    Json remark = Json::array();
    bool bad = false;
    for (int r : residues_for(o)) {
        const int lo = o.min.value_or(theorem_threshold(r));
        if (lo < 1 || hi < lo) {
            throw UsageError("verify convexity needs 1 <= --min <= --max");
        }
        const ConvexityReport rep = scan_region(table, r, 3, ScanRange{lo, hi, lo, hi}, o.threads);
        scans.push_back(Json{{"r", r},
                             {"min", lo},
                             {"max", hi},
                             {"pairs_checked", rep.pairs_checked},
                             {"violation_count", rep.violations.size()}});
        for (auto &v : violations_json(rep.violations, r)) {
            all.push_back(std::move(v));
        }
        bad = bad || !rep.violations.empty();
        // the pair just below the threshold must fail
        const int below = theorem_threshold(r) - 1;
        const PairCheck c = check_pair(table, r, 3, below, below);
        remark.push_back(Json{{"r", r},
                              {"a", below},
                              {"b", below},
                              {"lhs", to_string(c.lhs)},
                              {"rhs", to_string(c.rhs)},
                              {"reproduced", !c.holds}});
        bad = bad || c.holds;
    }
    rec.results["scans"] = std::move(scans);
    rec.results["violations"] = std::move(all);
    rec.results["sharpness"] = std::move(remark);
    rec.status = bad ? Status::violation_found : Status::ok;
    return rec;
}

inline OutputRecord verify_theorem2(const RankTable &table, const VerifyOptions &o)
{
    const int hi = o.max.value_or(500);
    require_table(table, std::max(hi, 42));
    OutputRecord rec;
    rec.command = "verify";
    rec.set("suite", "theorem2");
    rec.set("max", hi);
    Json ranges = Json::array();
    Json bad = Json::array();
    Json rules = Json::array();
    Json rule_bad = Json::array();
    for (int r : residues_for(o)) {
        const int lo = closed_form_family(r).threshold;
        const Theorem2Report rep = dyson::verify_theorem2(table, r, lo, hi);
        ranges.push_back(Json{{"r", r}, {"from", lo}, {"to", hi}, {"mismatch_count", rep.mismatches.size()}});
        for (const auto &m : rep.mismatches) {
            bad.push_back(Json{{"r", r},
                               {"n", m.n},
                               {"dp_value", to_string(m.dp_value)},
                               {"closed_value", to_string(m.closed_value)},
                               {"dp_optima", partitions_json(m.dp_optima)},
                               {"expected", m.expected.str()}});
        }
        const ReplacementReport rr = verify_replacement_rules(table, r);
        int failures = 0;
        for (const auto &c : rr.checks) {
            if (!c.holds()) {
                ++failures;
                rule_bad.push_back(Json{{"r", r},
                                        {"source", c.source},
                                        {"before", c.before.str()},
                                        {"after", c.after.str()},
                                        {"before_value", to_string(c.before_value)},
                                        {"after_value", to_string(c.after_value)}});
            }
        }
        rules.push_back(Json{{"r", r}, {"checked", rr.checks.size()}, {"failures", failures}});
    }
    const bool ok = bad.empty() && rule_bad.empty();
    rec.results["closed_form"] = std::move(ranges);
    rec.results["mismatches"] = std::move(bad);
    rec.results["replacement_rules"] = std::move(rules);
    rec.results["rule_failures"] = std::move(rule_bad);
    rec.status = ok ? Status::ok : Status::violation_found;
    return rec;
}

inline OutputRecord verify_bounds(const RankTable &table, const VerifyOptions &o)
{
    const int to = o.to.value_or(1000);
    if (to < 2) {
        throw UsageError("verify bounds needs --to >= 2");
    }
    OutputRecord rec;
    rec.command = "verify";
    rec.set("suite", "bounds");
    rec.set("to", to);
    const auto p = partition_numbers(to);
    bool bad = false;

    Json sandwich_fail = Json::array();
    for (int n = 2; n <= to; ++n) {
        const BoundPair b = lehmer_bounds(n);
        const BigInt &pn = p[static_cast<std::size_t>(n)];
        if (!(exact_less(b.lower, pn) && exact_less(pn, b.upper))) {
            sandwich_fail.push_back(n);
        }
    }
    bad = bad || !sandwich_fail.empty();
    rec.results["lehmer_sandwich"] = Json{{"from", 2}, {"to", to}, {"failures", sandwich_fail}};

    const int est_to = std::min(to, 500);
    Json est_fail = Json::array();
    for (int n = 1; n <= est_to; ++n) {
        const LehmerEstimate le = lehmer_estimate(n);
        if (!(std::abs(to_double(p[static_cast<std::size_t>(n)]) - le.value) < le.error_cap)) {
            est_fail.push_back(n);
        }
    }
    bad = bad || !est_fail.empty();
    rec.results["lehmer_estimate"] = Json{{"from", 1}, {"to", est_to}, {"failures", est_fail}};

    Json caps = Json::array();
    for (int i = 1; i <= 6; ++i) {
        const double f500 = ratio_F(i, kAnalyticThreshold);
        bool monotone = true;
        double prev = f500;
        for (int n = 550; n <= 5000; n += 50) {
            const double f = ratio_F(i, n);
            monotone = monotone && f <= prev;
            prev = f;
        }
        const auto idx = static_cast<std::size_t>(i - 1);
        const bool holds = f500 <= kDerivedRatioCaps[idx];
        bad = bad || !holds || !monotone;
        caps.push_back(Json{{"i", i},
                            {"F_500", f500},
                            {"cap", kDerivedRatioCaps[idx]},
                            {"table_cap", kTableRatioCaps[idx]},
                            {"holds", holds},
                            {"table_cap_holds", f500 <= kTableRatioCaps[idx]},
                            {"nonincreasing_500_5000", monotone}});
    }
    rec.results["ratio_caps"] = std::move(caps);
    Json disc = Json::array();
    for (int i : ratio_cap_discrepancies()) {
        const auto idx = static_cast<std::size_t>(i - 1);
        disc.push_back(Json{{"i", i}, {"table_cap", kTableRatioCaps[idx]}, {"derived_cap", kDerivedRatioCaps[idx]}});
    }
    rec.results["ratio_cap_discrepancies"] = std::move(disc);

    Json thr_fail = Json::array();
    std::vector<int> grid;
    for (int x = 500; x <= 600; ++x) {
        grid.push_back(x);
    }
    grid.insert(grid.end(), {1000, 2000, 5000});
    for (int x : grid) {
        if (!lemma_threshold(x, 3, 0.01)) {
            thr_fail.push_back(x);
        }
    }
    bad = bad || !thr_fail.empty();
    rec.results["threshold"] = Json{{"checked", grid.size()}, {"failures", thr_fail}};

    Json env_fail = Json::array();
    const int env_to = std::min(to, table.n_max());
    for (int n = kAnalyticThreshold; n <= env_to; ++n) {
        if (!residue_envelope_check(table, n)) {
            env_fail.push_back(n);
        }
    }
    bad = bad || !env_fail.empty();
    rec.results["residue_envelope"] = Json{{"from", kAnalyticThreshold}, {"to", env_to}, {"failures", env_fail}};
    rec.status = bad ? Status::violation_found : Status::ok;
    return rec;
}

inline OutputRecord verify_budget(const RankTable &table, const VerifyOptions &o)
{
    const int from = o.from.value_or(500);
    const int to = o.to.value_or(1000);
    const int step = o.step.value_or(50);
    if (from < kAnalyticThreshold || to < from || step < 1) {
        throw UsageError("verify budget needs 500 <= --from <= --to and --step >= 1");
    }
    require_table(table, to);
    OutputRecord rec;
    rec.command = "verify";
    rec.set("suite", "budget");
    rec.set("from", from);
    rec.set("to", to);
    rec.set("step", step);
    Json rows = Json::array();
    bool bad = false;
    for (int n = from; n <= to; n += step) {
        const ErrorBudget eb = error_budget(n);
        const BigInt a = a_third_exact(table, n);
        const bool residual_ok = compare_exact(a, eb.main - eb.total) != std::partial_ordering::less &&
                                 compare_exact(a, eb.main + eb.total) != std::partial_ordering::greater;
        const bool envelope_ok = eb.total <= kBudgetEnvelopeFactor * eb.env_lower;
        bad = bad || !residual_ok || !envelope_ok;
        rows.push_back(Json{{"n", n},
                            {"a_third", to_string(a)},
                            {"main_term", eb.main},
                            {"residual", std::abs(to_double(a) - eb.main)},
                            {"budget_total", eb.total},
                            {"env_lower", eb.env_lower},
                            {"budget_over_L", eb.total / eb.env_lower},
                            {"holds", residual_ok && envelope_ok}});
    }
    rec.results["rows"] = std::move(rows);
    rec.status = bad ? Status::violation_found : Status::ok;
    return rec;
}

inline OutputRecord verify_conjectures(const RankTable &table, const VerifyOptions &o)
{
    const int scan_max = o.max.value_or(300);
    const int t2_to = o.to.value_or(200);
    constexpr int frontier_window = 100;
    constexpr int frontier_t_max = 5;
    require_table(table, std::max({2 * scan_max, t2_to, 2 * frontier_window}));
    OutputRecord rec;
    rec.command = "verify";
    rec.set("suite", "conjectures");
    rec.set("max", scan_max);
    rec.set("to", t2_to);
    bool mismatch = false;

    Json c1 = Json::array();
    for (int r : {0, 1}) {
        const ConvexityReport rep = conjecture1_scan(table, r, scan_max, o.threads);
        c1.push_back(Json{{"r", r},
                          {"min", conjectured_t2_threshold(r)},
                          {"max", scan_max},
                          {"pairs_checked", rep.pairs_checked},
                          {"violation_count", rep.violations.size()}});
        mismatch = mismatch || !rep.violations.empty();
    }
    rec.results["conjecture1"] = std::move(c1);

    Json c2 = Json::array();
    Json c2_bad = Json::array();
    for (int r : {0, 1}) {
        const ConjectureReport rep = conjecture_t2(table, r, r == 0 ? 6 : 8, t2_to);
        c2.push_back(Json{{"r", r},
                          {"from", rep.n_lo},
                          {"to", rep.n_hi},
                          {"agreements", rep.agreements},
                          {"mismatch_count", rep.mismatches.size()}});
        for (const auto &m : rep.mismatches) {
            c2_bad.push_back(Json{{"r", r},
                                  {"n", m.n},
                                  {"expected_value", to_string(m.expected_value)},
                                  {"dp_value", to_string(m.dp_value)},
                                  {"expected_optima", m.expected_optima},
                                  {"dp_optima", m.dp_optima},
                                  {"note", m.note}});
        }
        mismatch = mismatch || !rep.agrees();
    }
    rec.results["conjecture2"] = std::move(c2);
    rec.results["conjecture2_mismatches"] = std::move(c2_bad);

    const MaxProductEntry ex = MaxProductSolver(table, 1, 2, 8).entry(8);
    const std::vector<Partition> listed{{6, 2}, {4, 4}, {4, 2, 2}, {2, 2, 2, 2}};
    const bool reproduced = ex.value == 16 && ex.optima == listed;
    mismatch = mismatch || !reproduced;
    rec.results["example_r1_t2_n8"] =
        Json{{"value", to_string(ex.value)}, {"optima", partitions_json(ex.optima)}, {"reproduced", reproduced}};

    Json c3 = Json::array();
    for (const auto &row : conjecture3_frontiers(table, frontier_t_max, frontier_window, o.threads)) {
        c3.push_back(Json{{"r", row.r}, {"t", row.t}, {"frontier", row.frontier}, {"inconclusive", row.inconclusive}});
        mismatch = mismatch || row.inconclusive;
    }
    rec.results["conjecture3_frontiers"] = std::move(c3);
    rec.status = mismatch ? Status::conjecture_mismatch : Status::ok;
    return rec;
}

} // namespace detail

/// Largest n a verification suite reads from the rank table under the given options.
inline int verify_requirement(const std::string &suite, const VerifyOptions &o, int n_max)
{
    if (suite == "tables") {
        return 32;
    }
    if (suite == "convexity") {
        return std::max(2 * o.max.value_or(500), 22);
    }
    if (suite == "theorem2") {
        return std::max(o.max.value_or(500), 42);
    }
    if (suite == "bounds") {
        return std::max(1, std::min(o.to.value_or(1000), n_max));
    }
    if (suite == "budget") {
        return std::max(o.to.value_or(1000), 1);
    }
    if (suite == "conjectures") {
        return std::max({2 * o.max.value_or(300), o.to.value_or(200), 200});
    }
    throw UsageError("unknown verify suite: " + suite);
}

inline OutputRecord cmd_verify(const RankTable &table, const std::string &suite, const VerifyOptions &o)
{
    if (suite == "tables") {
        return detail::verify_tables(table, o);
    }
    if (suite == "convexity") {
        return detail::verify_convexity(table, o);
    }
    if (suite == "theorem2") {
        return detail::verify_theorem2(table, o);
    }
    if (suite == "bounds") {
        return detail::verify_bounds(table, o);
    }
    if (suite == "budget") {
        return detail::verify_budget(table, o);
    }
    if (suite == "conjectures") {
        return detail::verify_conjectures(table, o);
    }
    throw UsageError("unknown verify suite: " + suite);
}

} // namespace dyson

#endif
