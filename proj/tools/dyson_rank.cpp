// dyson-rank: rank-count tables, max-product optima and the associated checks.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dyson/commands.hpp"
#include "dyson/rank_table.hpp"
#include "dyson/table_cache.hpp"

namespace
{

constexpr int kUsage = 2;

struct Globals {
    std::string format = "text";
    int n_max = 1024;
    std::string cache;
    int threads = 1;
};

// Loads the cache when it is usable, builds otherwise and refreshes the cache file.
dyson::RankTable acquire_table(const Globals &g, int needed)
{
    needed = std::max(needed, 1);
    if (needed > g.n_max) {
        throw dyson::TableTooSmall(needed, g.n_max);
    }
    if (!g.cache.empty() && std::filesystem::exists(g.cache)) {
        dyson::RankTable t = dyson::load_table_cache(g.cache);
        if (t.n_max() >= needed) {
            return t;
        }
    }
    dyson::RankTable t = dyson::build_rank_table(needed);
    if (!g.cache.empty()) {
        dyson::save_table_cache(g.cache, t);
    }
    return t;
}

void emit(const Globals &g, const dyson::OutputRecord &rec)
{
    if (g.format == "json") {
        std::cout << dyson::format_json(rec);
    } else if (g.format == "csv") {
        std::cout << dyson::format_csv(rec);
    } else {
        std::cout << dyson::format_text(rec);
    }
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Rank-count tables, max-product optima and convexity checks"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--n-max", g.n_max, "Largest n of the rank table")->check(CLI::Range(1, 100000))->capture_default_str();
    app.add_option("--table-cache", g.cache, "Binary rank table cache file");
    app.add_option("--threads", g.threads, "Worker threads for scans")->check(CLI::Range(1, 256))->capture_default_str();

    int r = 0;
    int t = 3;
    int n = 0;
    bool row = false;
    auto *count = app.add_subcommand("count", "N(r,t;n)");
    count->add_option("--r", r)->required();
    count->add_option("--t", t)->capture_default_str();
    count->add_option("--n", n)->required();
    count->add_flag("--row", row, "Also print N(m,n) for every rank m");

    int from = 0;
    int to = 0;
    auto *table_cmd = app.add_subcommand("rank-table", "N(m,n) rows");
    table_cmd->add_option("--from", from)->capture_default_str();
    table_cmd->add_option("--to", to)->required();

    int mx_from = 1;
    bool show = false;
    auto *maxn = app.add_subcommand("maxn", "maxN(r,t;n) by dynamic programming");
    maxn->add_option("--r", r)->required();
    maxn->add_option("--t", t)->capture_default_str();
    maxn->add_option("--from", mx_from)->capture_default_str();
    maxn->add_option("--to", to)->required();
    maxn->add_flag("--partitions", show, "List optimal partitions");

    int lo = 1;
    int hi = 0;
    auto *conv = app.add_subcommand("convexity", "Scan N(r,t;a)N(r,t;b) > N(r,t;a+b)");
    conv->add_option("--r", r)->required();
    conv->add_option("--t", t)->capture_default_str();
    conv->add_option("--min", lo)->capture_default_str();
    conv->add_option("--max", hi)->required();

    int b_from = 1;
    int b_to = 0;
    int step = 1;
    auto *bounds = app.add_subcommand("bounds", "Partition-number bounds and the error budget");
    bounds->add_option("--from", b_from)->capture_default_str();
    bounds->add_option("--to", b_to)->required();
    bounds->add_option("--step", step)->capture_default_str();

    std::string suite;
    dyson::VerifyOptions vo;
    auto *verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(dyson::verify_suites()));
    verify->add_option("--r", vo.r);
    verify->add_option("--min", vo.min);
    verify->add_option("--max", vo.max);
    verify->add_option("--from", vo.from);
    verify->add_option("--to", vo.to);
    verify->add_option("--step", vo.step);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }
    vo.threads = g.threads;

    try {
        dyson::OutputRecord rec;
        if (*count) {
            rec = dyson::cmd_count(acquire_table(g, n), r, t, n, row);
        } else if (*table_cmd) {
            rec = dyson::cmd_rank_table(acquire_table(g, to), from, to);
        } else if (*maxn) {
            rec = dyson::cmd_maxn(acquire_table(g, to), r, t, mx_from, to, show);
        } else if (*conv) {
            rec = dyson::cmd_convexity(acquire_table(g, 2 * hi), r, t, lo, hi, g.threads);
        } else if (*bounds) {
            rec = dyson::cmd_bounds(acquire_table(g, std::min(b_to, g.n_max)), b_from, b_to, step);
        } else {
            rec = dyson::cmd_verify(acquire_table(g, dyson::verify_requirement(suite, vo, g.n_max)), suite, vo);
        }
        emit(g, rec);
        return dyson::exit_code(rec.status);
    } catch (const dyson::UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const dyson::TableTooSmall &e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const dyson::CacheFormatError &e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return kUsage;
}
