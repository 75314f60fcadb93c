#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "dyson/rank_table.hpp"
#include "dyson/table_cache.hpp"

namespace
{

std::string serialized(const dyson::RankTable &t)
{
    std::ostringstream os(std::ios::binary);
    dyson::write_table_cache(os, t);
    return os.str();
}

dyson::RankTable parse(const std::string &bytes)
{
    std::istringstream is(bytes, std::ios::binary);
    return dyson::read_table_cache(is);
}

} // namespace

TEST(TableCache, RoundTrip)
{
    const auto t = dyson::build_rank_table(150);
    const auto u = parse(serialized(t));
    ASSERT_EQ(u.n_max(), 150);
    for (int n = 0; n <= 150; ++n) {
        for (int m = -n; m <= n; ++m) {
            ASSERT_EQ(t.count(m, n), u.count(m, n));
        }
    }
}

TEST(TableCache, Header)
{
    const std::string b = serialized(dyson::build_rank_table(5));
    ASSERT_GE(b.size(), 12u);
    EXPECT_EQ(b.substr(0, 4), "RNKT");
    EXPECT_EQ(b[4], 1);
    EXPECT_EQ(b[8], 5);
}

TEST(TableCache, RejectsCorruption)
{
    const std::string good = serialized(dyson::build_rank_table(20));
    std::string bad_magic = good;
    bad_magic[0] = 'X';
    EXPECT_THROW(parse(bad_magic), dyson::CacheFormatError);
    std::string bad_version = good;
    bad_version[4] = 9;
    EXPECT_THROW(parse(bad_version), dyson::CacheFormatError);
    EXPECT_THROW(parse(good.substr(0, good.size() - 3)), dyson::CacheFormatError);
    EXPECT_THROW(parse(good + "x"), dyson::CacheFormatError);
    EXPECT_THROW(parse(""), dyson::CacheFormatError);
    // flip a low bit in the last entry so the row no longer sums to p(n)
    std::string bad_value = good;
    bad_value[bad_value.size() - 1] ^= 0x02;
    EXPECT_THROW(parse(bad_value), dyson::CacheFormatError);
}

TEST(TableCache, FileRoundTrip)
{
    const auto path = std::filesystem::temp_directory_path() / "dyson_cache_test.rnkt";
    const auto t = dyson::build_rank_table(60);
    dyson::save_table_cache(path, t);
    const auto u = dyson::load_table_cache(path);
    EXPECT_EQ(u.row_sum(60), t.row_sum(60));
    std::filesystem::remove(path);
    EXPECT_THROW(dyson::load_table_cache(path), std::runtime_error);
}
