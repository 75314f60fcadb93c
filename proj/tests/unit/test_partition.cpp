#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "dyson/partition.hpp"
#include "dyson/rank_table.hpp"

using dyson::Partition;

TEST(Partition, RankAndShape)
{
    const Partition p{4, 2, 2};
    EXPECT_EQ(p.n(), 8);
    EXPECT_EQ(p.length(), 3u);
    EXPECT_EQ(p.largest(), 4);
    EXPECT_EQ(p.rank(), 1);
    EXPECT_EQ(p.multiplicity(2), 2);
    EXPECT_EQ(p.str(), "(4,2,2)");
    EXPECT_EQ(Partition{}.str(), "()");
    EXPECT_EQ(Partition{}.rank(), 0);
}

TEST(Partition, RejectsBadParts)
{
    EXPECT_THROW(Partition({2, 3}), std::invalid_argument);
    EXPECT_THROW(Partition({3, 0}), std::invalid_argument);
    EXPECT_THROW(Partition({-1}), std::invalid_argument);
    EXPECT_THROW(dyson::parse_partition("(4,x)"), std::invalid_argument);
}

TEST(Partition, ParseRoundTrip)
{
    EXPECT_EQ(dyson::parse_partition("(7,4,4)"), Partition({7, 4, 4}));
    EXPECT_EQ(dyson::parse_partition("4 7 4"), Partition({7, 4, 4}));
    EXPECT_EQ(dyson::parse_partition("()"), Partition{});
    const Partition p{13, 13, 10, 7, 7};
    EXPECT_EQ(dyson::parse_partition(p.str()), p);
}

TEST(Partition, ConjugateNegatesRank)
{
    for (int n = 0; n <= 18; ++n) {
        for (const auto &p : dyson::enumerate_partitions(n)) {
            const Partition c = p.conjugate();
            EXPECT_EQ(c.n(), n);
            EXPECT_EQ(c.rank(), -p.rank());
            EXPECT_EQ(c.conjugate(), p);
        }
    }
}

TEST(Partition, EnumerationCountsAndOrder)
{
    const auto p = dyson::partition_numbers(30);
    for (int n = 0; n <= 30; ++n) {
        const auto all = dyson::enumerate_partitions(n);
        ASSERT_EQ(dyson::BigInt(all.size()), p[static_cast<std::size_t>(n)]) << n;
        EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
        EXPECT_EQ(std::set<Partition>(all.begin(), all.end()).size(), all.size());
    }
    const auto five = dyson::enumerate_partitions(5);
    ASSERT_EQ(five.size(), 7u);
    EXPECT_EQ(five.front(), Partition({5}));
    EXPECT_EQ(five[1], Partition({4, 1}));
    EXPECT_EQ(five.back(), Partition({1, 1, 1, 1, 1}));
}

TEST(Partition, EarlyStop)
{
    int seen = 0;
    dyson::for_each_partition(20, [&](const Partition &) { return ++seen < 5; });
    EXPECT_EQ(seen, 5);
    EXPECT_THROW(dyson::enumerate_partitions(-1), std::invalid_argument);
}
