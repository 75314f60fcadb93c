#ifndef DYSON_TEST_SUPPORT_HPP
#define DYSON_TEST_SUPPORT_HPP

#include "dyson/rank_table.hpp"

namespace test_support
{

// One table per test binary, built on first use.
inline const dyson::RankTable &table(int n_max)
{
    static const dyson::RankTable small = dyson::build_rank_table(240);
    if (n_max <= small.n_max()) {
        return small;
    }
    static const dyson::RankTable big = dyson::build_rank_table(1000);
    return big;
}

} // namespace test_support

#endif
