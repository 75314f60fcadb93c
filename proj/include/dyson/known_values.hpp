#ifndef DYSON_KNOWN_VALUES_HPP
#define DYSON_KNOWN_VALUES_HPP

#include <cstdint>
#include <vector>

#include "partition.hpp"

namespace dyson
{

/// Published small-n reference row: N(r,3;n), maxN(r,3;n) and every optimal partition.
struct ReferenceRow {
    int n;
    std::int64_t count;
    std::int64_t max_value;
    std::vector<Partition> optima;
};

/// Rows 1..32 for residue 0 mod 3.
inline const std::vector<ReferenceRow> &reference_rows_r0()
{
    static const std::vector<ReferenceRow> rows{
        {1, 1, 1, {{1}}},
        {2, 0, 1, {{1, 1}}},
        {3, 1, 1, {{3}, {1, 1, 1}}},
        {4, 3, 3, {{4}}},
        {5, 1, 3, {{4, 1}}},
        {6, 3, 3, {{6}, {4, 1, 1}}},
        {7, 7, 7, {{7}}},
        {8, 6, 9, {{4, 4}}},
        {9, 10, 10, {{9}}},
        {10, 16, 16, {{10}}},
        {11, 16, 21, {{7, 4}}},
        {12, 25, 27, {{4, 4, 4}}},
        {13, 37, 37, {{13}}},
        {14, 45, 49, {{7, 7}}},
        {15, 58, 63, {{7, 4, 4}}},
        {16, 81, 81, {{16}, {4, 4, 4, 4}}},
        {17, 95, 112, {{10, 7}}},
        {18, 127, 147, {{7, 7, 4}}},
        {19, 168, 189, {{7, 4, 4, 4}}},
        {20, 205, 259, {{13, 7}}},
        {21, 264, 343, {{7, 7, 7}}},
        {22, 340, 441, {{7, 7, 4, 4}}},
        {23, 413, 592, {{13, 10}}},
        {24, 523, 784, {{10, 7, 7}}},
        {25, 660, 1029, {{7, 7, 7, 4}}},
        {26, 806, 1369, {{13, 13}}},
        {27, 1002, 1813, {{13, 7, 7}}},
        {28, 1248, 2401, {{7, 7, 7, 7}}},
        {29, 1513, 3087, {{7, 7, 7, 4, 4}}},
        {30, 1866, 4144, {{13, 10, 7}}},
        {31, 2292, 5488, {{10, 7, 7, 7}}},
        {32, 2775, 7203, {{7, 7, 7, 7, 4}}},
    };
    return rows;
}

/// Rows 1..21 for residue 1 mod 3 (identical for residue 2).
inline const std::vector<ReferenceRow> &reference_rows_r1()
{
    static const std::vector<ReferenceRow> rows{
        {1, 0, 0, {{1}}},
        {2, 1, 1, {{2}}},
        {3, 1, 1, {{3}}},
        {4, 1, 1, {{4}, {2, 2}}},
        {5, 3, 3, {{5}}},
        {6, 4, 4, {{6}}},
        {7, 4, 4, {{7}}},
        {8, 8, 8, {{8}}},
        {9, 10, 10, {{9}}},
        {10, 13, 13, {{10}}},
        {11, 20, 20, {{11}}},
        {12, 26, 26, {{12}}},
        {13, 32, 32, {{13}}},
        {14, 46, 46, {{14}}},
        {15, 59, 59, {{15}}},
        {16, 75, 75, {{16}}},
        {17, 101, 101, {{17}}},
        {18, 129, 129, {{18}}},
        {19, 161, 161, {{19}}},
        {20, 211, 211, {{20}}},
        {21, 264, 264, {{21}}},
    };
    return rows;
}

inline const std::vector<ReferenceRow> &reference_rows(int r)
{
    return r == 0 ? reference_rows_r0() : reference_rows_r1();
}

} // namespace dyson

#endif
