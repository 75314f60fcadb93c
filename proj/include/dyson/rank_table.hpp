#ifndef DYSON_RANK_TABLE_HPP
#define DYSON_RANK_TABLE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "partition.hpp"

namespace dyson
{

/// p(0), ..., p(n_max) by Euler's pentagonal recurrence.
inline std::vector<BigInt> partition_numbers(int n_max)
{
    if (n_max < 0) {
        throw std::invalid_argument("partition_numbers: n_max must be nonnegative");
    }
    std::vector<BigInt> p(static_cast<std::size_t>(n_max) + 1);
    p[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        BigInt acc = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            if (g1 > n) {
                break;
            }
            const int g2 = k * (3 * k + 1) / 2;
            const bool plus = (k % 2) == 1;
            const BigInt &a = p[static_cast<std::size_t>(n - g1)];
            plus ? acc += a : acc -= a;
            if (g2 <= n) {
                const BigInt &b = p[static_cast<std::size_t>(n - g2)];
                plus ? acc += b : acc -= b;
            }
        }
        p[static_cast<std::size_t>(n)] = std::move(acc);
    }
    return p;
}

inline BigInt partition_number(int n)
{
    if (n < 0) {
        throw std::invalid_argument("partition_number: n must be nonnegative");
    }
    return partition_numbers(n).back();
}

/// Residue of m modulo t in [0, t).
constexpr int mod_floor(int m, int t) noexcept
{
    const int r = m % t;
    return r < 0 ? r + t : r;
}

/// Exact rank counts N(m, n) for 0 <= n <= n_max.
///
/// Row n is stored densely for -n <= m <= n. Entries with |m| >= n >= 1 are zero,
/// N(0, 0) = 1 (the constant term of the generating function). Immutable once built.
class RankTable
{
public:
    RankTable() = default;

    /// Takes ownership of rows already laid out as described above.
    RankTable(int n_max, std::vector<std::vector<BigInt>> rows) : n_max_(n_max), rows_(std::move(rows))
    {
        if (n_max_ < 0 || rows_.size() != static_cast<std::size_t>(n_max_) + 1) {
            throw std::invalid_argument("RankTable: row count does not match n_max");
        }
        for (int n = 0; n <= n_max_; ++n) {
            if (rows_[static_cast<std::size_t>(n)].size() != static_cast<std::size_t>(2 * n + 1)) {
                throw std::invalid_argument("RankTable: row " + std::to_string(n) + " has wrong width");
            }
        }
    }

    [[nodiscard]] int n_max() const noexcept
    {
        return n_max_;
    }

    /// N(m, n); zero outside the stored band.
    [[nodiscard]] const BigInt &count(int m, int n) const
    {
        check_n(n);
        static const BigInt zero = 0;
        if (m < -n || m > n) {
            return zero;
        }
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m + n)];
    }

    /// Row n as a span indexed by m + n.
    [[nodiscard]] std::span<const BigInt> row(int n) const
    {
        check_n(n);
        return rows_[static_cast<std::size_t>(n)];
    }

    /// Sum over all m of N(m, n).
    [[nodiscard]] BigInt row_sum(int n) const
    {
        BigInt s = 0;
        for (const auto &c : row(n)) {
            s += c;
        }
        return s;
    }

private:
    void check_n(int n) const
    {
        if (n < 0 || n > n_max_) {
            throw std::out_of_range("rank table covers 0 <= n <= " + std::to_string(n_max_) + ", got n = " +
                                    std::to_string(n));
        }
    }

    int n_max_ = -1;
    std::vector<std::vector<BigInt>> rows_;
};

/// Expands R(w;q) = 1 + sum_{k>=1} q^{k^2} / ((wq;q)_k (w^{-1}q;q)_k) to degree n_max.
///
/// The sum is evaluated Horner-style from the innermost term outward:
///   (1/d_1)(q + (1/d_2)(q^4 + ... (1/d_K) q^{K^2}))
/// with d_j = (1 - w q^j)(1 - w^{-1} q^j) and K = floor(sqrt(n_max)). Each division
/// by (1 - w^{+-1} q^j) is an in-place geometric-series pass over ascending degree.
inline RankTable build_rank_table(int n_max)
{
    if (n_max < 1) {
        throw std::invalid_argument("build_rank_table: n_max must be >= 1");
    }
    std::vector<std::vector<BigInt>> c(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        c[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(2 * n + 1), BigInt(0));
    }
    auto at = [&c](int m, int n) -> BigInt & {
        return c[static_cast<std::size_t>(n)][static_cast<std::size_t>(m + n)];
    };

    int top = 0;
    while ((top + 1) * (top + 1) <= n_max) {
        ++top;
    }
    at(0, top * top) = 1;
    // lowest q-degree currently present in the partial sum
    int low = top * top;
    for (int j = top; j >= 1; --j) {
        for (int shift : {+1, -1}) {
            for (int n = low + j; n <= n_max; ++n) {
                const int src = n - j;
                for (int m = -src + shift; m <= src + shift; ++m) {
                    if (m < -n || m > n) {
                        continue;
                    }
                    const BigInt &v = c[static_cast<std::size_t>(src)][static_cast<std::size_t>(m - shift + src)];
                    if (!v.is_zero()) {
                        at(m, n) += v;
                    }
                }
            }
        }
        if (j > 1) {
            at(0, (j - 1) * (j - 1)) += 1;
            low = (j - 1) * (j - 1);
        }
    }
    at(0, 0) += 1;
    return RankTable(n_max, std::move(c));
}

/// N(m, n).
inline const BigInt &rank_count(const RankTable &table, int m, int n)
{
    return table.count(m, n);
}

/// N(r, t; n): partitions of n with rank congruent to r mod t.
inline BigInt residue_count(const RankTable &table, int r, int t, int n)
{
    if (t < 1) {
        throw std::invalid_argument("residue_count: modulus t must be >= 1");
    }
    if (r < 0 || r >= t) {
        throw std::invalid_argument("residue_count: residue must satisfy 0 <= r < t");
    }
    const auto row = table.row(n);
    BigInt s = 0;
    // first m in [-n, n] with m = r (mod t)
    const int first = -n + mod_floor(r + n, t);
    for (int m = first; m <= n; m += t) {
        s += row[static_cast<std::size_t>(m + n)];
    }
    return s;
}

/// N(r, t; k) for k = 0..table.n_max().
inline std::vector<BigInt> residue_counts(const RankTable &table, int r, int t)
{
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(table.n_max()) + 1);
    for (int n = 0; n <= table.n_max(); ++n) {
        out.push_back(residue_count(table, r, t, n));
    }
    return out;
}

/// Ranks of every enumerated partition of n, tallied. Independent of the q-series path.
inline std::map<int, BigInt> brute_rank_counts(int n)
{
    std::map<int, BigInt> tally;
    for_each_partition(n, [&](const Partition &p) {
        tally[p.rank()] += 1;
        return true;
    });
    return tally;
}

/// A(1/3; n) = N(0,3;n) - N(1,3;n), the coefficient of R(e^{2 pi i/3}; q).
inline BigInt a_third_exact(const RankTable &table, int n)
{
    return residue_count(table, 0, 3, n) - residue_count(table, 1, 3, n);
}

/// (1/t)[p(n) + sum_{j=1}^{t-1} zeta^{-rj} sum_m N(m,n) zeta^{jm}] in complex doubles.
inline std::complex<double> decomposition_value(const RankTable &table, int r, int t, int n)
{
    if (t < 2) {
        throw std::invalid_argument("decomposition_value: t must be >= 2");
    }
    if (r < 0 || r >= t) {
        throw std::invalid_argument("decomposition_value: residue must satisfy 0 <= r < t");
    }
    const auto row = table.row(n);
    std::complex<double> total = to_double(table.row_sum(n));
    for (int j = 1; j < t; ++j) {
        std::complex<double> coeff = 0.0;
        for (int m = -n; m <= n; ++m) {
            const auto &c = row[static_cast<std::size_t>(m + n)];
            if (c.is_zero()) {
                continue;
            }
            // reduce the exponent before scaling so the angle stays small
            const double angle = 2.0 * std::numbers::pi * mod_floor(j * m, t) / t;
            coeff += to_double(c) * std::polar(1.0, angle);
        }
        const double back = -2.0 * std::numbers::pi * mod_floor(r * j, t) / t;
        total += std::polar(1.0, back) * coeff;
    }
    return total / static_cast<double>(t);
}

inline constexpr double kDecompositionTolerance = 1e-6;

/// True when the roots-of-unity filter reproduces N(r, t; n) to relative tolerance.
inline bool decomposition_check(const RankTable &table, int r, int t, int n,
                                double tolerance = kDecompositionTolerance)
{
    const std::complex<double> v = decomposition_value(table, r, t, n);
    const double exact = to_double(residue_count(table, r, t, n));
    const double scale = std::max(1.0, std::abs(exact));
    return std::abs(v.real() - exact) <= tolerance * scale && std::abs(v.imag()) <= tolerance * scale;
}

} // namespace dyson

#endif
