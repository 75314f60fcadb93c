#ifndef DYSON_ANALYTIC_BOUNDS_HPP
#define DYSON_ANALYTIC_BOUNDS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "rank_table.hpp"

namespace dyson
{

namespace detail
{

inline constexpr double pi = std::numbers::pi;

inline void require_positive(int n, const char *who)
{
    if (n < 1) {
        throw std::invalid_argument(std::string(who) + ": n must be >= 1");
    }
}

/// log(sinh(x)) for x > 0 without overflow.
inline double log_sinh(double x)
{
    if (x <= 0.0) {
        throw std::domain_error("log_sinh requires x > 0");
    }
    if (x < 20.0) {
        return std::log(std::sinh(x));
    }
    return x - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * x));
}

/// Largest k with k*k <= n.
inline int isqrt(int n)
{
    int k = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while (k * k > n) {
        --k;
    }
    while ((k + 1) * (k + 1) <= n) {
        ++k;
    }
    return k;
}

/// Largest k with 9*k*k <= n, i.e. floor(sqrt(n)/3).
inline int isqrt_third(int n)
{
    int k = isqrt(n) / 3 + 1;
    while (9 * k * k > n) {
        --k;
    }
    return k;
}

/// sqrt(24n - 1), the recurring radius.
inline double radius(int n)
{
    return std::sqrt(24.0 * n - 1.0);
}

/// (pi/18) sqrt(24n - 1), the sinh argument of the main term.
inline double main_arg(int n)
{
    return pi / 18.0 * radius(n);
}

} // namespace detail

/// mu(n) = (pi/6) sqrt(24n - 1).
inline double mu(int n)
{
    detail::require_positive(n, "mu");
    return detail::pi / 6.0 * detail::radius(n);
}

/// Lehmer-derived envelope p^L(n) < p(n) < p^U(n).
struct BoundPair {
    int n = 0;
    double lower = 0.0;
    double upper = 0.0;
    double mu = 0.0;
    /// log of upper; log of lower is -inf at n = 1.
    double log_lower = 0.0;
    double log_upper = 0.0;
};

inline BoundPair lehmer_bounds(int n)
{
    detail::require_positive(n, "lehmer_bounds");
    BoundPair b;
    b.n = n;
    b.mu = mu(n);
    const double rn = std::sqrt(static_cast<double>(n));
    const double log_prefactor = std::log(std::sqrt(3.0) / (12.0 * n)) + b.mu;
    b.log_upper = log_prefactor + std::log1p(1.0 / rn);
    b.log_lower = n == 1 ? -std::numeric_limits<double>::infinity() : log_prefactor + std::log1p(-1.0 / rn);
    b.upper = std::exp(b.log_upper);
    b.lower = n == 1 ? 0.0 : std::exp(b.log_lower);
    return b;
}

/// Lehmer's main expression for p(n) and the cap on |E(n)|.
struct LehmerEstimate {
    double value = 0.0;
    double error_cap = 0.0;
};

inline LehmerEstimate lehmer_estimate(int n)
{
    detail::require_positive(n, "lehmer_estimate");
    const double m = mu(n);
    LehmerEstimate e;
    e.value = std::sqrt(12.0) / (24.0 * n - 1.0) *
              ((1.0 - 1.0 / m) * std::exp(m) + (1.0 + 1.0 / m) * std::exp(-m));
    e.error_cap = detail::pi * detail::pi / std::sqrt(3.0) *
                  (std::sinh(m) / (m * m * m) + 1.0 / 6.0 - 1.0 / (m * m));
    return e;
}

/// M(n) = -8 sin(pi/18 - 2n pi/3) sinh((pi/18) sqrt(24n-1)) / sqrt(24n-1).
inline double main_term(int n)
{
    detail::require_positive(n, "main_term");
    // reduce 2n pi/3 modulo 2 pi before evaluating the sine
    const double phase = detail::pi / 18.0 - 2.0 * detail::pi * mod_floor(n, 3) / 3.0;
    return -8.0 * std::sin(phase) * std::sinh(detail::main_arg(n)) / detail::radius(n);
}

/// L(n) and U(n), the envelope on |M(n)| from sin(pi/18) <= |sin(.)| <= 1.
struct Envelope {
    double lower = 0.0;
    double upper = 0.0;
    double log_lower = 0.0;
    double log_upper = 0.0;
};

inline Envelope envelope(int n)
{
    detail::require_positive(n, "envelope");
    Envelope e;
    e.log_upper = std::log(8.0) + detail::log_sinh(detail::main_arg(n)) - std::log(detail::radius(n));
    e.log_lower = e.log_upper + std::log(std::sin(detail::pi / 18.0));
    e.upper = std::exp(e.log_upper);
    e.lower = std::exp(e.log_lower);
    return e;
}

/// Bounds on the six error terms E_i(n), i = 1..6, evaluated literally.
///
/// Sum limits sqrt(n)/3 and sqrt(n) are floored; the third sum skips multiples of 3.
/// The sixth uses exact fractional parts of (6v - 1 +- 2k)/(6k).
inline double error_term_bound(int i, int n)
{
    using detail::pi;
    detail::require_positive(n, "error_term_bound");
    const int r = detail::isqrt(n);
    const int r3 = detail::isqrt_third(n);
    const double dn = n;
    switch (i) {
    case 1: {
        const double s = detail::radius(n);
        double sum = 0.0;
        for (int k = 2; k <= r3; ++k) {
            sum += std::sqrt(static_cast<double>(k)) * std::sinh(pi / (18.0 * k) * s);
        }
        return 12.0 / s * sum;
    }
    case 2: {
        double sum = 0.0;
        for (int k = 1; k <= r3; ++k) {
            sum += 1.0 / std::sqrt(static_cast<double>(k));
        }
        return 0.12 * std::exp(2.0 * pi + pi / 24.0) / std::sqrt(3.0) * sum;
    }
    case 3: {
        double sum = 0.0;
        for (int k = 1; k <= r; ++k) {
            if (k % 3 != 0) {
                sum += 1.0 / std::sqrt(static_cast<double>(k));
            }
        }
        return 1.412 * std::sqrt(3.0) * std::exp(2.0 * pi) * sum;
    }
    case 4: {
        double sum = 0.0;
        for (int k = 1; k <= r3; ++k) {
            sum += std::sqrt(static_cast<double>(k));
        }
        return 2.0 * std::sqrt(3.0) * std::exp(2.0 * pi + pi / 12.0) / std::sqrt(dn) * sum;
    }
    case 5: {
        const double sum = 0.5 * r3 * (r3 + 1.0);
        return 8.0 * pi * std::exp(2.0 * pi + pi / 24.0) * std::pow(dn, -0.75) * sum;
    }
    case 6: {
        double outer = 0.0;
        for (int k = 1; k <= r; ++k) {
            const long long den = 6LL * k;
            double inner = 0.0;
            for (int v = 1; v <= k; ++v) {
                // {v/k - 1/(6k) +- 1/3} = ((6v - 1 +- 2k) mod 6k) / 6k
                const long long plus = ((6LL * v - 1 + 2LL * k) % den + den) % den;
                const long long minus = ((6LL * v - 1 - 2LL * k) % den + den) % den;
                const long long num = std::min(plus, minus);
                if (num == 0) {
                    throw std::domain_error("error_term_bound: vanishing fractional part at k = " +
                                            std::to_string(k));
                }
                inner += static_cast<double>(den) / static_cast<double>(num);
            }
            outer += inner / k;
        }
        return std::pow(2.0, 0.25) * (std::numbers::e + 1.0 / std::numbers::e) * std::exp(2.0 * pi) *
               std::pow(dn, -0.25) * outer;
    }
    default:
        throw std::invalid_argument("error_term_bound: index must be in 1..6, got " + std::to_string(i));
    }
}

struct ErrorBudget {
    int n = 0;
    std::array<double, 6> e_tilde{};
    double total = 0.0;
    double main = 0.0;
    double env_lower = 0.0;
    double env_upper = 0.0;
};

inline ErrorBudget error_budget(int n)
{
    ErrorBudget b;
    b.n = n;
    for (int i = 1; i <= 6; ++i) {
        b.e_tilde[static_cast<std::size_t>(i - 1)] = error_term_bound(i, n);
        b.total += b.e_tilde[static_cast<std::size_t>(i - 1)];
    }
    b.main = main_term(n);
    const Envelope env = envelope(n);
    b.env_lower = env.lower;
    b.env_upper = env.upper;
    return b;
}

/// Caps c_i on E_i(n)/L(n) for n >= 500 as listed in the constants table.
inline constexpr std::array<double, 6> kTableRatioCaps{0.0065, 0.00019, 0.0098, 0.0071, 0.0072, 0.54};

/// Caps that the per-term derivations conclude with. They differ from the
/// table only for i = 2 (0.0019 vs 0.00019).
inline constexpr std::array<double, 6> kDerivedRatioCaps{0.0065, 0.0019, 0.0098, 0.0071, 0.0072, 0.54};

/// Combined coefficient: |E_R(n)| <= 0.58 L(n) for n >= 500.
inline constexpr double kBudgetEnvelopeFactor = 0.58;

inline constexpr int kAnalyticThreshold = 500;

/// Indices in 1..6 whose table and derived caps disagree.
inline std::vector<int> ratio_cap_discrepancies()
{
    std::vector<int> out;
    for (std::size_t i = 0; i < 6; ++i) {
        if (kTableRatioCaps[i] != kDerivedRatioCaps[i]) {
            out.push_back(static_cast<int>(i) + 1);
        }
    }
    return out;
}

/// Closed-form upper bound of E_i(n) divided by L(n), F_i(n), for n >= 500.
inline double ratio_F(int i, int n)
{
    using detail::pi;
    if (n < kAnalyticThreshold) {
        throw std::invalid_argument("ratio_F: defined for n >= 500, got " + std::to_string(n));
    }
    const double dn = n;
    const double s = detail::radius(n);
    const double a = detail::main_arg(n);
    const double log_den = std::log(std::sin(pi / 18.0)) + detail::log_sinh(a);
    const double q = std::pow(dn, 0.25);
    switch (i) {
    case 1:
        return std::exp(0.5 * std::log(dn) + detail::log_sinh(a / 2.0) - std::log(std::sqrt(2.0)) - log_den);
    case 2:
        return 0.01 * std::exp(2.0 * pi + pi / 24.0) * q * s * std::exp(-log_den);
    case 3:
        return 2.824 * std::sqrt(3.0) * std::exp(2.0 * pi) * q * s / 8.0 * std::exp(-log_den);
    case 4:
        return std::sqrt(6.0) * std::exp(2.0 * pi + pi / 12.0) * q * s / 24.0 * std::exp(-log_den);
    case 5:
        return pi * std::exp(2.0 * pi + pi / 24.0) * q * s / 8.0 * std::exp(-log_den);
    case 6:
        return std::pow(2.0, 0.25) * (std::numbers::e + 1.0 / std::numbers::e) * std::exp(2.0 * pi) * 3.0 *
               (std::pow(dn, 0.75) + 2.0 * q) * s / 8.0 * std::exp(-log_den);
    default:
        throw std::invalid_argument("ratio_F: index must be in 1..6, got " + std::to_string(i));
    }
}

/// (1/t)(1-c) p^L(n) < N(r,t;n) < (1/t)(1+c) p^U(n) for every residue r.
inline bool residue_envelope_check(const RankTable &table, int n, int t = 3, double c = 0.01)
{
    if (n < kAnalyticThreshold) {
        throw std::invalid_argument("residue_envelope_check: requires n >= 500");
    }
    const BoundPair b = lehmer_bounds(n);
    const double lo = (1.0 - c) * b.lower / t;
    const double hi = (1.0 + c) * b.upper / t;
    for (int r = 0; r < t; ++r) {
        const BigInt v = residue_count(table, r, t, n);
        if (!(exact_less(lo, v) && exact_less(v, hi))) {
            return false;
        }
    }
    return true;
}

/// S_x(lambda) = (1 + 1/sqrt(x + lambda x)) / ((1 - 1/sqrt x)(1 - 1/sqrt(lambda x))).
inline double s_ratio(double x, double lambda)
{
    return (1.0 + 1.0 / std::sqrt(x + lambda * x)) /
           ((1.0 - 1.0 / std::sqrt(x)) * (1.0 - 1.0 / std::sqrt(lambda * x)));
}

/// T_x(lambda) = (pi/6)(sqrt(24x-1) + sqrt(24 lambda x - 1) - sqrt(24(x + lambda x) - 1)).
inline double t_gap(double x, double lambda)
{
    return detail::pi / 6.0 *
           (std::sqrt(24.0 * x - 1.0) + std::sqrt(24.0 * lambda * x - 1.0) -
            std::sqrt(24.0 * (x + lambda * x) - 1.0));
}

/// Both sides of T_x(1) > log(4 x sqrt(3) t (1+c)/(1-c)^2) + log(S_x(1)).
struct ThresholdSides {
    double lhs = 0.0;
    double rhs = 0.0;
    [[nodiscard]] bool holds() const noexcept
    {
        return lhs > rhs;
    }
};

inline ThresholdSides threshold_sides(double x, int t, double c)
{
    if (!(x > 1.0) || t < 2 || !(c > 0.0 && c < 1.0)) {
        throw std::invalid_argument("lemma_threshold: requires x > 1, t >= 2, 0 < c < 1");
    }
    ThresholdSides s;
    s.lhs = t_gap(x, 1.0);
    s.rhs = std::log(4.0 * x * std::sqrt(3.0) * t * (1.0 + c) / ((1.0 - c) * (1.0 - c))) + std::log(s_ratio(x, 1.0));
    return s;
}

inline bool lemma_threshold(double x, int t, double c)
{
    return threshold_sides(x, t, c).holds();
}

/// p(n) ~ e^{pi sqrt(2n/3)} / (4 n sqrt 3).
inline double hardy_ramanujan(int n)
{
    detail::require_positive(n, "hardy_ramanujan");
    return std::exp(detail::pi * std::sqrt(2.0 * n / 3.0)) / (4.0 * n * std::sqrt(3.0));
}

} // namespace dyson

#endif
