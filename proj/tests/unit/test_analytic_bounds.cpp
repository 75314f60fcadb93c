#include <cmath>

#include <gtest/gtest.h>

#include "../support.hpp"
#include "dyson/analytic_bounds.hpp"

namespace
{

void expect_rel(double got, double want, double rel)
{
    EXPECT_NEAR(got, want, std::abs(want) * rel) << "want " << want;
}

} // namespace

// Reference values were computed with 30-digit mpmath.
TEST(AnalyticBounds, Mu)
{
    expect_rel(dyson::mu(1), 2.511091513582, 1e-11);
    expect_rel(dyson::mu(500), 57.354982155159, 1e-12);
    EXPECT_THROW(dyson::mu(0), std::invalid_argument);
}

TEST(AnalyticBounds, LehmerBounds)
{
    const auto b = dyson::lehmer_bounds(100);
    expect_rel(b.lower, 178396807.314966809877, 1e-12);
    expect_rel(b.upper, 218040542.273848323183, 1e-12);
    const auto big = dyson::lehmer_bounds(1000);
    expect_rel(big.lower, 2.35904376548664214642e31, 1e-12);
    expect_rel(big.upper, 2.51311495218347029289e31, 1e-12);
    EXPECT_EQ(dyson::lehmer_bounds(1).lower, 0.0);
}

TEST(AnalyticBounds, LehmerEstimate)
{
    const auto e = dyson::lehmer_estimate(100);
    expect_rel(e.value, 190568944.783338410047, 1e-12);
    expect_rel(e.error_cap, 23197067.5996669996660, 1e-12);
}

TEST(AnalyticBounds, SandwichHoldsOnSmallRange)
{
    const auto p = dyson::partition_numbers(300);
    for (int n = 2; n <= 300; ++n) {
        const auto b = dyson::lehmer_bounds(n);
        ASSERT_TRUE(dyson::exact_less(b.lower, p[static_cast<std::size_t>(n)])) << n;
        ASSERT_TRUE(dyson::exact_less(p[static_cast<std::size_t>(n)], b.upper)) << n;
    }
}

TEST(AnalyticBounds, MainTermAndEnvelope)
{
    expect_rel(dyson::main_term(500), -5619860.27242939829134, 1e-11);
    expect_rel(dyson::main_term(1000), 13408697250.3147468205, 1e-11);
    for (int n : {500, 501, 502, 777, 1500}) {
        const auto env = dyson::envelope(n);
        const double m = std::abs(dyson::main_term(n));
        EXPECT_LE(env.lower, m * (1 + 1e-12));
        EXPECT_LE(m, env.upper * (1 + 1e-12));
    }
    expect_rel(dyson::envelope(500).lower, 1273918.9009410702, 1e-10);
}

TEST(AnalyticBounds, ErrorTermsAt500)
{
    const double want[6] = {1177.62438654, 169.910286185, 7473.97970082, 1452.67366616, 4062.30109808, 83141.0203035};
    for (int i = 1; i <= 6; ++i) {
        expect_rel(dyson::error_term_bound(i, 500), want[i - 1], 1e-9);
    }
    const auto eb = dyson::error_budget(500);
    double sum = 0;
    for (double x : eb.e_tilde) {
        sum += x;
    }
    expect_rel(eb.total, sum, 1e-15);
    expect_rel(eb.total / eb.env_lower, 0.0765178, 1e-5);
    EXPECT_THROW(dyson::error_term_bound(0, 500), std::invalid_argument);
    EXPECT_THROW(dyson::error_term_bound(7, 500), std::invalid_argument);
}

TEST(AnalyticBounds, ErrorTermsLarger)
{
    const double want900[6] = {21895.4779362, 212.330499193, 8756.50927669, 1805.05274915, 5134.78648593, 103067.100392};
    for (int i = 1; i <= 6; ++i) {
        expect_rel(dyson::error_term_bound(i, 900), want900[i - 1], 1e-9);
    }
    expect_rel(dyson::error_term_bound(1, 3600), 3986010602.19, 1e-9);
    expect_rel(dyson::error_term_bound(2, 3600), 321.191986804, 1e-9);
    expect_rel(dyson::error_budget(600).total / dyson::error_budget(600).env_lower, 0.0144178, 1e-4);
}

TEST(AnalyticBounds, RatiosAt500)
{
    const double want[6] = {0.0064240, 0.00018126, 0.0097225, 0.0021087, 0.0071179, 0.53314};
    for (int i = 1; i <= 6; ++i) {
        expect_rel(dyson::ratio_F(i, 500), want[i - 1], 1e-4);
    }
    EXPECT_THROW(dyson::ratio_F(1, 499), std::invalid_argument);
}

TEST(AnalyticBounds, RatioCapDiscrepancyListed)
{
    const auto d = dyson::ratio_cap_discrepancies();
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d.front(), 2);
    EXPECT_LE(dyson::ratio_F(2, 500), dyson::kTableRatioCaps[1]);
}

TEST(AnalyticBounds, RatiosDecrease)
{
    for (int i = 1; i <= 6; ++i) {
        double prev = dyson::ratio_F(i, 500);
        for (int n = 600; n <= 5000; n += 100) {
            const double f = dyson::ratio_F(i, n);
            ASSERT_LE(f, prev) << i << ' ' << n;
            prev = f;
        }
    }
}

TEST(AnalyticBounds, ThresholdInequality)
{
    const auto s10 = dyson::threshold_sides(10, 3, 0.01);
    EXPECT_NEAR(s10.lhs, 4.7298, 1e-4);
    EXPECT_NEAR(s10.rhs, 6.3289, 1e-4);
    EXPECT_FALSE(s10.holds());
    const auto s500 = dyson::threshold_sides(500, 3, 0.01);
    EXPECT_NEAR(s500.lhs, 33.596, 1e-3);
    EXPECT_NEAR(s500.rhs, 9.4015, 1e-4);
    EXPECT_TRUE(dyson::lemma_threshold(1000, 3, 0.01));
    EXPECT_NEAR(dyson::threshold_sides(1000, 3, 0.01).lhs, 47.514, 1e-3);
    EXPECT_THROW(dyson::threshold_sides(1.0, 3, 0.01), std::invalid_argument);
    EXPECT_THROW(dyson::threshold_sides(10, 1, 0.01), std::invalid_argument);
    EXPECT_THROW(dyson::threshold_sides(10, 3, 1.0), std::invalid_argument);
}

TEST(AnalyticBounds, LambdaMonotonicity)
{
    EXPECT_NEAR(dyson::s_ratio(500, 1), 1.13047, 1e-5);
    EXPECT_NEAR(dyson::s_ratio(500, 2), 1.10891, 1e-5);
    EXPECT_NEAR(dyson::t_gap(500, 2), 39.124, 1e-3);
    EXPECT_NEAR(dyson::t_gap(2, 1), 2.0758, 1e-4);
    for (double x : {500.0, 800.0, 2000.0}) {
        double s_prev = dyson::s_ratio(x, 1);
        double t_prev = dyson::t_gap(x, 1);
        for (double lam = 1.25; lam <= 8; lam += 0.25) {
            EXPECT_LT(dyson::s_ratio(x, lam), s_prev);
            EXPECT_GT(dyson::t_gap(x, lam), t_prev);
            s_prev = dyson::s_ratio(x, lam);
            t_prev = dyson::t_gap(x, lam);
        }
    }
}

TEST(AnalyticBounds, ResidueEnvelope)
{
    const auto &t = test_support::table(1000);
    for (int n = 500; n <= 1000; n += 25) {
        EXPECT_TRUE(dyson::residue_envelope_check(t, n)) << n;
    }
    EXPECT_THROW(dyson::residue_envelope_check(t, 100), std::invalid_argument);
}

TEST(AnalyticBounds, HardyRamanujanOvershoots)
{
    for (int n : {100, 500, 1000}) {
        const double ratio = dyson::hardy_ramanujan(n) / dyson::to_double(dyson::partition_number(n));
        EXPECT_GT(ratio, 1.0);
        EXPECT_LT(ratio, 1.0 + 2.0 / std::sqrt(static_cast<double>(n)));
    }
}
