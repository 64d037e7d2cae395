#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numbers>

#include "axiswalk/asymptotics.hpp"
#include "axiswalk/cone.hpp"
#include "property.hpp"

namespace axiswalk {
namespace {

using testing::for_all;
using testing::Gen;

TEST(BinomialPoint, Examples) {
    const BinomialPoint c = binomial_point(100, 0);
    EXPECT_NEAR(c.exact, 0.0795892, 1e-6 * 0.0795892);
    EXPECT_NEAR(c.gaussian, 0.0797885, 1e-6);
    EXPECT_LT(std::abs(c.gaussian - c.exact) / c.exact, 0.003);
    EXPECT_EQ(binomial_point(5, 2).exact, 0.0);
    EXPECT_NEAR(binomial_point(2, 0).exact, 0.5, 1e-15);
    EXPECT_EQ(binomial_point(3, 5).exact, 0.0);
}

TEST(BinomialPoint, AgreesWithIntegerArithmetic) {
    namespace mp = boost::multiprecision;
    for (const int k : {100, 150, 200}) {
        for (int x = -k; x <= k; x += 2) {
            mp::cpp_int c = 1;
            const int m = (k - x) / 2;
            for (int j = 1; j <= m; ++j) {
                c = c * (k - m + j) / j;
            }
            const double exact = std::ldexp(c.convert_to<double>(), -k);
            const double got = binomial_point(k, x).exact;
            ASSERT_NEAR(got, exact, 1e-12 * exact + 1e-300) << "k=" << k << " x=" << x;
        }
    }
}

TEST(BinomialPoint, PascalRecurrence) {
    // C(k,m) = C(k-1,m-1) + C(k-1,m) in probability form: P_k(x) = (P_{k-1}(x-1) + P_{k-1}(x+1)) / 2.
    for_all(41, 500, [](Gen& g, int) {
        const std::int64_t k = g.integer(2, 1000);
        std::int64_t x = g.integer(-k / 4, k / 4);
        if ((k - x) % 2 != 0) {
            ++x;
        }
        const double lhs = binomial_point(k, x).exact;
        const double rhs = 0.5 * (binomial_point(k - 1, x - 1).exact + binomial_point(k - 1, x + 1).exact);
        EXPECT_NEAR(lhs, rhs, 1e-12 * lhs);
    });
}

TEST(BinomialPoint, RelativeGapIsQuadraticInY) {
    const std::int64_t x = 100;
    double worst = 0.0;
    for (std::int64_t k = x * x; k <= 2 * x * x; k += 97) {
        for (std::int64_t y = 1; y <= 10; ++y) { // y <= x^{1/2}
            const std::int64_t z = (k - y) % 2 == 0 ? y : y + 1;
            const BinomialPoint p = binomial_point(k, z);
            const double gap = std::abs(p.exact - std::sqrt(2.0 / (std::numbers::pi * k))) /
                               std::sqrt(2.0 / (std::numbers::pi * k));
            worst = std::max(worst, gap * static_cast<double>(k) / static_cast<double>(z * z));
        }
    }
    EXPECT_LT(worst, 1.0);
}

// Paths of k +-1 steps from x that stay positive and end at y.
std::uint64_t enumerate(std::int64_t x, std::int64_t y, std::int64_t k) {
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::int64_t z = x;
        bool ok = true;
        for (std::int64_t i = 0; i < k && ok; ++i) {
            z += (mask >> i) & 1u ? 1 : -1;
            ok = z > 0;
        }
        count += ok && z == y ? 1 : 0;
    }
    return count;
}

TEST(Reflection, Examples) {
    EXPECT_DOUBLE_EQ(reflection_stay_positive(1, 1, 2), 0.25);
    EXPECT_DOUBLE_EQ(reflection_stay_positive(2, 2, 2), 0.5);
    EXPECT_EQ(reflection_stay_positive(1, 2, 2), 0.0);
}

TEST(Reflection, MatchesBruteForce) {
    for (std::int64_t x = 1; x <= 4; ++x) {
        for (std::int64_t y = 1; y <= 4; ++y) {
            for (std::int64_t k = 1; k <= 14; ++k) {
                const double brute = std::ldexp(static_cast<double>(enumerate(x, y, k)), -static_cast<int>(k));
                EXPECT_EQ(reflection_stay_positive(x, y, k), brute) << x << " " << y << " " << k;
            }
        }
    }
}

TEST(StayPositive, Examples) {
    EXPECT_DOUBLE_EQ(stay_positive(1, 1), 0.5);
    EXPECT_DOUBLE_EQ(stay_positive(2, 1), 1.0);
    const double v = stay_positive(3, 10000);
    EXPECT_NEAR(v / (3.0 * std::sqrt(2.0 / (std::numbers::pi * 1e4))), 1.0, 0.02);
}

TEST(StayPositive, SumAgreesWithClosedForm) {
    for_all(42, 200, [](Gen& g, int) {
        const std::int64_t u = g.integer(1, 30);
        const std::int64_t m = g.integer(1, 3000);
        EXPECT_NEAR(stay_positive(u, m), stay_positive_closed_form(u, m), 1e-12);
    });
}

TEST(Chernoff, Examples) {
    EXPECT_NEAR(chernoff_window_bound(600, 0.3), std::exp(-9.0), 1e-18);
    EXPECT_NEAR(chernoff_window_bound(600, 0.3), 1.234e-4, 1e-7);
    EXPECT_EQ(chernoff_window(11, 0.2), (std::pair<std::int64_t, std::int64_t>{4, 6}));
}

TEST(Chernoff, WindowMassBound) {
    const std::int64_t k = 200;
    const double eps = 0.3;
    const auto [lo, hi] = chernoff_window(k, eps);
    double outside = 0.0;
    for (std::int64_t j = 0; j <= k - 1; ++j) {
        if (j < lo || j > hi) {
            outside += std::exp(log_binomial(k - 1, j) - static_cast<double>(k - 1) * std::log(2.0));
        }
    }
    EXPECT_LE(outside, static_cast<double>(k) * chernoff_window_bound(k, eps));
}

TEST(Chernoff, RandomWalkExcursionBound) {
    // For k in [x, x^1.9] and j in the window, P(Z_j >= x - 1) <= exp(-x^2 / (6k)).
    const std::int64_t x = 50;
    const auto k_hi = static_cast<std::int64_t>(std::pow(50.0, 1.9));
    for (std::int64_t k = x; k <= k_hi; k += 7) {
        const auto [lo, hi] = chernoff_window(k, 0.3);
        double worst = 0.0;
        for (std::int64_t j = std::max<std::int64_t>(lo, 1); j <= hi; ++j) {
            worst = std::max(worst, binomial_upper_tail(j, x - 1));
        }
        EXPECT_LE(worst, std::exp(-static_cast<double>(x * x) / (6.0 * static_cast<double>(k)))) << "k=" << k;
    }
}

// Both oracles truncated at the same step count K; the DP radius exceeds K so
// nothing is killed.
TEST(SemiAnalytic, AgreesWithDynamicProgramming) {
    for (const std::int64_t x : {1, 2, 3}) {
        SemiAnalyticOptions opts;
        opts.k_max = 900;
        const ConeExitResult dp = cone_exit({1, x}, opts.k_max + 2, opts.k_max);
        ASSERT_EQ(dp.escaped, 0.0);
        for (std::int64_t y = 1; y <= 3; ++y) {
            const SemiAnalyticValue v = cone_exit_semianalytic(x, y, opts);
            EXPECT_NEAR(v.value, dp.exit_law.mass_of({y, 0}), 1e-12 + v.window_budget) << x << "," << y;
        }
    }
}

TEST(SemiAnalytic, DefaultTruncationReportsTail) {
    const SemiAnalyticValue v = cone_exit_semianalytic(2, 1);
    EXPECT_EQ(v.k_max, 400);
    EXPECT_GT(v.tail_estimate, 0.0);
    SemiAnalyticOptions longer;
    longer.k_max = 40000;
    const double reference = cone_exit_semianalytic(2, 1, longer).value;
    EXPECT_LE(v.value, reference);
    EXPECT_NEAR(v.value, reference, 1e-6 + v.error_budget());
}

// The same sum read as the exit law from (y,1) onto (0,x), with the DP run to
// the same time horizon.
TEST(SemiAnalytic, SymmetricVariant) {
    for (std::int64_t x = 1; x <= 4; ++x) {
        for (std::int64_t y = 1; y <= 4; ++y) {
            SemiAnalyticOptions opts;
            opts.k_max = 400;
            const SemiAnalyticValue v = cone_exit_semianalytic(x, y, opts);
            const double dp = cone_exit({y, 1}, opts.k_max + 2, opts.k_max).exit_law.mass_of({0, x});
            EXPECT_NEAR(v.value, dp, 1e-12 + v.window_budget) << x << "," << y;
        }
    }
}

TEST(EtaTail, SubProbability) {
    double total = 0.0;
    for (std::int64_t k = 3; k <= 400; ++k) {
        total += eta_tail_semianalytic(3, k).value;
        ASSERT_LE(total, 1.0 + 1e-12);
    }
}

TEST(EtaTail, AgreesWithDynamicProgramming) {
    const ConeExitResult dp = cone_exit({1, 2}, 210, 200);
    for (std::int64_t k = 2; k <= 200; ++k) {
        const SemiAnalyticValue v = eta_tail_semianalytic(2, k);
        EXPECT_NEAR(v.value, dp.time_law[static_cast<std::size_t>(k)], 1e-8 + v.error_budget()) << "k=" << k;
    }
}

} // namespace
} // namespace axiswalk
