#include "fracbound/errors.hpp"
#include "fracbound/fraccalc.hpp"
#include "fracbound/grid.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace fracbound;

TEST(FractionalOrder, RejectsOutsideRange) {
    EXPECT_THROW(FractionalOrder(1.0), DomainError);
    EXPECT_THROW(FractionalOrder(2.0001), DomainError);
    EXPECT_NO_THROW(FractionalOrder(2.0));
}

TEST(Grunwald, MatchesGammaOracle) {
    for (double q : {1.1, 1.5, 1.9, 0.5, -0.5, -1.3}) {
        const GrunwaldTable g(q, 3000);
        for (long k : {0L, 1L, 2L, 3L, 10L, 77L, 500L, 3000L}) {
            const double ref = static_cast<double>(oracle::grunwald(q, k));
            EXPECT_NEAR(g(k), ref, 1e-12 * std::abs(ref)) << "q=" << q << " k=" << k;
        }
    }
}

TEST(Grunwald, IntegerOrderTwoTerminates) {
    const GrunwaldTable g(2.0, 20);
    EXPECT_EQ(g(0), 1.0);
    EXPECT_EQ(g(1), -2.0);
    EXPECT_EQ(g(2), 1.0);
    for (long k = 3; k <= 20; ++k) EXPECT_EQ(g(k), 0.0);
    EXPECT_EQ(g(-1), 0.0);
}

TEST(Grunwald, PartialSumsLowerTheOrder) {
    const double a = 1.3;
    const GrunwaldTable g(a, 5000), g1(a - 1.0, 5000);
    for (long k : {0L, 1L, 5L, 100L, 5000L}) EXPECT_LE(relative_error(g.partial_sum(k), g1(k)), 1e-12);
}

TEST(Grunwald, ConvolutionAddsOrders) {
    for (auto [q, Q] : {std::pair{1.5, 0.5}, std::pair{1.2, -0.7}, std::pair{1.9, 0.9}}) {
        for (std::size_t k : {0u, 1u, 7u, 250u}) {
            const auto [lhs, rhs] = grunwald_convolve_check(q, Q, k);
            EXPECT_LE(relative_error(lhs, static_cast<double>(oracle::grunwald(q + Q, long(k)))), 1e-11);
            EXPECT_LE(relative_error(lhs, rhs), 1e-11);
        }
    }
}

TEST(Grunwald, WeightedTailSum) {
    // Σ_{K=2}^{M} (K−1)𝒢^α_K = 1 − α𝒢^{α−2}_{M−1} − 𝒢^{α−1}_M
    const double a = 1.6;
    const long M = 800;
    const GrunwaldTable g(a, M);
    long double s = 0;
    for (long K = 2; K <= M; ++K) s += (K - 1) * static_cast<long double>(g(K));
    const long double ref = 1.0L - a * oracle::grunwald(a - 2.0L, M - 1) - oracle::grunwald(a - 1.0L, M);
    EXPECT_NEAR(double(s), double(ref), 1e-12);
}

TEST(PowerFunctions, ValuesAndDomain) {
    EXPECT_NEAR(power_eval(2.0, Side::plus, 0.0), 0.5, 1e-15);
    EXPECT_NEAR(power_eval(0.5, Side::minus, -1.0), std::sqrt(2.0) / std::tgamma(1.5), 1e-14);
    EXPECT_EQ(power_eval(0.0, Side::plus, -1.0), 1.0);
    EXPECT_TRUE(std::isinf(power_eval(-0.5, Side::plus, -1.0)));
    EXPECT_EQ(power_eval(1.5, Side::minus, 1.0), 0.0);
    EXPECT_THROW(power_eval(1.0, Side::plus, 1.5), DomainError);
}

TEST(FracIntegral, RaisesPowerIndex) {
    const Grid grid(63);
    for (Side side : {Side::plus, Side::minus}) {
        for (double beta : {1.0, 2.0}) {
            const double nu = 0.4;
            const GridFunction p = sample(grid, [&](double x) { return power_eval(beta, side, x); }, Space::L1, 9);
            const GridFunction I = frac_integral(nu, p, side);
            double err = 0.0;
            for (double x = -1.0; x <= 1.0; x += 0.05)
                err = std::max(err, std::abs(I(x) - power_eval(beta + nu, side, x)));
            EXPECT_LT(err, 2e-3) << "beta=" << beta;
        }
    }
}

TEST(MittagLeffler, HyperbolicAtOrderTwo) {
    for (double x : {-1.0, -0.3, 0.4, 1.0}) {
        const double y = 1.0 + x;
        EXPECT_NEAR(mittag_h(2.0, 0.0, Side::plus, x), std::cosh(y), 1e-13 * std::cosh(y));
        EXPECT_NEAR(mittag_h(2.0, 1.0, Side::plus, x), std::sinh(y), 1e-13 * std::cosh(y));
        EXPECT_NEAR(mittag_h(2.0, 0.0, Side::minus, -x), std::cosh(y), 1e-13 * std::cosh(y));
    }
}

TEST(MittagLeffler, SeriesShiftAndDirectSum) {
    const double a = 1.5;
    for (double beta : {0.5, 1.0, 2.5}) {
        for (double x : {-0.5, 0.2, 1.0}) {
            const double y = 1.0 + x;
            double direct = 0.0;
            for (int m = 0; m < 60; ++m) direct += std::pow(y, m * a + beta) / std::tgamma(m * a + beta + 1.0);
            const double h = mittag_h(a, beta, Side::plus, x);
            EXPECT_NEAR(h, direct, 1e-13 * direct);
            EXPECT_NEAR(h, power_eval(beta, Side::plus, x) + mittag_h(a, beta + a, Side::plus, x), 1e-13 * direct);
        }
    }
}
