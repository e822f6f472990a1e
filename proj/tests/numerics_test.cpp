#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kscolour/numerics.hpp"

using namespace kscolour;

namespace {

constexpr double pi = std::numbers::pi;

// Reference values from 30-digit mpmath evaluations.
constexpr double kErfInvSqrt2 = 0.68268949213708589717;

TEST(Integrate, SineOverHalfPeriod)
{
    EXPECT_NEAR(integrate([](double t) { return std::sin(t); }, 0.0, pi), 2.0, 1e-12);
}

TEST(Integrate, EndpointSingularity)
{
    const auto r = integrate_detailed([](double t) { return 0.5 / std::sqrt(t); }, 0.0, 1.0);
    EXPECT_NEAR(r.value, 1.0, 1e-10);
    EXPECT_GT(r.intervals, 10); // refinement piles up at t = 0
}

TEST(Integrate, SineSquaredClosedForm)
{
    // Antiderivative (t − sin t cos t) / 2.
    const double expected = pi / 8 - 0.25;
    EXPECT_NEAR(integrate([](double t) { return std::sin(t) * std::sin(t); }, 0.0, pi / 4), expected, 1e-13);
    EXPECT_NEAR(expected, 0.142699081698724, 1e-14);
}

TEST(Integrate, EmptyIntervalAndBadOrder)
{
    EXPECT_EQ(integrate([](double) { return 1.0; }, 0.3, 0.3), 0.0);
    EXPECT_THROW(integrate([](double) { return 1.0; }, 1.0, 0.0), std::invalid_argument);
}

TEST(Integrate, BudgetExhaustionIsAnError)
{
    QuadratureConfig cfg;
    cfg.max_subdivisions = 3;
    EXPECT_THROW(integrate([](double t) { return std::sin(1.0 / (t + 1e-3)); }, 0.0, 1.0, cfg), QuadratureError);
}

TEST(Integrate, NonFiniteIntegrandIsAnError)
{
    // The Kronrod rule samples the midpoint, where this blows up.
    EXPECT_THROW(integrate([](double t) { return 1.0 / (t - 0.5); }, 0.0, 1.0), QuadratureError);
}

TEST(Integrate, RejectsBadConfig)
{
    QuadratureConfig cfg;
    cfg.abs_tol = 0.0;
    EXPECT_THROW(integrate([](double) { return 1.0; }, 0.0, 1.0, cfg), std::invalid_argument);
    cfg = {};
    cfg.max_subdivisions = 0;
    EXPECT_THROW(integrate([](double) { return 1.0; }, 0.0, 1.0, cfg), std::invalid_argument);
}

TEST(Integrate, LinearityAndAdditivityOnRandomIntegrands)
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::uniform_real_distribution<double> point(-1.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double c1 = coef(rng), c2 = coef(rng), w = 1.0 + std::abs(coef(rng));
        auto f = [=](double t) { return c1 * std::exp(-t * t) + c2 * std::cos(w * t); };
        auto g = [=](double t) { return t * t * t - c2 * t; };
        double a = point(rng), b = point(rng), m = point(rng);
        if (a > b)
            std::swap(a, b);
        m = a + (b - a) * std::abs(std::fmod(m, 1.0));
        const double alpha = coef(rng), beta = coef(rng);

        const double combined = integrate([&](double t) { return alpha * f(t) + beta * g(t); }, a, b);
        EXPECT_NEAR(combined, alpha * integrate(f, a, b) + beta * integrate(g, a, b), 1e-10);
        EXPECT_NEAR(integrate(f, a, b), integrate(f, a, m) + integrate(f, m, b), 1e-10);
    }
}

TEST(SinPowerIntegral, ClosedForms)
{
    EXPECT_NEAR(sin_power_integral(0, 0.0, pi / 2), pi / 2, 1e-15);
    EXPECT_NEAR(sin_power_integral(1, 0.0, pi / 2), 1.0, 1e-15);
    EXPECT_NEAR(sin_power_integral(2, 0.0, pi / 4), pi / 8 - 0.25, 1e-15);
}

TEST(SinPowerIntegral, MatchesDirectQuadrature)
{
    for (int p : {0, 1, 2, 3, 7, 20}) {
        const double direct = integrate([p](double t) { return std::pow(std::sin(t), p); }, 0.2, 2.9);
        EXPECT_NEAR(sin_power_integral(p, 0.2, 2.9), direct, 1e-12) << "p = " << p;
    }
}

TEST(SinPowerIntegral, WallisValues)
{
    // ∫₀^π sin^p = √π Γ((p+1)/2) / Γ(p/2 + 1).
    for (int p : {3, 10, 101, 1000, 100000}) {
        const double wallis =
            std::sqrt(pi) * std::exp(std::lgamma(0.5 * (p + 1)) - std::lgamma(0.5 * p + 1.0));
        EXPECT_NEAR(sin_power_integral(p, 0.0, pi) / wallis, 1.0, 1e-10) << "p = " << p;
    }
}

TEST(SinPowerIntegral, ReductionFormulaOnRandomIntervals)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> point(0.0, pi);
    std::uniform_int_distribution<int> power(2, 50);
    for (int trial = 0; trial < 200; ++trial) {
        double a = point(rng), b = point(rng);
        if (a > b)
            std::swap(a, b);
        const int p = power(rng);
        auto boundary = [p](double t) { return -std::pow(std::sin(t), p - 1) * std::cos(t) / p; };
        const double rhs = boundary(b) - boundary(a) + (p - 1.0) / p * sin_power_integral(p - 2, a, b);
        EXPECT_NEAR(sin_power_integral(p, a, b), rhs, 1e-10) << "p = " << p << " on [" << a << ", " << b << "]";
    }
}

TEST(SinPowerIntegral, RejectsInvalidRange)
{
    EXPECT_THROW(sin_power_integral(2, -0.1, 1.0), std::invalid_argument);
    EXPECT_THROW(sin_power_integral(2, 1.0, 0.5), std::invalid_argument);
    EXPECT_THROW(sin_power_integral(2, 0.0, 3.5), std::invalid_argument);
    EXPECT_THROW(sin_power_integral(-1, 0.0, 1.0), std::invalid_argument);
}

TEST(SurfaceRatio, SmallDimensions)
{
    EXPECT_NEAR(surface_ratio(3), 0.5, 1e-15);    // 2π / 4π
    EXPECT_NEAR(surface_ratio(2), 1.0 / pi, 1e-15); // 2 / 2π
    EXPECT_NEAR(surface_ratio(4), 2.0 / pi, 1e-15); // 4π / 2π²
}

TEST(SurfaceRatio, ReconstructsSphereAreas)
{
    const double s1 = 2.0 * pi;
    const double s2 = s1 / surface_ratio(3);
    const double s3 = s2 / surface_ratio(4);
    EXPECT_NEAR(s2, 4.0 * pi, 1e-12);
    EXPECT_NEAR(s3, 2.0 * pi * pi, 1e-12);
    EXPECT_NEAR(std::exp(log_sphere_area(1)), s1, 1e-12);
    EXPECT_NEAR(std::exp(log_sphere_area(2)), 4.0 * pi, 1e-12);
    EXPECT_NEAR(std::exp(log_sphere_area(3)), 2.0 * pi * pi, 1e-12);
    for (int n = 3; n < 60; ++n)
        EXPECT_NEAR(surface_ratio(n), std::exp(log_sphere_area(n - 2) - log_sphere_area(n - 1)), 1e-12 * n);
}

TEST(SurfaceRatio, LargeNAsymptote)
{
    const long long n = 1000000;
    EXPECT_NEAR(surface_ratio(n) / std::sqrt(n / (2.0 * pi)), 1.0, 1e-3);
    const double huge = surface_ratio(10000000);
    EXPECT_TRUE(std::isfinite(huge));
    EXPECT_NEAR(huge / std::sqrt(1e7 / (2.0 * pi)), 1.0, 1e-6);
    EXPECT_THROW(surface_ratio(1), std::invalid_argument);
}

TEST(SimplexCircumradius, Values)
{
    EXPECT_NEAR(simplex_circumradius(1), std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(simplex_circumradius(2), 0.816496580927726, 1e-15);
    EXPECT_NEAR(simplex_circumradius(3), std::sqrt(0.75), 1e-15);
    EXPECT_THROW(simplex_circumradius(0), std::invalid_argument);
}

TEST(SimplexCircumradius, MatchesCentroidDistanceOfStandardSimplex)
{
    // Vertices e_1..e_{n+1}; centroid (1/(n+1), ...). Distance to e_1 computed directly.
    for (int n = 1; n <= 12; ++n) {
        const double c = 1.0 / (n + 1);
        double sq = (1.0 - c) * (1.0 - c) + n * c * c;
        EXPECT_NEAR(simplex_circumradius(n), std::sqrt(sq), 1e-14) << "n = " << n;
    }
}

TEST(Erf, ReferenceValues)
{
    EXPECT_EQ(kscolour::erf(0.0), 0.0);
    EXPECT_NEAR(kscolour::erf(1.0 / std::sqrt(2.0)), kErfInvSqrt2, 1e-15);
    EXPECT_NEAR(kscolour::erf(-1.0 / std::sqrt(2.0)), -kErfInvSqrt2, 1e-15);
    EXPECT_NEAR(kscolour::erf(40.0), 1.0, 0.0);
}

TEST(Erf, AgreesWithGaussianQuadrature)
{
    const QuadratureConfig tight{1e-14, 1e-13, 2000};
    for (int i = 0; i <= 60; ++i) {
        const double z = 0.05 * i;
        const double direct =
            2.0 / std::sqrt(pi) * integrate([](double t) { return std::exp(-t * t); }, 0.0, z, tight);
        EXPECT_NEAR(kscolour::erf(z), direct, 1e-12) << "z = " << z;
    }
}

TEST(Erf, OddAndMonotone)
{
    double prev = -1.0;
    for (int i = -300; i <= 300; ++i) {
        const double z = 0.01 * i;
        EXPECT_EQ(kscolour::erf(-z), -kscolour::erf(z));
        EXPECT_GE(kscolour::erf(z), prev);
        prev = kscolour::erf(z);
    }
}

} // namespace
