#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pcf/series.hpp"
#include "support.hpp"

using pcf::SeriesSign;
using pcf::sum_y12;

namespace {

// Printed low-order coefficients of x^n/n!, n = 0..9, as polynomials in a.
double printed(int n, double a, double s) {
    switch (n) {
        case 0: return 1.0;
        case 1: return 1.0;
        case 2: return a;
        case 3: return a;
        case 4: return a * a + s * 0.5;
        case 5: return a * a + s * 1.5;
        case 6: return a * a * a + s * 3.5 * a;
        case 7: return a * a * a + s * 6.5 * a;
        case 8: return a * a * a * a + s * 11.0 * a * a + 3.75;
        case 9: return a * a * a * a + s * 17.0 * a * a + 15.75;
    }
    return 0.0;
}

double five_point_second(double (*f)(double, double, SeriesSign), double a, double x, SeriesSign s, double h) {
    return (-f(a, x + 2 * h, s) + 16 * f(a, x + h, s) - 30 * f(a, x, s) + 16 * f(a, x - h, s) -
            f(a, x - 2 * h, s)) /
           (12 * h * h);
}

double y1_of(double a, double x, SeriesSign s) { return sum_y12(a, x, s).y1; }
double y2_of(double a, double x, SeriesSign s) { return sum_y12(a, x, s).y2; }

}  // namespace

TEST_CASE("values at the origin") {
    for (auto s : {SeriesSign::Plus, SeriesSign::Minus}) {
        for (double a : {-3.0, 0.0, 2.5}) {
            const auto r = sum_y12(a, 0.0, s);
            CHECK(r.y1 == 1.0);
            CHECK(r.y2 == 0.0);
            CHECK(r.dy1 == 0.0);
            CHECK(r.dy2 == 1.0);
        }
    }
}

TEST_CASE("printed coefficients") {
    for (auto s : {SeriesSign::Plus, SeriesSign::Minus}) {
        const double sg = s == SeriesSign::Plus ? 1.0 : -1.0;
        for (double a : {-2.0, 0.5, 3.0}) {
            const auto c = pcf::series_coefficients(a, s, 9);
            REQUIRE(c.size() == 10);
            for (int n = 0; n <= 9; ++n) {
                INFO("n = " << n << ", a = " << a);
                CHECK(c[static_cast<std::size_t>(n)] == doctest::Approx(printed(n, a, sg)).epsilon(1e-15));
            }
        }
    }
}

TEST_CASE("reference sums") {
    CHECK(sum_y12(0.0, 1.0, SeriesSign::Plus).y1 == doctest::Approx(1.020926515616959).epsilon(1e-15));
    // y1(0, 1) with the minus recurrence from the same high-precision sum
    CHECK(sum_y12(0.0, 1.0, SeriesSign::Minus).y1 == doctest::Approx(0.979259496654777).epsilon(1e-14));
}

TEST_CASE("parity is exact") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> da(-10.0, 10.0), dx(0.0, 6.0);
    for (int i = 0; i < 100; ++i) {
        const double a = da(rng), x = dx(rng);
        for (auto s : {SeriesSign::Plus, SeriesSign::Minus}) {
            const auto p = sum_y12(a, x, s), m = sum_y12(a, -x, s);
            CHECK(p.y1 == m.y1);
            CHECK(p.y2 == -m.y2);
            CHECK(p.dy1 == -m.dy1);
            CHECK(p.dy2 == m.dy2);
        }
    }
}

TEST_CASE("derivatives match central differences") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> da(-5.0, 5.0), dx(-5.0, 5.0);
    for (int i = 0; i < 100; ++i) {
        const double a = da(rng), x = dx(rng);
        const double h = 1e-5 * std::max(1.0, std::fabs(x));
        for (auto s : {SeriesSign::Plus, SeriesSign::Minus}) {
            const auto r = sum_y12(a, x, s), rp = sum_y12(a, x + h, s), rm = sum_y12(a, x - h, s);
            const double fd1 = (rp.y1 - rm.y1) / (2 * h), fd2 = (rp.y2 - rm.y2) / (2 * h);
            const double scale = std::max({1.0, std::fabs(r.y1), std::fabs(r.y2)});
            CHECK(std::fabs(fd1 - r.dy1) <= 1e-6 * std::max(std::fabs(r.dy1), scale));
            CHECK(std::fabs(fd2 - r.dy2) <= 1e-6 * std::max(std::fabs(r.dy2), scale));
        }
    }
}

TEST_CASE("both Weber equations are satisfied") {
    const double h = 2e-3;
    for (double a = -1.0; a <= 1.0; a += 0.5) {
        for (double x = -2.0; x <= 2.0; x += 0.5) {
            for (auto s : {SeriesSign::Plus, SeriesSign::Minus}) {
                const double q = (s == SeriesSign::Plus ? 1.0 : -1.0) * x * x / 4 + a;
                const double r1 = five_point_second(y1_of, a, x, s, h) - q * y1_of(a, x, s);
                const double r2 = five_point_second(y2_of, a, x, s, h) - q * y2_of(a, x, s);
                INFO("a = " << a << ", x = " << x);
                CHECK(std::fabs(r1) < 1e-8);
                CHECK(std::fabs(r2) < 1e-8);
            }
        }
    }
}

TEST_CASE("bookkeeping") {
    const auto r = sum_y12(2.0, 6.0, SeriesSign::Plus);
    CHECK(r.terms_used > 0);
    CHECK(r.terms_used <= pcf::kSeriesTermCap);
    CHECK(r.trunc_estimate >= 0.0);
}

TEST_CASE("non-convergence is reported with the partial sums") {
    try {
        sum_y12(1.0, 200.0, SeriesSign::Plus);
        FAIL("expected ConvergenceError");
    } catch (const pcf::ConvergenceError& e) {
        CHECK(e.partial().terms_used == pcf::kSeriesTermCap);
    }
}
