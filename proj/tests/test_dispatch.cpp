#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>

#include "pcf/dispatch.hpp"
#include "pcf/errors.hpp"
#include "support.hpp"

using namespace pcf;

TEST_CASE("examples") {
    const auto u = dispatch(Function::U, -5.0, 3.0);
    CHECK(u.value == doctest::Approx(3.202129097812791).epsilon(1e-14));
    CHECK(u.regime == Regime::ModerateSeries);
    CHECK(dispatch(Function::V, -3.5, -5.0).value == doctest::Approx(1.173350875864019).epsilon(1e-13));
    const auto g = dispatch(Function::U, -0.5, 10.0);
    CHECK(g.value == doctest::Approx(std::exp(-25.0)).epsilon(1e-15));
    CHECK(g.regime == Regime::LargeArgAsymptotic);
}

TEST_CASE("regime boundaries") {
    CHECK(asymptotic_bound(0.0) == 8.0);
    CHECK(asymptotic_bound(-4.0) == 14.0);
    for (Function f : {Function::U, Function::V, Function::W}) {
        CHECK(dispatch(f, 1.0, 6.0).regime == Regime::ModerateSeries);
        CHECK(dispatch(f, 1.0, -6.0).regime == Regime::ModerateSeries);
        CHECK(dispatch(f, 1.0, 8.0).regime == Regime::LargeArgAsymptotic);
        CHECK(dispatch(f, 1.0, -8.0).regime == Regime::LargeArgAsymptotic);
        CHECK(dispatch(f, 3.0, 30.0).regime == Regime::LargeArgAsymptotic);
    }
}

TEST_CASE("agreement with mpmath in every regime") {
    for (const auto& e : testing::reference()["large"]) {
        const double a = e["a"].get<double>(), x = e["x"].get<double>();
        const Function f = testing::function_of(e["function"].get<std::string>());
        const double ref = testing::num(e["value"]), dref = testing::num(e["derivative"]);
        const auto r = dispatch(f, a, x);
        INFO(to_string(f) << "(" << a << ", " << x << ") " << to_string(r.regime));
        CHECK(std::fabs(r.value - ref) <= r.accuracy_estimate + 4e-16 * std::fabs(ref));
        const double scale = f == Function::W ? std::hypot(ref, dref / (std::fabs(x) / 2)) : std::fabs(ref);
        CHECK(std::fabs(r.value - ref) <= 1e-9 * scale);
        CHECK(std::fabs(r.derivative - dref) <= 1e-9 * std::max(std::fabs(dref), scale * std::fabs(x) / 2));
    }
}

TEST_CASE("deterministic") {
    for (Function f : {Function::U, Function::V, Function::W}) {
        for (double x : {-12.0, -7.0, 0.3, 5.0, 7.0, 12.0}) {
            const auto r1 = dispatch(f, 0.7, x), r2 = dispatch(f, 0.7, x);
            CHECK(std::memcmp(&r1.value, &r2.value, sizeof(double)) == 0);
            CHECK(std::memcmp(&r1.derivative, &r2.derivative, sizeof(double)) == 0);
            CHECK(r1.regime == r2.regime);
        }
    }
}

TEST_CASE("forced regimes agree where both apply") {
    for (Function f : {Function::U, Function::V, Function::W}) {
        for (double a = -1.0; a <= 1.0; a += 0.25) {
            for (double x = 8.0; x <= 10.0; x += 0.5) {
                for (double sx : {x, -x}) {
                    const auto s = dispatch(f, a, sx, Regime::ModerateSeries);
                    const auto l = dispatch(f, a, sx, Regime::LargeArgAsymptotic);
                    INFO(to_string(f) << "(" << a << ", " << sx << ")");
                    CHECK(s.regime == Regime::ModerateSeries);
                    CHECK(l.regime == Regime::LargeArgAsymptotic);
                    CHECK(std::fabs(s.value - l.value) <= s.accuracy_estimate + l.accuracy_estimate);
                }
            }
        }
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(dispatch(Function::U, 25.5, 1.0), RangeError);
    CHECK_THROWS_AS(dispatch(Function::W, 1.0, 1.0, Regime::ClosedForm), RegimeError);
    CHECK_THROWS_AS(dispatch(Function::U, 1.0, 0.0, Regime::LargeArgAsymptotic), RegimeError);
    CHECK_THROWS_AS(dispatch(Function::V, 1.0, 0.3, Regime::LargeArgAsymptotic), RegimeError);
    CHECK_THROWS_AS(dispatch(Function::V, 1.0, 40.0, Regime::ModerateSeries), RegimeError);
    CHECK_THROWS_AS(dispatch(Function::U, NAN, 1.0), DomainError);
}

TEST_CASE("names") {
    CHECK(to_string(Regime::ModerateSeries) == "moderate_series");
    CHECK(to_string(Regime::LargeArgAsymptotic) == "large_arg_asymptotic");
    CHECK(to_string(Regime::ClosedForm) == "closed_form");
    CHECK(to_string(Function::W) == "W");
}
