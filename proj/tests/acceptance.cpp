// Acceptance suite: one PASS/FAIL line per primary criterion. Tolerances
// are pinned here. Runs on the embedded tables alone.
//
// Exit status is the number of criteria that failed unexpectedly. The table
// criterion fails on a correct build because 20 printed cells are
// inaccurate (see README); it still prints FAIL, and it only counts as
// expected when the failing cells are exactly those 20.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <tuple>

#include "pcf/asymptotic.hpp"
#include "pcf/cgamma.hpp"
#include "pcf/closed_forms.hpp"
#include "pcf/dispatch.hpp"
#include "pcf/fixtures.hpp"
#include "pcf/selftest.hpp"
#include "pcf/uv.hpp"
#include "pcf/w.hpp"

using namespace pcf;

namespace {

constexpr double kAnchorTol = 1e-12;
constexpr double kRecurrenceTol = 1e-10;
constexpr double kOdeUVTol = 1e-9;
constexpr double kOdeWTol = 1e-8;
constexpr double kGammaTol = 1e-12;
constexpr double kKIdentityTol = 1e-13;
constexpr double kDegenerationTol = 1e-12;
constexpr double kRuntimeLimit = 1.0;

int unexpected = 0;

void report(bool pass, const std::string& name, const std::string& detail, bool known_failure = false) {
    std::printf("%s %s: %s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    if (!pass && !known_failure) ++unexpected;
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

double rel(double computed, double expected) {
    return expected == 0.0 ? std::fabs(computed) : std::fabs(computed - expected) / std::fabs(expected);
}

double sinpi(double a) {
    const double r = std::remainder(a, 2.0);
    return r == 0.0 || std::fabs(r) == 1.0 ? 0.0 : std::sin(M_PI * r);
}

double cospi(double a) {
    const double r = std::remainder(a, 2.0);
    return std::fabs(r) == 0.5 ? 0.0 : std::cos(M_PI * r);
}

double u(double a, double x) { return dispatch(Function::U, a, x).value; }
double v(double a, double x) { return dispatch(Function::V, a, x).value; }
double du(double a, double x) { return dispatch(Function::U, a, x).derivative; }
double dv(double a, double x) { return dispatch(Function::V, a, x).derivative; }
double w(double a, double x) { return dispatch(Function::W, a, x).value; }

const std::set<std::tuple<int, double, double>> kInaccurateCells = {
    {4, -5.0, 3.0},  {4, 1.0, 3.0},   {4, -5.0, 5.0},  {4, -3.5, 5.0}, {4, 1.0, 5.0},
    {4, 3.5, 5.0},   {4, 5.0, 5.0},   {5, -5.0, -5.0}, {5, -3.5, -5.0}, {6, -5.0, 5.0},
    {6, -3.5, 5.0},  {7, -5.0, -5.0}, {7, -3.5, -5.0}, {7, 5.0, -5.0}, {8, 5.0, 3.0},
    {8, -5.0, 5.0},  {8, 1.0, 5.0},   {8, 5.0, 5.0},   {9, -5.0, -5.0}, {9, -3.0, -5.0},
};

void table_reproduction() {
    const auto start = std::chrono::steady_clock::now();
    const SelftestReport r = run_selftest(paper_fixtures());
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::set<std::tuple<int, double, double>> failing;
    const auto& fx = paper_fixtures();
    for (std::size_t i = 0; i < fx.size(); ++i) {
        if (!r.fixture_checks[i].passed) failing.insert({fx[i].table, fx[i].a, fx[i].x});
    }
    const std::size_t within = fx.size() - failing.size();
    const bool pass = failing.empty() && seconds < kRuntimeLimit;
    const bool known = failing == kInaccurateCells && seconds < kRuntimeLimit;
    std::string detail = std::to_string(within) + "/" + std::to_string(fx.size()) +
                         " cells within 5*10^(1-d) relative (1e-13 absolute for zeros), " + fmt("%.3f s", seconds);
    if (!pass && known) detail += "; the 20 failing cells are misprinted (values verified to 40 digits)";
    report(pass, "table reproduction", detail, known);
}

void zero_point_anchors() {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double a = -5.0 + 10.0 * i / 19.0;
        const auto ru = dispatch(Function::U, a, 0.0), rv = dispatch(Function::V, a, 0.0),
                   rw = dispatch(Function::W, a, 0.0);
        const double u0 = std::sqrt(M_PI) / (std::pow(2.0, a / 2 + 0.25) * std::tgamma(a / 2 + 0.75));
        const double du0 = -std::sqrt(M_PI) / (std::pow(2.0, a / 2 - 0.25) * std::tgamma(a / 2 + 0.25));
        const double v0 = std::pow(2.0, a / 2 + 0.25) * std::sin(M_PI * (0.75 - a / 2)) / std::tgamma(0.75 - a / 2);
        const double dv0 = std::pow(2.0, a / 2 + 0.75) * std::sin(M_PI * (0.25 - a / 2)) / std::tgamma(0.25 - a / 2);
        const double g1 = gamma_modulus({0.25, a / 2}), g3 = gamma_modulus({0.75, a / 2});
        const double w0 = std::pow(2.0, -0.75) * std::sqrt(g1 / g3);
        const double dw0 = -std::pow(2.0, -0.25) * std::sqrt(g3 / g1);
        for (double e : {rel(ru.value, u0), rel(ru.derivative, du0), rel(rv.value, v0), rel(rv.derivative, dv0),
                         rel(rw.value, w0), rel(rw.derivative, dw0)}) {
            worst = std::max(worst, e);
        }
    }
    report(worst <= kAnchorTol, "zero-point anchors",
           fmt("U, U', V, V', W, W' at x = 0 for 20 a in [-5, 5], max rel err %.2e (limit %.0e)", worst, kAnchorTol));
}

void closed_form_oracles() {
    const auto checks = closed_form_suite();
    const auto failed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; });
    double worst = 0.0;
    for (const auto& c : checks) {
        if (c.error.empty() && c.expected != 0.0 && std::fabs(c.expected) >= 1e-8) {
            worst = std::max(worst, rel(c.computed, c.expected));
        }
    }
    report(failed == 0, "closed-form oracles",
           std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) +
               fmt(" checks (Table 1, erfc forms, integer-a Bessel forms, W(0,x)), max rel err %.2e (limit %.0e)",
                   worst, 1e-10));
}

void recurrence_and_connection() {
    double worst = 0.0;
    auto track = [&](double residual, std::initializer_list<double> terms) {
        double scale = 0.0;
        for (double t : terms) scale = std::max(scale, std::fabs(t));
        if (scale > 0.0) worst = std::max(worst, std::fabs(residual) / scale);
    };
    // pi V(a,x) = Gamma(1/2+a) [sin(pi a) U(a,x) + U(a,-x)]
    for (double a : {-1.0, 1.0, 3.5, 5.0}) {
        for (double x : {0.0, 1.0, 3.0, 5.0}) {
            const double g = std::tgamma(0.5 + a), s = sinpi(a);
            const double lhs = M_PI * v(a, x), t1 = g * s * u(a, x), t2 = g * u(a, -x);
            track(lhs - t1 - t2, {lhs, t1, t2});
        }
    }
    // U(a,x) Gamma(a+1/2) cos^2(pi a) = pi [V(a,-x) - sin(pi a) V(a,x)]
    for (double a : {-5.0, -1.0, 1.0, 5.0}) {
        for (double x : {1.0, 3.0}) {
            const double c = cospi(a);
            const double lhs = u(a, x) * std::tgamma(a + 0.5) * c * c;
            const double t1 = M_PI * v(a, -x), t2 = M_PI * sinpi(a) * v(a, x);
            track(lhs - t1 + t2, {lhs, t1, t2});
        }
    }
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> da(-4.0, 4.0), dx(0.0, 5.0);
    for (int i = 0; i < 50; ++i) {
        const double a = da(rng), x = dx(rng);
        const double um = u(a - 1, x), uu = u(a, x), up = u(a + 1, x);
        track(x * uu - um + (a + 0.5) * up, {x * uu, um, (a + 0.5) * up});
        track(du(a, x) - 0.5 * x * uu + um, {du(a, x), 0.5 * x * uu, um});
        const double vm = v(a - 1, x), vv = v(a, x), vp = v(a + 1, x);
        track(x * vv - vp + (a - 0.5) * vm, {x * vv, vp, (a - 0.5) * vm});
        track(dv(a, x) - 0.5 * x * vv - (a - 0.5) * vm, {dv(a, x), 0.5 * x * vv, (a - 0.5) * vm});
    }
    report(worst <= kRecurrenceTol, "recurrence and connection residuals",
           fmt("V from U(+-x), U from V(+-x), three-term and derivative recurrences in a, max rel residual %.2e "
               "(limit %.0e)",
               worst, kRecurrenceTol));
}

void ode_residuals() {
    double worst_uv = 0.0;
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> da(-4.0, 4.0), dx(-5.0, 5.0);
    for (int i = 0; i < 50; ++i) {
        const double a = da(rng), x = dx(rng), q = x * x / 4 + a;
        const double uu = u(a, x), u2 = 0.5 * uu + 0.5 * x * du(a, x) - du(a - 1, x);
        worst_uv = std::max(worst_uv, std::fabs(u2 - q * uu) / std::max(std::fabs(u2), std::fabs(q * uu)));
        const double vv = v(a, x), v2 = 0.5 * vv + 0.5 * x * dv(a, x) + (a - 0.5) * dv(a - 1, x);
        worst_uv = std::max(worst_uv, std::fabs(v2 - q * vv) / std::max(std::fabs(v2), std::fabs(q * vv)));
    }
    // W by a five-point second difference where |W| is of order one
    double worst_w = 0.0;
    const double h = 2e-3;
    for (double a = -3.0; a <= 3.0; a += 0.75) {
        for (double x = -5.0; x <= 5.0; x += 0.5) {
            if (x < 0 && a > 0) continue;
            const double w2 =
                (-w(a, x + 2 * h) + 16 * w(a, x + h) - 30 * w(a, x) + 16 * w(a, x - h) - w(a, x - 2 * h)) / (12 * h * h);
            worst_w = std::max(worst_w, std::fabs(w2 + (x * x / 4 - a) * w(a, x)));
        }
    }
    report(worst_uv <= kOdeUVTol && worst_w <= kOdeWTol, "ODE residuals",
           fmt("U, V via recurrences max rel %.2e (limit 1e-9); ", worst_uv) +
               fmt("W via differences max abs %.2e (limit 1e-8)", worst_w));
}

void gamma_kernel() {
    using cplx = std::complex<double>;
    auto g = [](cplx z) {
        const ComplexValue r = gamma({z.real(), z.imag()});
        return cplx(r.re, r.im);
    };
    auto sin_pi = [](cplx z) {
        return cplx(sinpi(z.real()) * std::cosh(M_PI * z.imag()), cospi(z.real()) * std::sinh(M_PI * z.imag()));
    };
    std::mt19937_64 rng(45);
    std::uniform_real_distribution<double> dre(-8.0, 8.0), dim(-4.0, 4.0);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const cplx z(dre(rng), dim(rng));
        // Gamma(z + 3) = z (z+1) (z+2) Gamma(z)
        const cplx lhs = g(z + 3.0), rhs = z * (z + 1.0) * (z + 2.0) * g(z);
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
        // Gamma(z) Gamma(-z) = -pi / (z sin(pi z))
        const cplx p = g(z) * g(-z), q = -M_PI / (z * sin_pi(z));
        worst = std::max(worst, std::abs(p - q) / std::abs(q));
    }
    const std::array<Rational, 10> printed = {
        {{1, 6}, {-1, 30}, {1, 42}, {-1, 30}, {5, 66}, {-691, 2730}, {7, 6}, {-3617, 510}, {43867, 798}, {-174611, 330}}};
    const bool exact = bernoulli_table() == printed;
    report(worst <= kGammaTol && exact, "gamma kernel",
           fmt("shift and reflection identities at 200 complex points, max rel residual %.2e (limit %.0e); ", worst,
               kGammaTol) +
               (exact ? "Bernoulli table exact" : "Bernoulli table MISMATCH"));
}

void asymptotic_identities() {
    double worst_k = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double a = -10.0 + 20.0 * i / 99.0;
        const auto c = w_context(a, 10.0);
        worst_k = std::max(worst_k, std::fabs(c.k * c.k_inv - 1.0));
    }
    double worst_t = 0.0;
    for (int n = 0; n <= 4; ++n) {
        const double au = -0.5 - n, av = 0.5 + n;
        worst_t = std::max(worst_t, rel(pulx(au, 10.0).value, u_halfodd(au, 10.0).value));
        worst_t = std::max(worst_t, rel(pvlx(av, 10.0).value, v_halfodd(av, 10.0).value));
    }
    report(worst_k <= kKIdentityTol && worst_t <= kDegenerationTol, "asymptotic identities",
           fmt("|k k_inv - 1| max %.2e over a in [-10, 10] (limit 1e-13); ", worst_k) +
               fmt("half-odd brackets at x = 10 max rel err %.2e (limit 1e-12)", worst_t));
}

}  // namespace

int main() {
    table_reproduction();
    zero_point_anchors();
    closed_form_oracles();
    recurrence_and_connection();
    ode_residuals();
    gamma_kernel();
    asymptotic_identities();
    return unexpected;
}
