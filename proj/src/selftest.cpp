#include "pcf/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <sstream>

#include "pcf/cgamma.hpp"
#include "pcf/closed_forms.hpp"
#include "pcf/dispatch.hpp"
#include "pcf/series.hpp"

namespace pcf {

namespace {

constexpr double kClosedFormRel = 1e-10;
constexpr double kClosedFormAbs = 1e-13;
constexpr double kClosedFormSmall = 1e-8;
constexpr double kOracleRel = 1e-11;

std::string fmt(const char* pattern, double a, double x) {
    char buf[128];
    std::snprintf(buf, sizeof buf, pattern, a, x);
    return buf;
}

Check compare(std::string name, double computed, double expected, double tolerance) {
    Check c;
    c.name = std::move(name);
    c.computed = computed;
    c.expected = expected;
    c.tolerance = tolerance;
    c.passed = std::isfinite(computed) && std::fabs(computed - expected) <= tolerance;
    return c;
}

double closed_form_tolerance(double expected) {
    if (std::fabs(expected) < kClosedFormSmall) return kClosedFormAbs;
    return kClosedFormRel * std::fabs(expected);
}

/// Runs `body`, turning an exception into a failed check.
void guarded(std::vector<Check>& out, const std::string& name, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        Check c;
        c.name = name;
        c.error = e.what();
        out.push_back(std::move(c));
    }
}

void push_pair(std::vector<Check>& out, const std::string& name, const EvalResult& series,
               double value, double derivative) {
    out.push_back(compare(name, series.value, value, closed_form_tolerance(value)));
    out.push_back(compare(name + "'", series.derivative, derivative, closed_form_tolerance(derivative)));
}

constexpr double kSamples[] = {0.5, 1.0, 2.0, 3.0, 4.0, 5.0};

}  // namespace

int SelftestReport::failures() const {
    int n = 0;
    for (const auto* list : {&fixture_checks, &closed_form_checks, &oracle_checks}) {
        n += static_cast<int>(std::count_if(list->begin(), list->end(), [](const Check& c) { return !c.passed; }));
    }
    return n;
}

Check check_fixture(const ReferenceFixture& f) {
    Check c;
    c.name = std::string(to_string(f.function)) + fmt("(%g, %g) table ", f.a, f.x) + std::to_string(f.table);
    c.expected = f.expected;
    c.tolerance = fixture_tolerance(f);
    try {
        c.computed = dispatch(f.function, f.a, f.x).value;
        c.passed = std::fabs(c.computed - c.expected) <= c.tolerance;
    } catch (const std::exception& e) {
        c.error = e.what();
    }
    return c;
}

std::vector<Check> closed_form_suite() {
    std::vector<Check> out;

    for (double a : {-4.5, -3.5, -2.5, -1.5, -0.5, 0.5, 1.5, 2.5}) {
        for (double s : kSamples) {
            for (double x : {s, -s}) {
                const std::string name = fmt("U(%g, %g) half-odd", a, x);
                guarded(out, name, [&] {
                    const ValueAndDerivative cf = u_halfodd(a, x);
                    push_pair(out, name, dispatch(Function::U, a, x), cf.value, cf.derivative);
                });
            }
        }
    }
    for (double a : {0.5, 1.5, 2.5, 3.5, 4.5}) {
        for (double s : kSamples) {
            for (double x : {s, -s}) {
                const std::string name = fmt("V(%g, %g) half-odd", a, x);
                guarded(out, name, [&] {
                    const ValueAndDerivative cf = v_halfodd(a, x);
                    push_pair(out, name, dispatch(Function::V, a, x), cf.value, cf.derivative);
                });
            }
        }
    }
    // U'(1/2, x) - (x/2) U(1/2, x) + e^{-x^2/4} = 0
    for (double s : kSamples) {
        for (double x : {s, -s}) {
            const std::string name = fmt("U(0.5, %g) erfc identity%.0s", x, 0.0);
            guarded(out, name, [&] {
                const EvalResult r = dispatch(Function::U, 0.5, x);
                const double residual = r.derivative - 0.5 * x * r.value + std::exp(-x * x / 4.0);
                out.push_back(compare(name, residual, 0.0, 1e-12));
            });
        }
    }
    for (int a = -2; a <= 2; ++a) {
        for (double x : kSamples) {
            const std::string name = fmt("U,V(%g, %g) integer a", a, x);
            guarded(out, name, [&] {
                const UVPair cf = uv_integer_a(a, x);
                const double u = dispatch(Function::U, a, x).value;
                const double v = dispatch(Function::V, a, x).value;
                out.push_back(compare(fmt("U(%g, %g) integer a", a, x), u, cf.u, closed_form_tolerance(cf.u)));
                out.push_back(compare(fmt("V(%g, %g) integer a", a, x), v, cf.v, closed_form_tolerance(cf.v)));
            });
        }
    }
    for (double x : kSamples) {
        const std::string name = fmt("W(0, +-%g) Bessel J%.0s", x, 0.0);
        guarded(out, name, [&] {
            const WZeroA cf = w_zero_a(x);
            push_pair(out, fmt("W(0, %g) Bessel J%.0s", x, 0.0), dispatch(Function::W, 0.0, x), cf.w_pos,
                      cf.dw_pos);
            push_pair(out, fmt("W(0, %g) Bessel J%.0s", -x, 0.0), dispatch(Function::W, 0.0, -x), cf.w_neg,
                      cf.dw_neg);
        });
    }
    return out;
}

std::vector<Check> check_oracle(const std::vector<OracleEntry>& entries) {
    std::vector<Check> out;
    out.reserve(entries.size());
    for (const OracleEntry& e : entries) {
        const std::string name = e.function + fmt("(%g, %g) oracle", e.a, e.x);
        const double ref_tol = e.value == 0.0 ? 1e-15 : kOracleRel * std::fabs(e.value);
        guarded(out, name, [&] {
            double computed = 0.0;
            double tol = ref_tol;
            if (e.function == "U" || e.function == "V" || e.function == "W") {
                const Function f = e.function == "U" ? Function::U : e.function == "V" ? Function::V : Function::W;
                const EvalResult r = dispatch(f, e.a, e.x);
                computed = r.value;
                if (std::fabs(e.x) > kModerateBound) tol += r.accuracy_estimate;
            } else if (e.function == "y1p" || e.function == "y1m") {
                computed = sum_y12(e.a, e.x, e.function == "y1p" ? SeriesSign::Plus : SeriesSign::Minus).y1;
            } else if (e.function == "gamma_mod") {
                computed = gamma_modulus({e.a, e.x});
            } else if (e.function == "gamma_arg") {
                computed = gamma_arg({e.a, e.x});
            } else if (e.function == "erfc") {
                computed = erfc_real(e.x);
            } else if (e.function == "besselJ" || e.function == "besselI") {
                computed = bessel_series(e.function == "besselJ" ? BesselKind::J : BesselKind::I, e.a, e.x);
            } else {
                throw std::runtime_error("unknown oracle function '" + e.function + "'");
            }
            out.push_back(compare(name, computed, e.value, tol));
        });
    }
    return out;
}

SelftestReport run_selftest(const std::vector<ReferenceFixture>& fixtures, const std::vector<OracleEntry>& oracle) {
    const auto start = std::chrono::steady_clock::now();
    SelftestReport report;

    std::map<int, TableSummary> tables;
    for (const ReferenceFixture& f : fixtures) {
        Check c = check_fixture(f);
        TableSummary& t = tables[f.table];
        t.table = f.table;
        ++t.cells;
        if (!c.passed) ++t.failures;
        if (c.error.empty()) {
            const double err = std::fabs(c.computed - c.expected);
            const double rel = f.expected == 0.0 ? err : err / std::fabs(f.expected);
            t.max_rel_error = std::max(t.max_rel_error, rel);
            t.max_tolerance_ratio = std::max(t.max_tolerance_ratio, err / c.tolerance);
        } else {
            t.max_tolerance_ratio = INFINITY;
        }
        report.fixture_checks.push_back(std::move(c));
    }
    for (auto& [n, t] : tables) report.tables.push_back(t);

    report.closed_form_checks = closed_form_suite();
    report.oracle_checks = check_oracle(oracle);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string format_report(const SelftestReport& report) {
    std::ostringstream os;
    char line[256];
    for (const TableSummary& t : report.tables) {
        std::snprintf(line, sizeof line, "table %d: %2d cells, %2d failed, max rel err %.3e, max err/tol %.3g\n",
                      t.table, t.cells, t.failures, t.max_rel_error, t.max_tolerance_ratio);
        os << line;
    }
    auto summarize = [&](const char* label, const std::vector<Check>& checks) {
        const auto failed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; });
        std::snprintf(line, sizeof line, "%s: %zu checks, %td failed\n", label, checks.size(), failed);
        os << line;
        for (const Check& c : checks) {
            if (c.passed) continue;
            if (!c.error.empty()) {
                os << "  FAIL " << c.name << ": " << c.error << '\n';
                continue;
            }
            std::snprintf(line, sizeof line, "  FAIL %s: computed %.16g expected %.16g diff %.3e tol %.3e\n",
                          c.name.c_str(), c.computed, c.expected, std::fabs(c.computed - c.expected), c.tolerance);
            os << line;
        }
    };
    summarize("paper fixtures", report.fixture_checks);
    summarize("closed forms", report.closed_form_checks);
    if (!report.oracle_checks.empty()) summarize("oracle", report.oracle_checks);
    std::snprintf(line, sizeof line, "%s (%d failed, %.3f s)\n", report.passed() ? "PASS" : "FAIL",
                  report.failures(), report.seconds);
    os << line;
    return os.str();
}

}  // namespace pcf
