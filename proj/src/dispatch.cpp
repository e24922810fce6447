#include "pcf/dispatch.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "detail/gamma_kernel.hpp"
#include "detail/uv_anchors.hpp"
#include "detail/w_prefactor.hpp"
#include "pcf/asymptotic.hpp"
#include "pcf/cgamma.hpp"
#include "pcf/errors.hpp"
#include "pcf/series.hpp"

namespace pcf {

namespace {

constexpr double kPi = detail::Constants<double>::pi;

EvalResult series(Function f, double a, double x) {
    switch (f) {
        case Function::U: return detail::eval_u_series(a, x);
        case Function::V: return detail::eval_v_series(a, x);
        case Function::W: return detail::eval_w_series(a, x);
    }
    throw DomainError("dispatch: unknown function");
}

// Negative arguments of U and V follow from the connection formulas
//   U(a,-X) = pi/Gamma(1/2+a) V(a,X) - sin(pi a) U(a,X)
//   V(a,-X) = cos(pi a)/Gamma(1/2-a) U(a,X) + sin(pi a) V(a,X)
// written with 1/Gamma so the poles of Gamma(1/2 +/- a) need no care.
EvalResult asymptotic(Function f, double a, double x) {
    if (x == 0.0) throw RegimeError("dispatch: the large-argument expansion does not apply at x = 0");
    if (f == Function::W) return pwlx(a, x);
    const double ax = std::fabs(x);
    if (x > 0.0) return f == Function::U ? pulx(a, ax) : pvlx(a, ax);

    const EvalResult u = pulx(a, ax);
    const EvalResult v = pvlx(a, ax);
    const double s = detail::sinpi(a);
    EvalResult r;
    r.regime = Regime::LargeArgAsymptotic;
    if (f == Function::U) {
        const double c = kPi * recip_gamma_real(0.5 + a);
        r.value = c * v.value - s * u.value;
        r.derivative = -(c * v.derivative - s * u.derivative);
        r.accuracy_estimate = std::fabs(c) * v.accuracy_estimate + std::fabs(s) * u.accuracy_estimate;
    } else {
        const double c = detail::cospi(a) * recip_gamma_real(0.5 - a);
        r.value = c * u.value + s * v.value;
        r.derivative = -(c * u.derivative + s * v.derivative);
        r.accuracy_estimate = std::fabs(c) * u.accuracy_estimate + std::fabs(s) * v.accuracy_estimate;
    }
    r.accuracy_estimate += 4.0 * detail::Constants<double>::epsilon * std::fabs(r.value);
    return r;
}

}  // namespace

double asymptotic_bound(double a) { return std::max(8.0, 2.0 * std::fabs(a) + 6.0); }

EvalResult dispatch(Function f, double a, double x, std::optional<Regime> forced) {
    if (!std::isfinite(a) || !std::isfinite(x)) throw DomainError("dispatch: non-finite input");
    if (std::fabs(a) > kMaxAbsA) {
        std::ostringstream os;
        os << "dispatch: |a| = " << std::fabs(a) << " exceeds the supported range " << kMaxAbsA;
        throw RangeError(os.str());
    }
    if (forced) {
        switch (*forced) {
            case Regime::ModerateSeries: return series(f, a, x);
            case Regime::LargeArgAsymptotic: return asymptotic(f, a, x);
            case Regime::ClosedForm:
                throw RegimeError("dispatch: closed forms are not a dispatch target");
        }
    }

    const double ax = std::fabs(x);
    if (ax <= kModerateBound) return series(f, a, x);
    if (ax >= asymptotic_bound(a)) return asymptotic(f, a, x);

    // Crossover band: prefer the series, fall back to the expansion when the
    // series cannot be formed or is less accurate.
    std::optional<EvalResult> from_series;
    std::optional<EvalResult> from_expansion;
    try {
        from_series = series(f, a, x);
    } catch (const RegimeError&) {
    } catch (const ConvergenceError&) {
    }
    try {
        from_expansion = asymptotic(f, a, x);
    } catch (const RegimeError&) {
    }
    if (from_series && from_expansion) {
        return from_expansion->accuracy_estimate < from_series->accuracy_estimate ? *from_expansion
                                                                                  : *from_series;
    }
    if (from_series) return *from_series;
    if (from_expansion) return *from_expansion;
    std::ostringstream os;
    os << "dispatch: no evaluation method applies at a = " << a << ", x = " << x;
    throw RegimeError(os.str());
}

}  // namespace pcf
