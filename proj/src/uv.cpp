#include "pcf/uv.hpp"

#include <cmath>
#include <sstream>

#include "detail/combine.hpp"
#include "detail/gamma_kernel.hpp"
#include "detail/series_kernel.hpp"
#include "detail/uv_anchors.hpp"
#include "pcf/errors.hpp"

namespace pcf {

namespace detail {

void check_series_domain(const char* what, double a, double x) {
    if (!std::isfinite(a) || !std::isfinite(x)) {
        throw DomainError(std::string(what) + ": non-finite input");
    }
    if (std::fabs(a) > kMaxAbsA) {
        std::ostringstream os;
        os << what << ": |a| = " << std::fabs(a) << " exceeds the supported range " << kMaxAbsA;
        throw RangeError(os.str());
    }
    if (std::fabs(x) > kSeriesMaxAbsX) {
        std::ostringstream os;
        os << what << ": |x| = " << std::fabs(x) << " is beyond the series regime (|x| <= "
           << kSeriesMaxAbsX << ")";
        throw RegimeError(os.str());
    }
}

AnchorsQ uv_anchors(quad a) {
    using C = Constants<quad>;
    const quad h = a / 2;
    // U(a,0)  = sqrt(pi) 2^{-(a/2+1/4)} / Gamma(a/2 + 3/4)
    // U'(a,0) = -sqrt(pi) 2^{-(a/2-1/4)} / Gamma(a/2 + 1/4)
    // V(a,0)  = 2^{a/2+1/4} sin(pi(3/4 - a/2)) / Gamma(3/4 - a/2)
    // V'(a,0) = 2^{a/2+3/4} sin(pi(1/4 - a/2)) / Gamma(1/4 - a/2)
    auto pow2 = [](quad e) { return exp(e * C::ln2); };
    AnchorsQ r;
    r.u0 = C::sqrt_pi * pow2(-(h + 0.25Q)) * recip_gamma(h + 0.75Q);
    r.du0 = -C::sqrt_pi * pow2(-(h - 0.25Q)) * recip_gamma(h + 0.25Q);
    r.v0 = pow2(h + 0.25Q) * sinpi(0.75Q - h) * recip_gamma(0.75Q - h);
    r.dv0 = pow2(h + 0.75Q) * sinpi(0.25Q - h) * recip_gamma(0.25Q - h);
    return r;
}

EvalResult eval_u_series(double a, double x) {
    check_series_domain("pu", a, x);
    const AnchorsQ c = uv_anchors(a);
    return combine(c.u0, c.du0, sum_series<quad>(a, x, SeriesSign::Plus));
}

EvalResult eval_v_series(double a, double x) {
    check_series_domain("pv", a, x);
    const AnchorsQ c = uv_anchors(a);
    return combine(c.v0, c.dv0, sum_series<quad>(a, x, SeriesSign::Plus));
}

}  // namespace detail

UVAnchors uv_at_zero(double a) {
    if (!std::isfinite(a)) throw DomainError("uv_at_zero: non-finite a");
    const detail::AnchorsQ c = detail::uv_anchors(a);
    return {static_cast<double>(c.u0), static_cast<double>(c.du0), static_cast<double>(c.v0),
            static_cast<double>(c.dv0)};
}

EvalResult pu(double a, double x) { return detail::eval_u_series(a, x); }
double dpu(double a, double x) { return detail::eval_u_series(a, x).derivative; }
EvalResult pv(double a, double x) { return detail::eval_v_series(a, x); }
double dpv(double a, double x) { return detail::eval_v_series(a, x).derivative; }

}  // namespace pcf
