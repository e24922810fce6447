#include "pcf/w.hpp"

#include <cmath>
#include <sstream>

#include "detail/combine.hpp"
#include "detail/gamma_kernel.hpp"
#include "detail/series_kernel.hpp"
#include "detail/uv_anchors.hpp"
#include "detail/w_prefactor.hpp"
#include "pcf/errors.hpp"

namespace pcf {

namespace detail {

namespace {

void check_a(const char* what, double a) {
    if (!std::isfinite(a)) throw DomainError(std::string(what) + ": non-finite a");
    if (std::fabs(a) > kMaxAbsA) {
        std::ostringstream os;
        os << what << ": |a| = " << std::fabs(a) << " exceeds the supported range " << kMaxAbsA;
        throw RangeError(os.str());
    }
}

}  // namespace

quad w_log_ratio(quad a) {
    // log(G1/G3) = Re log Gamma(1/4 + ia/2) - Re log Gamma(3/4 + ia/2)
    const quad lg1 = log_gamma<quad>({0.25Q, a / 2}).re;
    const quad lg3 = log_gamma<quad>({0.75Q, a / 2}).re;
    return lg1 - lg3;
}

EvalResult eval_w_series(double a, double x) {
    check_series_domain("pw", a, x);
    const quad r = exp(w_log_ratio(a) / 2);  // sqrt(G1/G3)
    const quad two_m34 = exp(-0.75Q * Constants<quad>::ln2);
    const quad two_m14 = exp(-0.25Q * Constants<quad>::ln2);
    return combine(two_m34 * r, -two_m14 / r, sum_series<quad>(a, x, SeriesSign::Minus));
}

}  // namespace detail

WPrefactors w_at_zero(double a) {
    detail::check_a("w_at_zero", a);
    const double g1 = gamma_modulus({0.25, a / 2});
    const double g3 = gamma_modulus({0.75, a / 2});
    const double ratio_sqrt = static_cast<double>(detail::exp(detail::w_log_ratio(a) / 2));
    return {g1, g3, ratio_sqrt};
}

EvalResult pw(double a, double x) { return detail::eval_w_series(a, x); }
double dpw(double a, double x) { return detail::eval_w_series(a, x).derivative; }

}  // namespace pcf
