#include "pcf/cgamma.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "detail/gamma_kernel.hpp"
#include "pcf/errors.hpp"

namespace pcf {

const std::array<Rational, 10>& bernoulli_table() {
    static const std::array<Rational, 10> table{{
        {1, 6},
        {-1, 30},
        {1, 42},
        {-1, 30},
        {5, 66},
        {-691, 2730},
        {7, 6},
        {-3617, 510},
        {43867, 798},
        {-174611, 330},
    }};
    return table;
}

namespace {

void require_finite(ComplexValue z, const char* what) {
    if (!std::isfinite(z.re) || !std::isfinite(z.im)) {
        throw DomainError(std::string(what) + ": non-finite argument");
    }
}

// The public entry points run the 113-bit kernel and round once.
detail::Complex<detail::quad> log_gamma_q(ComplexValue z, const char* what) {
    require_finite(z, what);
    return detail::log_gamma<detail::quad>({z.re, z.im});
}

ComplexValue log_gamma_checked(ComplexValue z, const char* what) {
    const auto r = log_gamma_q(z, what);
    return {static_cast<double>(r.re), static_cast<double>(r.im)};
}

}  // namespace

ComplexValue log_gamma(ComplexValue z) { return log_gamma_checked(z, "log_gamma"); }

ComplexValue gamma(ComplexValue z) {
    require_finite(z, "gamma");
    if (detail::near_pole(z.re, z.im)) detail::throw_pole(z.re);
    if (z.im == 0.0) {
        const double value = 1.0 / recip_gamma_real(z.re);
        if (!std::isfinite(value)) {
            std::ostringstream os;
            os.precision(17);
            os << "gamma: overflow at z = " << z.re << ", log|Gamma(z)| = "
               << detail::log_gamma_positive<double>(z.re < 0.5 ? 1.0 - z.re : z.re);
            throw RangeError(os.str());
        }
        return {value, 0.0};
    }
    const auto lg = log_gamma_q(z, "gamma");
    if (lg.re > std::log(std::numeric_limits<double>::max())) {
        std::ostringstream os;
        os.precision(17);
        os << "gamma: overflow, log Gamma(z) = (" << static_cast<double>(lg.re) << ", "
           << static_cast<double>(lg.im) << ")";
        throw RangeError(os.str());
    }
    const detail::quad modulus = detail::exp(lg.re);
    return {static_cast<double>(modulus * detail::cos(lg.im)), static_cast<double>(modulus * detail::sin(lg.im))};
}

double gamma_modulus(ComplexValue z) {
    const auto lg = log_gamma_q(z, "gamma_modulus");
    const double modulus = static_cast<double>(detail::exp(lg.re));
    if (!std::isfinite(modulus)) {
        std::ostringstream os;
        os.precision(17);
        os << "gamma_modulus: overflow, log|Gamma(z)| = " << static_cast<double>(lg.re);
        throw RangeError(os.str());
    }
    return modulus;
}

double gamma_arg(ComplexValue z) { return log_gamma_checked(z, "gamma_arg").im; }

double recip_gamma_real(double x) {
    if (std::isnan(x)) return x;
    if (x == std::numeric_limits<double>::infinity()) return 0.0;
    return static_cast<double>(detail::recip_gamma<detail::quad>(x));
}

}  // namespace pcf
