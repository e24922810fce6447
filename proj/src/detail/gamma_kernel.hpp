#pragma once

#include <sstream>
#include <string>

#include "detail/extended.hpp"
#include "pcf/cgamma.hpp"
#include "pcf/errors.hpp"

namespace pcf::detail {

inline constexpr double kPoleTolerance = 1e-12;

/// Minimum |z| at which the truncated Stirling series is used. Ten
/// Bernoulli terms leave a tail of about 13.4/|z|^21: below 1e-20 at 10
/// and below 1e-33 at 40.
template <class Real>
struct StirlingThreshold;
template <>
struct StirlingThreshold<double> {
    static constexpr double value = 10.0;
};
template <>
struct StirlingThreshold<quad> {
    static constexpr quad value = 40.0;
};

inline bool near_pole(double re, double im) {
    if (im != 0.0 || re > kPoleTolerance) return false;
    return std::fabs(re - std::nearbyint(re)) <= kPoleTolerance;
}

[[noreturn]] inline void throw_pole(double re) {
    std::ostringstream os;
    os.precision(17);
    os << "gamma: pole at z = " << std::nearbyint(re) << " (input " << re << ")";
    throw DomainError(os.str());
}

/// B_{2n} / (2n (2n-1)) for n = 1..10.
template <class Real>
Real stirling_coefficient(int n) {
    const Rational& b = bernoulli_table()[static_cast<std::size_t>(n - 1)];
    const std::int64_t scale = static_cast<std::int64_t>(2 * n) * (2 * n - 1);
    return Real(b.num) / (Real(b.den) * Real(scale));
}

/// Stirling's series for real w >= threshold.
template <class Real>
Real log_gamma_stirling(Real w) {
    const Real inv = 1 / w;
    const Real inv2 = inv * inv;
    Real s = stirling_coefficient<Real>(10);
    for (int n = 9; n >= 1; --n) s = s * inv2 + stirling_coefficient<Real>(n);
    s *= inv;
    return (w - Real(0.5)) * log(w) - w + Constants<Real>::half_ln_2pi + s;
}

/// Stirling's series for complex w with |w| >= threshold and Re w >= 0.
template <class Real>
Complex<Real> log_gamma_stirling(const Complex<Real>& w) {
    const Complex<Real> one{1, 0};
    const Complex<Real> inv = one / w;
    const Complex<Real> inv2 = inv * inv;
    Complex<Real> s{stirling_coefficient<Real>(10), 0};
    for (int n = 9; n >= 1; --n) s = s * inv2 + Complex<Real>{stirling_coefficient<Real>(n), 0};
    s = s * inv;
    const Complex<Real> half{Real(0.5), 0};
    return (w - half) * log(w) - w + Complex<Real>{Constants<Real>::half_ln_2pi, 0} + s;
}

/// log Gamma(x) for real x > 0.
template <class Real>
Real log_gamma_positive(Real x) {
    constexpr Real threshold = StirlingThreshold<Real>::value;
    if (x >= threshold) return log_gamma_stirling(x);
    Real product = 1;
    while (x < threshold) {
        product *= x;
        x += 1;
    }
    return log_gamma_stirling(x) - log(product);
}

/// log Gamma(z) on the principal branch (see pcf/cgamma.hpp).
template <class Real>
Complex<Real> log_gamma(Complex<Real> z) {
    if (near_pole(static_cast<double>(z.re), static_cast<double>(z.im))) {
        throw_pole(static_cast<double>(z.re));
    }
    if (z.im == 0 && z.re > 0) return {log_gamma_positive(z.re), 0};

    if (z.re < -1e4) throw RangeError("log_gamma: Re z below -1e4 is not supported");
    constexpr Real threshold = StirlingThreshold<Real>::value;
    Complex<Real> shift{0, 0};
    while (z.re < 0 || abs(z) < threshold) {
        shift += log(z);
        z.re += 1;
    }
    return log_gamma_stirling(z) - shift;
}

/// 1/Gamma(x) for real x; zero within the pole tolerance.
template <class Real>
Real recip_gamma(Real x) {
    if (x <= kPoleTolerance && fabs(x - nearbyint(x)) <= Real(kPoleTolerance)) return 0;
    if (x < Real(0.5)) {
        // 1/Gamma(x) = Gamma(1 - x) sin(pi x) / pi
        return exp(log_gamma_positive(1 - x)) * sinpi(x) / Constants<Real>::pi;
    }
    constexpr Real threshold = StirlingThreshold<Real>::value;
    Real product = 1;
    while (x < threshold) {
        product *= x;
        x += 1;
    }
    return product * exp(-log_gamma_stirling(x));
}

}  // namespace pcf::detail
