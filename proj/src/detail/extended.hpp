#pragma once

// Scalar plumbing shared by the kernels. Every kernel is written once as a
// template over the working type and instantiated for `double` (public
// double-precision API) and `quad` (113-bit significand, used where the
// result is a difference of much larger terms).

#include <cmath>
#include <quadmath.h>

namespace pcf::detail {

using quad = __float128;

inline double exp(double x) { return std::exp(x); }
inline double log(double x) { return std::log(x); }
inline double sin(double x) { return std::sin(x); }
inline double cos(double x) { return std::cos(x); }
inline double sqrt(double x) { return std::sqrt(x); }
inline double fabs(double x) { return std::fabs(x); }
inline double floor(double x) { return std::floor(x); }
inline double fmod(double x, double y) { return std::fmod(x, y); }
inline double hypot(double x, double y) { return std::hypot(x, y); }
inline double atan2(double y, double x) { return std::atan2(y, x); }
inline double nearbyint(double x) { return std::nearbyint(x); }

inline quad exp(quad x) { return expq(x); }
inline quad log(quad x) { return logq(x); }
inline quad sin(quad x) { return sinq(x); }
inline quad cos(quad x) { return cosq(x); }
inline quad sqrt(quad x) { return sqrtq(x); }
inline quad fabs(quad x) { return fabsq(x); }
inline quad floor(quad x) { return floorq(x); }
inline quad fmod(quad x, quad y) { return fmodq(x, y); }
inline quad hypot(quad x, quad y) { return hypotq(x, y); }
inline quad atan2(quad y, quad x) { return atan2q(y, x); }
inline quad nearbyint(quad x) { return nearbyintq(x); }

inline bool isfinite(double x) { return std::isfinite(x); }
inline bool isfinite(quad x) { return finiteq(x) != 0; }

template <class Real>
struct Constants;

template <>
struct Constants<double> {
    static constexpr double pi = 3.14159265358979323846;
    static constexpr double ln2 = 0.69314718055994530942;
    static constexpr double half_ln_2pi = 0.91893853320467274178;
    static constexpr double sqrt_pi = 1.77245385090551602730;
    /// Unit roundoff.
    static constexpr double epsilon = 0x1p-53;
};

template <>
struct Constants<quad> {
    static constexpr quad pi = M_PIq;
    static constexpr quad ln2 = M_LN2q;
    static constexpr quad half_ln_2pi = 0.918938533204672741780329736405617639861Q;
    static constexpr quad sqrt_pi = 1.772453850905516027298167483341145182798Q;
    static constexpr quad epsilon = 0x1p-113Q;
};

template <class Real>
struct Complex {
    Real re = 0;
    Real im = 0;

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(Real s, const Complex& a) { return {s * a.re, s * a.im}; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        // Smith's algorithm
        if (fabs(b.re) >= fabs(b.im)) {
            const Real r = b.im / b.re;
            const Real d = b.re + b.im * r;
            return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
        }
        const Real r = b.re / b.im;
        const Real d = b.re * r + b.im;
        return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
    }
};

template <class Real>
Real abs(const Complex<Real>& z) { return hypot(z.re, z.im); }

/// Principal branch.
template <class Real>
Complex<Real> log(const Complex<Real>& z) { return {log(abs(z)), atan2(z.im, z.re)}; }

/// sin(pi x) with exact argument reduction; exactly zero at integers.
template <class Real>
Real sinpi(Real x) {
    Real r = fmod(x, Real(2));  // exact
    if (r < 0) r += 2;
    Real sign = 1;
    if (r >= 1) {
        r -= 1;
        sign = -1;
    }
    if (r == 0) return 0;
    if (r > Real(0.5)) r = 1 - r;
    return sign * sin(Constants<Real>::pi * r);
}

/// cos(pi x) with exact argument reduction; exactly zero at half-odd integers.
template <class Real>
Real cospi(Real x) {
    Real r = fabs(fmod(x, Real(2)));
    if (r > 1) r = 2 - r;
    if (r == Real(0.5)) return 0;
    if (r < Real(0.5)) return cos(Constants<Real>::pi * r);
    return -cos(Constants<Real>::pi * (1 - r));
}

/// Reduces a phase into (-pi, pi].
template <class Real>
Real reduce_phase(Real t) {
    constexpr Real two_pi = 2 * Constants<Real>::pi;
    Real r = fmod(t, two_pi);
    if (r > Constants<Real>::pi) r -= two_pi;
    if (r <= -Constants<Real>::pi) r += two_pi;
    return r;
}

}  // namespace pcf::detail
