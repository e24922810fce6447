#include "pcf/closed_forms.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "detail/extended.hpp"
#include "detail/gamma_kernel.hpp"
#include "pcf/errors.hpp"

namespace pcf {

namespace {

using detail::quad;

constexpr double kSqrtTwoOverPi = 0.79788456080286535588;
constexpr double kSqrtPiOverTwo = 1.25331413731550025121;
constexpr double kBesselMaxZ = 30.0;

std::string describe(const char* what, double a) {
    std::ostringstream os;
    os.precision(17);
    os << what << ": unsupported parameter a = " << a;
    return os.str();
}

/// Index n when 2a + 1 == +/-(2n + 1) for a half-odd a, otherwise -1.
int half_odd_index(double a, double sign) {
    const double n = sign * a - 0.5;
    if (n < 0.0 || n != std::floor(n)) return -1;
    return static_cast<int>(n);
}

/// Hermite-type polynomials p_n(x) and p_n'(x) of the half-odd forms:
/// s = -1 gives x^2 - 1, x^3 - 3x, ...; s = +1 gives x^2 + 1, x^3 + 3x, ...
ValueAndDerivative half_odd_poly(int n, double x, double s) {
    switch (n) {
        case 0: return {1.0, 0.0};
        case 1: return {x, 1.0};
        case 2: return {x * x + s, 2.0 * x};
        case 3: return {x * x * x + 3.0 * s * x, 3.0 * x * x + 3.0 * s};
        case 4: return {x * x * x * x + 6.0 * s * x * x + 3.0, 4.0 * x * x * x + 12.0 * s * x};
        default: return {0.0, 0.0};
    }
}

template <class Real>
Real bessel_ascending(bool modified, Real nu, Real z) {
    using detail::exp;
    using detail::fabs;
    using detail::log;
    const Real h = z / 2;
    const Real h2 = (modified ? 1 : -1) * h * h;
    Real term = exp(nu * log(h)) * detail::recip_gamma(nu + 1);
    Real sum = term;
    for (int k = 0; k < 500; ++k) {
        term *= h2 / ((k + 1) * (nu + k + 1));
        sum += term;
        if (fabs(term) <= Real(1e-34) * fabs(sum) && k > 2) break;
    }
    return sum;
}

quad bessel_q(BesselKind kind, double nu, double z) {
    if (!std::isfinite(nu) || !std::isfinite(z)) throw DomainError("bessel_series: non-finite input");
    if (!(z > 0.0)) throw DomainError("bessel_series: z must be positive");
    if (z > kBesselMaxZ) {
        std::ostringstream os;
        os << "bessel_series: z = " << z << " exceeds the ascending-series bound " << kBesselMaxZ;
        throw RangeError(os.str());
    }
    const bool integer_order = nu == std::floor(nu);
    const quad nq = nu, zq = z;
    switch (kind) {
        case BesselKind::J:
        case BesselKind::I:
            if (integer_order && nu < 0.0) {
                throw DomainError("bessel_series: negative integer order is not supported");
            }
            return bessel_ascending(kind == BesselKind::I, nq, zq);
        case BesselKind::K: {
            if (integer_order) throw DomainError("bessel_series: K needs a non-integer order");
            const quad diff = bessel_ascending(true, -nq, zq) - bessel_ascending(true, nq, zq);
            return detail::Constants<quad>::pi / 2 * diff / detail::sinpi(nq);
        }
        case BesselKind::GothicI: {
            const quad c = detail::cospi(nq);
            if (c == 0) throw DomainError("bessel_series: GothicI needs cos(pi nu) != 0");
            return (bessel_ascending(true, -nq, zq) + bessel_ascending(true, nq, zq)) / c;
        }
    }
    throw DomainError("bessel_series: unknown kind");
}

}  // namespace

double erfc_real(double x) {
    // Delegated to the C library; accurate to a few ulp over the full range
    // and satisfies erfc(-x) = 2 - erfc(x).
    return std::erfc(x);
}

ValueAndDerivative u_halfodd(double a, double x) {
    if (!std::isfinite(x)) throw DomainError("u_halfodd: non-finite x");
    const double gauss = std::exp(-x * x / 4.0);
    if (const int n = half_odd_index(a, -1.0); n >= 0 && n <= 4) {
        // U(-1/2 - n, x) = p_n(x) e^{-x^2/4}
        const ValueAndDerivative p = half_odd_poly(n, x, -1.0);
        return {p.value * gauss, (p.derivative - 0.5 * x * p.value) * gauss};
    }
    // U(1/2, x) = sqrt(pi/2) e^{x^2/4} erfc(x/sqrt 2)
    const double u05 = kSqrtPiOverTwo * std::exp(x * x / 4.0) * erfc_real(x / std::sqrt(2.0));
    if (a == 0.5) return {u05, 0.5 * x * u05 - gauss};
    if (a == 1.5) return {-x * u05 + gauss, -(0.5 * x * x + 1.0) * u05 + 0.5 * x * gauss};
    if (a == 2.5) {
        return {0.5 * (x * x + 1.0) * u05 - 0.5 * x * gauss,
                0.25 * x * (x * x + 5.0) * u05 - (0.25 * x * x + 1.0) * gauss};
    }
    throw DomainError(describe("u_halfodd", a));
}

ValueAndDerivative v_halfodd(double a, double x) {
    if (!std::isfinite(x)) throw DomainError("v_halfodd: non-finite x");
    const int n = half_odd_index(a, 1.0);
    if (n < 0 || n > 4) throw DomainError(describe("v_halfodd", a));
    // V(1/2 + n, x) = sqrt(2/pi) p_n(x) e^{x^2/4}
    const double g = kSqrtTwoOverPi * std::exp(x * x / 4.0);
    const ValueAndDerivative p = half_odd_poly(n, x, 1.0);
    return {p.value * g, (p.derivative + 0.5 * x * p.value) * g};
}

double bessel_series(BesselKind kind, double nu, double z) {
    return static_cast<double>(bessel_q(kind, nu, z));
}

UVPair uv_integer_a(int a, double x) {
    if (!std::isfinite(x) || !(x > 0.0)) throw DomainError("uv_integer_a: x must be positive");
    if (a < -2 || a > 2) throw DomainError(describe("uv_integer_a", a));
    const double z = x * x / 4.0;
    const quad h = quad(x) / 2;
    const quad k1 = bessel_q(BesselKind::K, 0.25, z);
    const quad k3 = bessel_q(BesselKind::K, 0.75, z);
    const quad k5 = bessel_q(BesselKind::K, 1.25, z);
    const quad g1 = bessel_q(BesselKind::GothicI, 0.25, z);
    const quad g3 = bessel_q(BesselKind::GothicI, 0.75, z);
    const quad g5 = bessel_q(BesselKind::GothicI, 1.25, z);
    const quad rsqrt_pi = 1 / detail::Constants<quad>::sqrt_pi;
    const quad p1 = detail::sqrt(h);
    const quad p3 = h * p1;
    const quad p5 = h * p3;
    quad u = 0, v = 0;
    switch (a) {
        case 0:
            u = rsqrt_pi * p1 * k1;
            v = p1 * g1 / 2;
            break;
        case 1:
            u = 2 * rsqrt_pi * p3 * (k3 - k1);
            v = p3 * (g1 - g3) / 2;
            break;
        case 2:
            u = 4 * rsqrt_pi * p5 * (2 * k1 - 3 * k3 + k5) / 3;
            v = p5 * (2 * g1 - 3 * g3 + g5) / 2;
            break;
        case -1:
            u = rsqrt_pi * p3 * (k1 + k3);
            v = p3 * (g1 + g3);
            break;
        case -2:
            u = rsqrt_pi * p5 * (2 * k1 + 3 * k3 - k5);
            v = 2 * p5 * (2 * g1 + 3 * g3 - g5) / 3;
            break;
    }
    return {static_cast<double>(u), static_cast<double>(v)};
}

WZeroA w_zero_a(double x) {
    if (!std::isfinite(x) || !(x > 0.0)) throw DomainError("w_zero_a: x must be positive");
    const double z = x * x / 4.0;
    const quad jm1 = bessel_q(BesselKind::J, -0.25, z);
    const quad jp1 = bessel_q(BesselKind::J, 0.25, z);
    const quad jm3 = bessel_q(BesselKind::J, -0.75, z);
    const quad jp3 = bessel_q(BesselKind::J, 0.75, z);
    const quad xq = x;
    const quad root = detail::sqrt(detail::Constants<quad>::pi * xq);
    const quad c5 = detail::exp(-1.25Q * detail::Constants<quad>::ln2) * root;
    const quad c9 = detail::exp(-2.25Q * detail::Constants<quad>::ln2) * xq * root;
    WZeroA w;
    w.w_pos = static_cast<double>(c5 * (jm1 - jp1));
    w.w_neg = static_cast<double>(c5 * (jm1 + jp1));
    w.dw_pos = static_cast<double>(-c9 * (jp3 + jm3));
    // d/dx [W(0, -x)] = -c9 (J_{3/4} - J_{-3/4}); W'(0, -x) is its negative.
    w.dw_neg = static_cast<double>(c9 * (jp3 - jm3));
    return w;
}

}  // namespace pcf
