#include "pcf/asymptotic.hpp"

#include <cmath>
#include <sstream>

#include "detail/extended.hpp"
#include "detail/gamma_kernel.hpp"
#include "pcf/errors.hpp"

namespace pcf {

namespace {

using detail::quad;

void check_inputs(const char* what, double a, double x) {
    if (!std::isfinite(a) || !std::isfinite(x)) {
        throw DomainError(std::string(what) + ": non-finite input");
    }
    if (std::fabs(a) > kMaxAbsA) {
        std::ostringstream os;
        os << what << ": |a| = " << std::fabs(a) << " exceeds the supported range " << kMaxAbsA;
        throw RangeError(os.str());
    }
}

void check_positive_x(const char* what, double x) {
    if (!(x > 0.0)) {
        std::ostringstream os;
        os << what << ": x must be positive (got " << x << ")";
        throw DomainError(os.str());
    }
}

[[noreturn]] void throw_not_asymptotic(const char* what, double a, double x) {
    std::ostringstream os;
    os << what << ": x = " << x << " is too small for the large-argument expansion at a = " << a;
    throw RegimeError(os.str());
}

struct Bracket {
    double s = 0.0;
    double ds = 0.0;  // d/dx
    int terms = 0;
    double first_omitted = 0.0;
};

/// sqrt(pi) Gamma(n/2 + 1) / Gamma(n/2 + 1/2), about sqrt(pi n / 2). When
/// all terms share a sign the remainder is bounded by this multiple of the
/// first neglected term rather than by the term itself.
double same_sign_factor(int n) {
    return std::exp(0.5 * std::log(detail::Constants<double>::pi) + std::lgamma(n / 2.0 + 1.0) -
                    std::lgamma(n / 2.0 + 0.5));
}

/// Sum of c_k with c_0 = 1 and
///     c_{k+1} = c_k * sign * (p + 2k)(p + 1 + 2k) / (2 (k+1) x^2).
/// U uses p = a + 1/2, sign = -1; V uses p = 1/2 - a, sign = +1.
/// first_omitted is returned already scaled into an error bound.
Bracket sum_bracket(const char* what, double a, double p, double sign, double x) {
    auto ratio = [&](int k) {
        return sign * (p + 2.0 * k) * (p + 1.0 + 2.0 * k) / (2.0 * (k + 1) * x * x);
    };
    Bracket b;
    double term = 1.0;

    const bool terminates = p <= 0.0 && p == std::floor(p) && -p < 4.0 * kAsymptoticMaxTerms;
    if (terminates) {
        for (int k = 0; term != 0.0; ++k) {
            b.s += term;
            b.ds += term * (-2.0 * k / x);
            b.terms = k + 1;
            term *= ratio(k);
        }
        return b;
    }

    for (int k = 0;; ++k) {
        const double next = term * ratio(k);
        if (std::fabs(next) >= std::fabs(term)) {
            if (k == 0) throw_not_asymptotic(what, a, x);
            b.first_omitted = std::fabs(term);
            break;
        }
        b.s += term;
        b.ds += term * (-2.0 * k / x);
        b.terms = k + 1;
        if (b.terms == kAsymptoticMaxTerms) {
            b.first_omitted = std::fabs(next);
            break;
        }
        term = next;
    }
    if (sign > 0.0) b.first_omitted *= same_sign_factor(b.terms);
    return b;
}

/// value = P(x) * S(x) with P = exp(log_p); dlog_p = P'/P.
EvalResult assemble(quad log_p, double dlog_p, const Bracket& b, const char* what) {
    const double prefactor = static_cast<double>(detail::exp(log_p));
    if (!std::isfinite(prefactor)) {
        std::ostringstream os;
        os << what << ": result overflows double precision (log of prefactor "
           << static_cast<double>(log_p) << ")";
        throw RangeError(os.str());
    }
    const double value = prefactor * b.s;
    const double derivative = prefactor * (b.s * dlog_p + b.ds);
    const double estimate = prefactor * b.first_omitted +
                            8.0 * detail::Constants<double>::epsilon * std::fabs(value);
    return {value, derivative, estimate, Regime::LargeArgAsymptotic};
}

EvalResult eval_u(double a, double x) {
    check_inputs("pulx", a, x);
    check_positive_x("pulx", x);
    const Bracket b = sum_bracket("pulx", a, a + 0.5, -1.0, x);
    // x^{-a-1/2} e^{-x^2/4}
    const quad xq = x;
    const quad log_p = -(quad(a) + 0.5Q) * detail::log(xq) - xq * xq / 4;
    return assemble(log_p, -(a + 0.5) / x - x / 2, b, "pulx");
}

EvalResult eval_v(double a, double x) {
    check_inputs("pvlx", a, x);
    check_positive_x("pvlx", x);
    const Bracket b = sum_bracket("pvlx", a, 0.5 - a, 1.0, x);
    // sqrt(2/pi) x^{a-1/2} e^{x^2/4}
    const quad xq = x;
    const quad log_p = 0.5Q * detail::log(2 / detail::Constants<quad>::pi) +
                       (quad(a) - 0.5Q) * detail::log(xq) + xq * xq / 4;
    return assemble(log_p, (a - 0.5) / x + x / 2, b, "pvlx");
}

/// (-i)^r z
ComplexValue rotate(ComplexValue z, int r) {
    switch (r % 4) {
        case 0: return z;
        case 1: return {z.im, -z.re};
        case 2: return {-z.re, -z.im};
        default: return {-z.im, z.re};
    }
}

ComplexValue mul(ComplexValue p, ComplexValue q) {
    return {p.re * q.re - p.im * q.im, p.re * q.im + p.im * q.re};
}

WAsymptoticContext make_context(double a, double x) {
    using C = detail::Constants<quad>;
    WAsymptoticContext c;
    // With t = e^{-pi |a|} <= 1 both k and 1/k are free of cancellation and
    // of overflow:
    //   a >= 0: k = t / (sqrt(1 + t^2) + 1),  1/k = (sqrt(1 + t^2) + 1) / t
    //   a <  0: k = sqrt(1 + t^2) - t,        1/k = sqrt(1 + t^2) + t
    const double t = std::exp(-detail::Constants<double>::pi * std::fabs(a));
    const double root = std::sqrt(1.0 + t * t);
    if (a >= 0.0) {
        c.k = t / (root + 1.0);
        c.k_inv = (root + 1.0) / t;
    } else {
        c.k = root - t;
        c.k_inv = root + t;
    }
    const quad phi = detail::log_gamma<quad>({0.5Q, quad(a)}).im;
    c.phi = static_cast<double>(phi);
    const quad xq = x;
    const quad phase = xq * xq / 4 - quad(a) * detail::log(xq) + C::pi / 4 + phi / 2;
    c.gamma_phase = static_cast<double>(detail::reduce_phase(phase));
    return c;
}

AsymptoticTerms sum_w_terms(double a, double x) {
    AsymptoticTerms t;
    const double two_x2 = 2.0 * x * x;
    // c_r = (-i)^r P_r / (r! (2x^2)^r), P_r = prod_{j<2r} (1/2 + j + ia).
    // Real parts give s1, imaginary parts s2.
    ComplexValue product{1.0, 0.0};
    double scale = 1.0;  // 1 / (r! (2x^2)^r)
    ComplexValue term{1.0, 0.0};
    double re_sum = 0.0, im_sum = 0.0, dre_sum = 0.0, dim_sum = 0.0;
    for (int r = 0;; ++r) {
        const ComplexValue f1{0.5 + 2.0 * r, a};
        const ComplexValue f2{1.5 + 2.0 * r, a};
        const ComplexValue next_product = mul(mul(product, f1), f2);
        const double next_scale = scale / ((r + 1) * two_x2);
        const ComplexValue next = rotate({next_product.re * next_scale, next_product.im * next_scale}, r + 1);
        const double mag = std::hypot(term.re, term.im);
        const double next_mag = std::hypot(next.re, next.im);
        if (next_mag >= mag) {
            if (r == 0) throw_not_asymptotic("pwlx", a, x);
            t.first_omitted = mag;
            break;
        }
        re_sum += term.re;
        im_sum += term.im;
        dre_sum += term.re * (-2.0 * r / x);
        dim_sum += term.im * (-2.0 * r / x);
        t.terms_used = r + 1;
        if (t.terms_used == kAsymptoticMaxTerms) {
            t.first_omitted = next_mag;
            break;
        }
        product = next_product;
        scale = next_scale;
        term = next;
    }
    t.s1 = re_sum;
    t.s2 = im_sum;
    t.ds1 = dre_sum;
    t.ds2 = dim_sum;
    return t;
}

EvalResult eval_w(double a, double x_signed) {
    check_inputs("pwlx", a, x_signed);
    if (x_signed == 0.0) throw DomainError("pwlx: x must be nonzero");
    const double x = std::fabs(x_signed);
    const WAsymptoticContext c = make_context(a, x);
    const AsymptoticTerms s = sum_w_terms(a, x);
    const double cg = std::cos(c.gamma_phase);
    const double sg = std::sin(c.gamma_phase);
    const double dphase = x / 2.0 - a / x;

    double amplitude, bracket, dbracket;
    if (x_signed > 0.0) {
        // sqrt(2k/x) [s1 cos g - s2 sin g]
        amplitude = std::sqrt(2.0 * c.k / x);
        bracket = s.s1 * cg - s.s2 * sg;
        dbracket = s.ds1 * cg - s.ds2 * sg - dphase * (s.s1 * sg + s.s2 * cg);
    } else {
        // sqrt(2/(kx)) [s1 sin g + s2 cos g]
        amplitude = std::sqrt(2.0 * c.k_inv / x);
        bracket = s.s1 * sg + s.s2 * cg;
        dbracket = s.ds1 * sg + s.ds2 * cg + dphase * (s.s1 * cg - s.s2 * sg);
    }
    const double value = amplitude * bracket;
    // d/dx of amplitude * bracket at |x|; the chain rule flips the sign for
    // the negative branch.
    double derivative = amplitude * (dbracket - bracket / (2.0 * x));
    if (x_signed < 0.0) derivative = -derivative;
    const double estimate = amplitude * s.first_omitted +
                            8.0 * detail::Constants<double>::epsilon * amplitude *
                                (std::fabs(s.s1) + std::fabs(s.s2));
    return {value, derivative, estimate, Regime::LargeArgAsymptotic};
}

}  // namespace

EvalResult pulx(double a, double x) { return eval_u(a, x); }
double dpulx(double a, double x) { return eval_u(a, x).derivative; }
EvalResult pvlx(double a, double x) { return eval_v(a, x); }
double dpvlx(double a, double x) { return eval_v(a, x).derivative; }

ComplexValue um_vm(double a, int m) {
    if (m <= 0 || m % 2 != 0) {
        throw DomainError("um_vm: m must be a positive even integer (got " + std::to_string(m) + ")");
    }
    if (!std::isfinite(a)) throw DomainError("um_vm: non-finite a");
    ComplexValue p{1.0, 0.0};
    for (int j = 0; j < m; ++j) p = mul(p, {0.5 + j, a});
    return p;
}

WAsymptoticContext w_context(double a, double x) {
    check_inputs("w_context", a, x);
    check_positive_x("w_context", x);
    return make_context(a, x);
}

AsymptoticTerms w_asymptotic_terms(double a, double x) {
    check_inputs("w_asymptotic_terms", a, x);
    check_positive_x("w_asymptotic_terms", x);
    return sum_w_terms(a, x);
}

EvalResult pwlx(double a, double x) { return eval_w(a, x); }
double dpwlx(double a, double x) { return eval_w(a, x).derivative; }

}  // namespace pcf
