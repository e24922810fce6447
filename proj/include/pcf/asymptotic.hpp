#pragma once

// Large-argument expansions (x >> |a|) of U, V and W.
//
// All brackets are divergent asymptotic series. They are summed with
// optimal truncation: terms are added while they keep decreasing in
// magnitude, the smallest term is left out and reported as the error bound,
// and at most kAsymptoticMaxTerms terms are used. When a factor of the
// rising product vanishes (U at a = -1/2 - n, V at a = 1/2 + n) the bracket
// is a finite polynomial in 1/x^2 and is summed exactly.

#include "pcf/types.hpp"

namespace pcf {

inline constexpr int kAsymptoticMaxTerms = 20;

struct AsymptoticTerms {
    double s1 = 0.0;
    double s2 = 0.0;
    double ds1 = 0.0;
    double ds2 = 0.0;
    int terms_used = 0;
    double first_omitted = 0.0;
};

struct WAsymptoticContext {
    double k = 0.0;
    double k_inv = 0.0;
    /// x^2/4 - a ln x + pi/4 + phi/2, reduced into (-pi, pi].
    double gamma_phase = 0.0;
    /// arg Gamma(1/2 + ia), continuous branch.
    double phi = 0.0;
};

/// U(a, x) for x > 0. Throws DomainError for x <= 0 and RegimeError when
/// the bracket does not decrease from its first term.
EvalResult pulx(double a, double x);
double dpulx(double a, double x);

/// V(a, x) for x > 0; same errors as pulx, plus RangeError on overflow.
EvalResult pvlx(double a, double x);
double dpvlx(double a, double x);

/// (u_m, v_m) with u_m + i v_m = Gamma(m + 1/2 + ia) / Gamma(1/2 + ia),
/// computed as the product (1/2 + ia)(3/2 + ia)...(m - 1/2 + ia).
/// m must be a positive even integer.
ComplexValue um_vm(double a, int m);

/// k, 1/k, phase and phi for the W expansion; x > 0.
WAsymptoticContext w_context(double a, double x);

/// s1, s2 and their x-derivatives at x > 0.
AsymptoticTerms w_asymptotic_terms(double a, double x);

/// W(a, x) for |x| large; negative x uses the companion formula for
/// W(a, -|x|).
EvalResult pwlx(double a, double x);
double dpwlx(double a, double x);

}  // namespace pcf
