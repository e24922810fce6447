#pragma once

// W(a, x), the standard real solution of y'' = (a - x^2/4) y, in the
// moderate-argument regime:
//     W(a, x) = 2^{-3/4} sqrt(G1/G3) y1(x) - 2^{-1/4} sqrt(G3/G1) y2(x)
// with G1 = |Gamma(1/4 + ia/2)|, G3 = |Gamma(3/4 + ia/2)| and y1, y2 the
// Minus-sign series. Negative x is handled by the parity of y1 and y2.

#include "pcf/types.hpp"

namespace pcf {

struct WPrefactors {
    double g1 = 0.0;          ///< |Gamma(1/4 + ia/2)|
    double g3 = 0.0;          ///< |Gamma(3/4 + ia/2)|
    double ratio_sqrt = 0.0;  ///< sqrt(g1/g3), formed in log space
};

/// Throws RangeError for |a| > 25.
WPrefactors w_at_zero(double a);

/// Throws RangeError for |a| > 25 and RegimeError for |x| > 24.
EvalResult pw(double a, double x);
double dpw(double a, double x);

}  // namespace pcf
