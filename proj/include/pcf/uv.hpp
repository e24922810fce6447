#pragma once

// U(a, x) and V(a, x), the standard solutions of y'' = (x^2/4 + a) y, in
// the moderate-argument regime.
//
// Both are assembled from the even/odd series as
//     U = U(a,0) y1 + U'(a,0) y2,    V = V(a,0) y1 + V'(a,0) y2.
// This is the Y1 cos(beta) - Y2 sin(beta) form with each Gamma * trig
// product folded through the reflection formula, so only 1/Gamma (an
// entire function) appears and the half-odd parameter lines where
// Gamma(1/4 - a/2) or Gamma(3/4 - a/2) blow up need no special casing.

#include "pcf/types.hpp"

namespace pcf {

struct UVAnchors {
    double u0 = 0.0;   ///< U(a, 0)
    double du0 = 0.0;  ///< U'(a, 0)
    double v0 = 0.0;   ///< V(a, 0)
    double dv0 = 0.0;  ///< V'(a, 0)
};

UVAnchors uv_at_zero(double a);

/// Throws RangeError for |a| > 25 and RegimeError for |x| > 24.
EvalResult pu(double a, double x);
double dpu(double a, double x);
EvalResult pv(double a, double x);
double dpv(double a, double x);

}  // namespace pcf
