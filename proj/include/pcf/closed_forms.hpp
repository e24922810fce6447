#pragma once

// Closed forms of U, V and W at special parameter values. They serve as
// independent oracles for the series and asymptotic paths.
//
// Table of what is available:
//   U at a = -1/2 - n (n = 0..4): Hermite polynomial times exp(-x^2/4)
//   U at a = 1/2, 3/2, 5/2:        complementary error function forms
//   V at a = 1/2 + n (n = 0..4):   polynomial times sqrt(2/pi) exp(x^2/4)
//   U, V at a = -2..2:             fractional-order modified Bessel forms
//   W at a = 0:                    Bessel J of order +-1/4, +-3/4
//
// The integer-a Bessel forms use argument z = x^2/4 with the powers of x/2
// reconstructed as (x/2)^{1/2}, (x/2)^{3/2}, (x/2)^{5/2} for |a| = 0, 1, 2:
//   U(0)  = pi^{-1/2} (x/2)^{1/2} K_{1/4}
//   U(1)  = 2 pi^{-1/2} (x/2)^{3/2} (-K_{1/4} + K_{3/4})
//   U(2)  = 4/3 pi^{-1/2} (x/2)^{5/2} (2K_{1/4} - 3K_{3/4} + K_{5/4})
//   U(-1) = pi^{-1/2} (x/2)^{3/2} (K_{1/4} + K_{3/4})
//   U(-2) = pi^{-1/2} (x/2)^{5/2} (2K_{1/4} + 3K_{3/4} - K_{5/4})
//   V(0)  = 1/2 (x/2)^{1/2} GI_{1/4}
//   V(1)  = 1/2 (x/2)^{3/2} (GI_{1/4} - GI_{3/4})
//   V(2)  = 1/2 (x/2)^{5/2} (2GI_{1/4} - 3GI_{3/4} + GI_{5/4})
//   V(-1) = (x/2)^{3/2} (GI_{1/4} + GI_{3/4})
//   V(-2) = 2/3 (x/2)^{5/2} (2GI_{1/4} + 3GI_{3/4} - GI_{5/4})
// where GI_nu = (I_{-nu} + I_nu) / cos(pi nu). These were checked against
// the series values at several x before being used as oracles.

namespace pcf {

enum class BesselKind { J, I, K, GothicI };

struct ValueAndDerivative {
    double value = 0.0;
    double derivative = 0.0;
};

double erfc_real(double x);

/// a in {-4.5, -3.5, -2.5, -1.5, -0.5, 0.5, 1.5, 2.5}.
ValueAndDerivative u_halfodd(double a, double x);

/// a in {0.5, 1.5, 2.5, 3.5, 4.5}.
ValueAndDerivative v_halfodd(double a, double x);

/// Ascending-series Bessel functions for 0 < z <= 30.
///   J, I:    nu not a negative integer
///   K:       nu not an integer;   K = pi/2 (I_{-nu} - I_nu) / sin(pi nu)
///   GothicI: nu not half-odd;     GI = (I_{-nu} + I_nu) / cos(pi nu)
double bessel_series(BesselKind kind, double nu, double z);

struct UVPair {
    double u = 0.0;
    double v = 0.0;
};

/// a in {-2, -1, 0, 1, 2}, x > 0.
UVPair uv_integer_a(int a, double x);

struct WZeroA {
    double w_pos = 0.0;   ///< W(0, x)
    double w_neg = 0.0;   ///< W(0, -x)
    double dw_pos = 0.0;  ///< W'(0, x)
    double dw_neg = 0.0;  ///< W'(0, -x), derivative of W taken at -x
};

/// x > 0.
WZeroA w_zero_a(double x);

}  // namespace pcf
