#pragma once

#include <string>

#include "detail/extended.hpp"
#include "pcf/errors.hpp"
#include "pcf/series.hpp"

namespace pcf::detail {

/// Truncation tolerance per working type.
template <class Real>
struct SeriesTolerance;
template <>
struct SeriesTolerance<double> {
    static constexpr double value = 1e-17;
};
template <>
struct SeriesTolerance<quad> {
    static constexpr quad value = 1e-34Q;
};

template <class Real>
struct SeriesSums {
    Real y1 = 0, y2 = 0, dy1 = 0, dy2 = 0;
    /// Sums of term magnitudes, for cancellation-aware error estimates.
    Real abs_y1 = 0, abs_y2 = 0, abs_dy1 = 0, abs_dy2 = 0;
    /// First omitted term of each sum.
    Real next_y1 = 0, next_y2 = 0, next_dy1 = 0, next_dy2 = 0;
    int terms = 0;
};

template <class Real>
SeriesResult to_result(const SeriesSums<Real>& s) {
    auto mag = [](Real v) { return static_cast<double>(fabs(v)); };
    double trunc = mag(s.next_y1);
    for (double m : {mag(s.next_y2), mag(s.next_dy1), mag(s.next_dy2)}) trunc = m > trunc ? m : trunc;
    return {static_cast<double>(s.y1), static_cast<double>(s.y2), static_cast<double>(s.dy1),
            static_cast<double>(s.dy2), s.terms, trunc};
}

/// Sums y1, y2 and their derivatives. With t_n = A_n x^n / n! the
/// coefficient recurrence becomes
///     t_{n+2} = (a x^2 t_n +/- x^4/4 t_{n-2}) / ((n+1)(n+2)),
/// and the derivative terms are n t_n / x. Only x^2 and x^4 enter the
/// recurrence, so y1 is exactly even and y2 exactly odd in x.
template <class Real>
SeriesSums<Real> sum_series(Real a, Real x, SeriesSign sign) {
    SeriesSums<Real> s;
    s.y1 = 1;
    s.abs_y1 = 1;
    s.y2 = x;
    s.abs_y2 = fabs(x);
    s.dy2 = 1;
    s.abs_dy2 = 1;
    if (x == 0) {
        s.terms = 1;
        return s;
    }

    const Real x2 = x * x;
    const Real x4q = (sign == SeriesSign::Plus ? 1 : -1) * x2 * x2 / 4;
    const Real ax2 = a * x2;
    constexpr Real tol = SeriesTolerance<Real>::value;

    // Rolling (t_{n-2}, t_n) for each parity; n_even = 2k, n_odd = 2k + 1.
    Real even_prev = 1, even_cur = ax2 / 2;
    Real odd_prev = x, odd_cur = ax2 * x / 6;
    // Accumulate sum n t_n and divide by x once at the end.
    Real dsum1 = 0, dsum2 = x, dabs1 = 0, dabs2 = fabs(x);

    int quiet_steps = 0;
    for (int k = 1; k <= kSeriesTermCap; ++k) {
        const Real n_even = Real(2 * k);
        const Real n_odd = Real(2 * k + 1);
        s.y1 += even_cur;
        s.y2 += odd_cur;
        s.abs_y1 += fabs(even_cur);
        s.abs_y2 += fabs(odd_cur);
        dsum1 += n_even * even_cur;
        dsum2 += n_odd * odd_cur;
        dabs1 += fabs(n_even * even_cur);
        dabs2 += fabs(n_odd * odd_cur);
        s.terms = k;

        const Real d1 = fabs(n_even * even_cur / x);
        const Real d2 = fabs(n_odd * odd_cur / x);
        const bool small = fabs(even_cur) <= tol * (1 + fabs(s.y1)) &&
                           fabs(odd_cur) <= tol * (1 + fabs(s.y2)) &&
                           d1 <= tol * (1 + fabs(dsum1 / x)) && d2 <= tol * (1 + fabs(dsum2 / x));
        quiet_steps = small ? quiet_steps + 1 : 0;

        const Real even_next = (ax2 * even_cur + x4q * even_prev) / ((n_even + 1) * (n_even + 2));
        const Real odd_next = (ax2 * odd_cur + x4q * odd_prev) / ((n_odd + 1) * (n_odd + 2));
        even_prev = even_cur;
        even_cur = even_next;
        odd_prev = odd_cur;
        odd_cur = odd_next;

        if (quiet_steps >= 2) {
            s.dy1 = dsum1 / x;
            s.dy2 = dsum2 / x;
            s.abs_dy1 = dabs1 / fabs(x);
            s.abs_dy2 = dabs2 / fabs(x);
            s.next_y1 = even_cur;
            s.next_y2 = odd_cur;
            s.next_dy1 = (n_even + 2) * even_cur / x;
            s.next_dy2 = (n_odd + 2) * odd_cur / x;
            return s;
        }
    }
    s.dy1 = dsum1 / x;
    s.dy2 = dsum2 / x;
    s.next_y1 = even_cur;
    s.next_y2 = odd_cur;
    throw ConvergenceError("sum_y12: series did not converge within " +
                               std::to_string(kSeriesTermCap) + " terms",
                           to_result(s));
}

}  // namespace pcf::detail
