#pragma once

// Even/odd power-series solutions y1, y2 of
//     y'' = (x^2/4 + a) y    (SeriesSign::Plus)
//     y'' = (a - x^2/4) y    (SeriesSign::Minus)
// normalised by y1(0) = 1, y1'(0) = 0, y2(0) = 0, y2'(0) = 1. The
// coefficients A_n of x^n/n! obey A_{n+2} = a A_n +/- n(n-1)/4 A_{n-2}.
//
// Sums are accumulated in 113-bit arithmetic and rounded once, so the four
// outputs are correctly rounded up to the truncation error even when the
// series cancels.

#include <stdexcept>
#include <vector>

namespace pcf {

enum class SeriesSign { Plus, Minus };

struct SeriesResult {
    double y1 = 0.0;
    double y2 = 0.0;
    double dy1 = 0.0;
    double dy2 = 0.0;
    int terms_used = 0;
    /// Magnitude of the largest first-omitted term over the four sums.
    double trunc_estimate = 0.0;
};

inline constexpr int kSeriesTermCap = 400;

/// Thrown when the four sums have not settled after kSeriesTermCap terms.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, SeriesResult partial)
        : std::runtime_error(what), partial_(partial) {}
    const SeriesResult& partial() const noexcept { return partial_; }

private:
    SeriesResult partial_;
};

SeriesResult sum_y12(double a, double x, SeriesSign sign);

/// A_0 .. A_{n_max} of the even (A_0 = 1, A_1 = 0) and odd (A_0 = 0,
/// A_1 = 1) series interleaved by index: element n is the coefficient of
/// x^n/n! in y1 for even n and in y2 for odd n.
std::vector<double> series_coefficients(double a, SeriesSign sign, int n_max);

}  // namespace pcf
