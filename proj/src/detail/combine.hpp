#pragma once

#include "detail/series_kernel.hpp"
#include "pcf/types.hpp"

namespace pcf::detail {

/// Relative error budget of a 113-bit prefactor or partial sum (Stirling
/// tail, shift products, accumulated rounding).
inline constexpr double kQuadRelativeError = 1e-31;

/// Largest |x| at which the series paths are attempted at all.
inline constexpr double kSeriesMaxAbsX = 24.0;

/// value = c1 y1 + c2 y2, derivative = c1 y1' + c2 y2'. The accuracy
/// estimate covers the cancellation between the two products, the
/// truncated tail and the final rounding to double.
inline EvalResult combine(quad c1, quad c2, const SeriesSums<quad>& s) {
    const quad value = c1 * s.y1 + c2 * s.y2;
    const quad derivative = c1 * s.dy1 + c2 * s.dy2;
    const quad magnitude = fabs(c1) * s.abs_y1 + fabs(c2) * s.abs_y2;
    const quad tail = fabs(c1 * s.next_y1) + fabs(c2 * s.next_y2);
    const double v = static_cast<double>(value);
    const double estimate = Constants<double>::epsilon * std::fabs(v) +
                            kQuadRelativeError * static_cast<double>(magnitude) +
                            static_cast<double>(tail);
    return {v, static_cast<double>(derivative), estimate, Regime::ModerateSeries};
}

}  // namespace pcf::detail
