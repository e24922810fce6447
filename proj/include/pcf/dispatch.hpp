#pragma once

#include <optional>

#include "pcf/types.hpp"

namespace pcf {

/// |x| at or below which the power series is used.
inline constexpr double kModerateBound = 6.0;

/// |x| at or above which the large-argument expansion is used:
/// max(8, 2|a| + 6).
double asymptotic_bound(double a);

/// Evaluates U, V or W and the x-derivative with automatic regime
/// selection. Between the two bounds the series is used, unless it cannot
/// be evaluated there or the expansion reports a smaller error. Negative x
/// is supported in every regime.
///
/// Throws RangeError for |a| > 25, RegimeError when a forced regime does
/// not apply (forcing ClosedForm is always a RegimeError).
EvalResult dispatch(Function f, double a, double x, std::optional<Regime> forced = std::nullopt);

}  // namespace pcf
