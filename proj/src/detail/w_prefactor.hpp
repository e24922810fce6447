#pragma once

#include "detail/extended.hpp"
#include "pcf/types.hpp"

namespace pcf::detail {

/// log(G1/G3) in extended precision.
quad w_log_ratio(quad a);

EvalResult eval_w_series(double a, double x);

}  // namespace pcf::detail
