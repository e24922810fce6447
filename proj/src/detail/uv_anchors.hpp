#pragma once

#include "detail/extended.hpp"
#include "pcf/types.hpp"

namespace pcf::detail {

struct AnchorsQ {
    quad u0 = 0, du0 = 0, v0 = 0, dv0 = 0;
};

AnchorsQ uv_anchors(quad a);

void check_series_domain(const char* what, double a, double x);

EvalResult eval_u_series(double a, double x);
EvalResult eval_v_series(double a, double x);

}  // namespace pcf::detail
