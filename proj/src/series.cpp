#include "pcf/series.hpp"

#include <cmath>

#include "detail/series_kernel.hpp"
#include "pcf/errors.hpp"

namespace pcf {

SeriesResult sum_y12(double a, double x, SeriesSign sign) {
    if (!std::isfinite(a) || !std::isfinite(x)) throw DomainError("sum_y12: non-finite input");
    return detail::to_result(detail::sum_series<detail::quad>(a, x, sign));
}

std::vector<double> series_coefficients(double a, SeriesSign sign, int n_max) {
    if (n_max < 0) throw DomainError("series_coefficients: negative order");
    const double s = sign == SeriesSign::Plus ? 1.0 : -1.0;
    std::vector<double> coeff(static_cast<std::size_t>(n_max) + 1, 0.0);
    for (int n = 0; n <= n_max; ++n) {
        const auto i = static_cast<std::size_t>(n);
        if (n == 0 || n == 1) {
            coeff[i] = 1.0;
        } else if (n == 2 || n == 3) {
            coeff[i] = a;
        } else {
            const int m = n - 2;
            coeff[i] = a * coeff[i - 2] + s * 0.25 * m * (m - 1) * coeff[i - 4];
        }
    }
    return coeff;
}

}  // namespace pcf
