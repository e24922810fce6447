#pragma once

#include <string_view>

namespace pcf {

struct ComplexValue {
    double re = 0.0;
    double im = 0.0;

    friend bool operator==(const ComplexValue&, const ComplexValue&) = default;
};

inline ComplexValue conj(ComplexValue z) { return {z.re, -z.im}; }

enum class Regime { ModerateSeries, LargeArgAsymptotic, ClosedForm };

enum class Function { U, V, W };

/// A function value together with its x-derivative. accuracy_estimate is
/// an absolute bound on the error of `value`.
struct EvalResult {
    double value = 0.0;
    double derivative = 0.0;
    double accuracy_estimate = 0.0;
    Regime regime = Regime::ModerateSeries;
};

/// Supported parameter range |a| <= kMaxAbsA.
inline constexpr double kMaxAbsA = 25.0;

std::string_view to_string(Regime r);
std::string_view to_string(Function f);

}  // namespace pcf
