#pragma once

// Gamma function of complex argument.
//
// log_gamma uses Stirling's series with the ten Bernoulli numbers B2..B20,
// applied once |z| is large enough and Re z >= 0; smaller arguments are first
// moved up with Gamma(z+1) = z Gamma(z). Evaluation runs in 113-bit
// arithmetic (threshold |z| >= 40) and is rounded once to double. The branch is the one that is real on the
// positive real axis and continuous off the negative real axis (the shift
// terms are accumulated as a sum of principal logarithms, never as the log
// of a product).
//
// Inputs within 1e-12 of a nonpositive integer are treated as poles.

#include <array>
#include <cstdint>

#include "pcf/types.hpp"

namespace pcf {

struct Rational {
    std::int64_t num;
    std::int64_t den;

    friend bool operator==(const Rational&, const Rational&) = default;
};

/// B2, B4, ..., B20.
const std::array<Rational, 10>& bernoulli_table();

ComplexValue log_gamma(ComplexValue z);

/// Throws RangeError when |Gamma(z)| overflows.
ComplexValue gamma(ComplexValue z);

/// |Gamma(z)|, formed from Re log Gamma so large imaginary parts do not
/// overflow intermediate values.
double gamma_modulus(ComplexValue z);

/// Im log Gamma(z) on the branch described above; exactly 0 on the positive
/// real axis.
double gamma_arg(ComplexValue z);

/// 1/Gamma(x); exactly 0 within 1e-12 of a pole.
double recip_gamma_real(double x);

}  // namespace pcf
