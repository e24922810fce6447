#pragma once

#include <stdexcept>
#include <string>

namespace pcf {

/// Input outside the mathematical domain (poles, non-finite values,
/// unsupported parameter sets).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Result or intermediate quantity not representable in double precision,
/// or a parameter beyond the supported range.
class RangeError : public std::range_error {
public:
    using std::range_error::range_error;
};

/// The requested evaluation method does not apply at this (a, x).
class RegimeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pcf
