#pragma once

// Shared helpers for the unit tests: tolerance checks and the frozen
// mpmath reference data in tests/data.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "pcf/types.hpp"

namespace testing {

inline double rel_err(double computed, double expected) {
    if (expected == 0.0) return std::fabs(computed);
    return std::fabs(computed - expected) / std::fabs(expected);
}

/// Relative error, or absolute error when |expected| < small.
inline double mixed_err(double computed, double expected, double small = 1e-8) {
    if (std::fabs(expected) < small) return std::fabs(computed - expected);
    return rel_err(computed, expected);
}

inline double num(const nlohmann::json& j) { return std::strtod(j.get<std::string>().c_str(), nullptr); }

inline const nlohmann::json& reference() {
    static const nlohmann::json doc = [] {
        std::ifstream in(std::string(PCF_TEST_DATA) + "/reference.json");
        return nlohmann::json::parse(in);
    }();
    return doc;
}

inline pcf::Function function_of(const std::string& s) {
    return s == "U" ? pcf::Function::U : s == "V" ? pcf::Function::V : pcf::Function::W;
}

}  // namespace testing
