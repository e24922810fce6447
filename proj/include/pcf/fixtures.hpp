#pragma once

// Reference values: the six published 4x6 grids of U, V and W (144 cells)
// and the optional high-precision oracle file.

#include <string>
#include <string_view>
#include <vector>

#include "pcf/types.hpp"

namespace pcf {

struct ReferenceFixture {
    Function function = Function::U;
    double a = 0.0;
    double x = 0.0;  ///< signed
    double expected = 0.0;
    /// Significant digits of the printed cell; 0 for a printed zero.
    int printed_digits = 0;
    int table = 0;     ///< 4..9
    std::string text;  ///< the cell exactly as printed
};

/// All 144 cells, tables 4 through 9 in order.
const std::vector<ReferenceFixture>& paper_fixtures();

/// The 24 cells of one table (4..9); throws DomainError otherwise.
std::vector<ReferenceFixture> paper_table(int table);

/// Significant digits in a printed decimal ("0.000610423938072" -> 12).
int significant_digits(std::string_view printed);

/// Absolute tolerance for a fixture: 5 * 10^{1-d} |expected|, or 1e-13
/// for a printed zero.
double fixture_tolerance(const ReferenceFixture& f);

/// One entry of the oracle fixture file:
///   [{"function": "U", "a": 1.0, "x": 2.0, "value_30_digits": "0.12..."}, ...]
/// function is one of U, V, W, y1p, y1m, gamma_mod, gamma_arg, erfc,
/// besselJ, besselI. For gamma_mod/gamma_arg (a, x) is (Re z, Im z); for
/// erfc only x is used; for besselJ/besselI a is the order and x the
/// argument; y1p/y1m are the Plus/Minus even series y1(a, x).
struct OracleEntry {
    std::string function;
    double a = 0.0;
    double x = 0.0;
    std::string value_text;
    double value = 0.0;
};

/// Throws std::runtime_error on unreadable or malformed files.
std::vector<OracleEntry> load_oracle_file(const std::string& path);

}  // namespace pcf
