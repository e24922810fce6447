#pragma once

// Self-test: replays the printed reference tables, the closed-form oracle
// suite and, when given, an oracle fixture file. Failures are collected in
// the report, never thrown.

#include <string>
#include <vector>

#include "pcf/fixtures.hpp"

namespace pcf {

/// One comparison of a computed value against a reference.
struct Check {
    std::string name;
    double computed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;  ///< absolute
    bool passed = false;
    std::string error;  ///< set when evaluation threw
};

struct TableSummary {
    int table = 0;
    int cells = 0;
    int failures = 0;
    /// |computed - expected| / |expected|, absolute error for zero cells.
    double max_rel_error = 0.0;
    /// Largest error-to-tolerance ratio; <= 1 means every cell passed.
    double max_tolerance_ratio = 0.0;
};

struct SelftestReport {
    std::vector<TableSummary> tables;
    std::vector<Check> fixture_checks;
    std::vector<Check> closed_form_checks;
    std::vector<Check> oracle_checks;
    double seconds = 0.0;

    int failures() const;
    bool passed() const { return failures() == 0; }
};

/// Evaluates one printed cell through dispatch.
Check check_fixture(const ReferenceFixture& f);

/// Closed forms against the series paths at x in {0.5, 1, 2, 3, 4, 5}
/// (and the negated points where the form holds): 1e-10 relative, 1e-13
/// absolute when the reference is below 1e-8.
std::vector<Check> closed_form_suite();

/// 1e-11 relative for |x| <= 6 and scalar entries; within the reported
/// accuracy estimate (plus 1e-11 relative) for larger |x|.
std::vector<Check> check_oracle(const std::vector<OracleEntry>& entries);

SelftestReport run_selftest(const std::vector<ReferenceFixture>& fixtures,
                            const std::vector<OracleEntry>& oracle = {});

/// Human-readable report, one line per table plus failures and totals.
std::string format_report(const SelftestReport& report);

}  // namespace pcf
