// pcf: evaluate parabolic cylinder functions from the command line.
//
//   pcf eval --func U --a -1 --x 1 [--deriv] [--regime series] [--json]
//   pcf table --func W --a 0 --x 0:1:5 [--deriv] [--json]
//   pcf table --paper-tables [--table 4]
//   pcf selftest [--oracle-file oracle.json]
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 domain, range or
// regime error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcf/dispatch.hpp"
#include "pcf/errors.hpp"
#include "pcf/fixtures.hpp"
#include "pcf/selftest.hpp"

namespace {

constexpr int kExitCheck = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

// JSON numbers are written by hand so that the 17 significant digits survive.
std::string json_num(double v) {
    if (!std::isfinite(v)) return "null";
    return num(v, 17);
}

double parse_real(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + s + "'");
    }
    if (used != s.size()) throw UsageError("not a number: '" + s + "'");
    return v;
}

/// "x" or "start:step:stop" (stop included when hit to within 1e-9 steps).
std::vector<double> parse_grid(const std::string& s) {
    const auto c1 = s.find(':');
    if (c1 == std::string::npos) return {parse_real(s)};
    const auto c2 = s.find(':', c1 + 1);
    if (c2 == std::string::npos) throw UsageError("range must be start:step:stop, got '" + s + "'");
    const double start = parse_real(s.substr(0, c1));
    const double step = parse_real(s.substr(c1 + 1, c2 - c1 - 1));
    const double stop = parse_real(s.substr(c2 + 1));
    if (step == 0.0 || (stop - start) / step < 0.0) throw UsageError("range '" + s + "' is empty");
    const double span = (stop - start) / step;
    if (span > 1e6) throw UsageError("range '" + s + "' has too many points");
    const long n = static_cast<long>(std::floor(span + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
}

pcf::Function parse_function(const std::string& s) {
    if (s == "U") return pcf::Function::U;
    if (s == "V") return pcf::Function::V;
    if (s == "W") return pcf::Function::W;
    throw UsageError("--func must be U, V or W");
}

std::optional<pcf::Regime> parse_regime(const std::string& s) {
    if (s == "auto") return std::nullopt;
    if (s == "series") return pcf::Regime::ModerateSeries;
    if (s == "asymptotic") return pcf::Regime::LargeArgAsymptotic;
    throw UsageError("--regime must be auto, series or asymptotic");
}

struct Point {
    pcf::Function f;
    double a;
    double x;
    pcf::EvalResult r;
};

std::string point_json(const Point& p) {
    std::string s = "{\"function\":\"";
    s += pcf::to_string(p.f);
    s += "\",\"a\":" + json_num(p.a) + ",\"x\":" + json_num(p.x) + ",\"value\":" + json_num(p.r.value) +
         ",\"derivative\":" + json_num(p.r.derivative) +
         ",\"accuracy_estimate\":" + json_num(p.r.accuracy_estimate) + ",\"regime\":\"";
    s += pcf::to_string(p.r.regime);
    s += "\"}";
    return s;
}

void print_json(const std::vector<Point>& pts, bool as_array) {
    if (!as_array) {
        std::cout << point_json(pts.front()) << '\n';
        return;
    }
    std::cout << "[\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::cout << "  " << point_json(pts[i]) << (i + 1 < pts.size() ? ",\n" : "\n");
    }
    std::cout << "]\n";
}

void print_csv(const std::vector<Point>& pts, bool deriv) {
    std::cout << "function,a,x,value" << (deriv ? ",derivative" : "") << ",accuracy_estimate,regime\n";
    for (const Point& p : pts) {
        std::cout << pcf::to_string(p.f) << ',' << num(p.a, 17) << ',' << num(p.x, 17) << ','
                  << num(p.r.value, 17);
        if (deriv) std::cout << ',' << num(p.r.derivative, 17);
        std::cout << ',' << num(p.r.accuracy_estimate, 3) << ',' << pcf::to_string(p.r.regime) << '\n';
    }
}

void print_human(const std::vector<Point>& pts, bool deriv) {
    for (const Point& p : pts) {
        const std::string head = std::string(pcf::to_string(p.f)) + (deriv ? "'" : "") + "(" + num(p.a, 16) +
                                 ", " + num(p.x, 16) + ") = ";
        std::cout << head << num(deriv ? p.r.derivative : p.r.value, 16) << '\n';
        std::cout << "  " << (deriv ? "value      " : "derivative ") << num(deriv ? p.r.value : p.r.derivative, 16)
                  << "\n  accuracy   " << num(p.r.accuracy_estimate, 3) << "\n  regime     "
                  << pcf::to_string(p.r.regime) << '\n';
    }
}

struct EvalOptions {
    std::string func;
    std::string a;
    std::string x;
    std::string regime = "auto";
    bool deriv = false;
    bool json = false;
    bool csv = false;
};

std::vector<Point> evaluate_grid(const EvalOptions& o) {
    const pcf::Function f = parse_function(o.func);
    const auto regime = parse_regime(o.regime);
    std::vector<Point> pts;
    for (double a : parse_grid(o.a)) {
        for (double x : parse_grid(o.x)) pts.push_back({f, a, x, pcf::dispatch(f, a, x, regime)});
    }
    return pts;
}

int run_eval(const EvalOptions& o) {
    const auto pts = evaluate_grid(o);
    if (o.json) {
        print_json(pts, pts.size() > 1);
    } else if (o.csv) {
        print_csv(pts, o.deriv);
    } else {
        print_human(pts, o.deriv);
    }
    return 0;
}

int run_table(const EvalOptions& o, bool paper, int table) {
    if (!paper) {
        if (o.func.empty() || o.a.empty() || o.x.empty()) {
            throw UsageError("table needs --func, --a and --x, or --paper-tables");
        }
        const auto pts = evaluate_grid(o);
        if (o.json) {
            print_json(pts, true);
        } else {
            print_csv(pts, o.deriv);
        }
        return 0;
    }
    if (table != 0 && (table < 4 || table > 9)) throw UsageError("--table must be 4..9");
    const auto fixtures = table == 0 ? pcf::paper_fixtures() : pcf::paper_table(table);
    std::vector<Point> pts;
    for (const auto& fx : fixtures) pts.push_back({fx.function, fx.a, fx.x, pcf::dispatch(fx.function, fx.a, fx.x)});
    if (o.json) {
        std::cout << "[\n";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            std::string s = point_json(pts[i]);
            s.pop_back();
            s += ",\"table\":" + std::to_string(fixtures[i].table) + ",\"printed\":\"" + fixtures[i].text + "\"}";
            std::cout << "  " << s << (i + 1 < pts.size() ? ",\n" : "\n");
        }
        std::cout << "]\n";
        return 0;
    }
    std::cout << "table,function,a,x,value" << (o.deriv ? ",derivative" : "") << ",printed\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point& p = pts[i];
        std::cout << fixtures[i].table << ',' << pcf::to_string(p.f) << ',' << num(p.a, 17) << ',' << num(p.x, 17)
                  << ',' << num(p.r.value, 16);
        if (o.deriv) std::cout << ',' << num(p.r.derivative, 16);
        std::cout << ',' << fixtures[i].text << '\n';
    }
    return 0;
}

int run_selftest(const std::string& oracle_file) {
    std::vector<pcf::OracleEntry> oracle;
    if (!oracle_file.empty()) {
        try {
            oracle = pcf::load_oracle_file(oracle_file);
        } catch (const std::runtime_error& e) {
            throw UsageError(e.what());
        }
    }
    const pcf::SelftestReport report = pcf::run_selftest(pcf::paper_fixtures(), oracle);
    std::cout << pcf::format_report(report);
    return report.passed() ? 0 : kExitCheck;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parabolic cylinder functions U(a,x), V(a,x), W(a,x)"};
    app.require_subcommand(1);

    EvalOptions eval_opts;
    auto* eval = app.add_subcommand("eval", "Evaluate at a point or along a range");
    eval->add_option("--func", eval_opts.func, "U, V or W")->required();
    eval->add_option("--a", eval_opts.a, "parameter, real or start:step:stop")->required();
    eval->add_option("--x", eval_opts.x, "argument, real or start:step:stop")->required();
    eval->add_flag("--deriv", eval_opts.deriv, "report the x-derivative first");
    eval->add_option("--regime", eval_opts.regime, "auto, series or asymptotic");
    auto* eval_json = eval->add_flag("--json", eval_opts.json, "JSON output, 17 digits");
    eval->add_flag("--csv", eval_opts.csv, "CSV output")->excludes(eval_json);

    EvalOptions table_opts;
    bool paper = false;
    int table_no = 0;
    auto* table = app.add_subcommand("table", "Values over an (a, x) grid");
    table->add_option("--func", table_opts.func, "U, V or W");
    table->add_option("--a", table_opts.a, "parameter, real or start:step:stop");
    table->add_option("--x", table_opts.x, "argument, real or start:step:stop");
    table->add_flag("--deriv", table_opts.deriv, "add a derivative column");
    table->add_option("--regime", table_opts.regime, "auto, series or asymptotic");
    auto* table_json = table->add_flag("--json", table_opts.json, "JSON output");
    table->add_flag("--csv", table_opts.csv, "CSV output (default)")->excludes(table_json);
    table->add_flag("--paper-tables", paper, "the published 4x6 grids");
    table->add_option("--table", table_no, "restrict --paper-tables to one table, 4..9");

    std::string oracle_file;
    auto* selftest = app.add_subcommand("selftest", "Replay reference tables and closed forms");
    selftest->add_option("--oracle-file", oracle_file, "JSON array of high-precision reference values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*eval) return run_eval(eval_opts);
        if (*table) return run_table(table_opts, paper, table_no);
        if (*selftest) return run_selftest(oracle_file);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const pcf::DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const pcf::RangeError& e) {
        std::cerr << "range error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const pcf::RegimeError& e) {
        std::cerr << "regime error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitUsage;
}
