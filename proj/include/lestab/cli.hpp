#pragma once

// Command-line front end.  Five subcommands:
//
//   check      classify one (n, s, p) point and print the criterion value
//   exponents  scan n and tabulate p_s, p_m, p_c, a_ns  (csv or ndjson)
//   region     reduced scan with just the p_c / p_m boundary columns
//   verify     run the exact identity suite, optionally filtered by id prefix
//   n0         the dimension threshold n_0(s) and its 2s + 8.998 bound
//
// Output is deterministic: floats are printed with %.15g, rows are ordered by
// ascending n, and the verification check set is fixed, so identical
// invocations produce byte-identical streams.  Exit codes: 0 success,
// 1 verification/computation failure (failed checks, failed scan rows,
// bracket failures), 2 domain or usage error.
//
// run_cli is the whole interface; the binary's main() forwards to it, and the
// test suite calls it in-process with string streams.

#include "lestab/criterion.hpp"
#include "lestab/exponents.hpp"
#include "lestab/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

namespace lestab {

namespace cli_detail {

inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

// CSV field for a possibly-infinite value; undefined fields are rendered by
// the caller as empty strings
inline std::string csv_num(double v) {
    return std::isinf(v) ? "inf" : fmt(v);
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    q += '"';
    return q;
}

struct ScanRow {
    double n = 0, s = 0;
    double p_s = 0, p_m = 0;
    double p_c = std::numeric_limits<double>::quiet_NaN();  // NaN = errored
    bool has_a = false;
    double a = 0;
    std::string error;
};

inline ScanRow scan_row(double n, double s, double tol) {
    ScanRow row;
    row.n = n;
    row.s = s;
    row.p_s = sobolev_exponent(n, s);
    row.p_m = pm_exponent(n, s);
    try {
        row.p_c = pc_exponent(n, s, tol);
        if (!std::isinf(row.p_c)) {
            row.a = (n + 2 * s - 2 - row.p_c * (n - 2 * s - 2)) /
                    (2 * std::sqrt(n) * (1 - row.p_c));
            row.has_a = true;
        }
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

}  // namespace cli_detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
    using cli_detail::fmt;

    CLI::App app{"stability toolkit for the higher-order fractional Lane-Emden equation"};
    app.require_subcommand(1);

    // ---- check ----
    double c_n = 0, c_s = 0, c_p = 0, c_tol = kCriticalRelTol;
    std::string c_format = "text";
    CLI::App* check = app.add_subcommand(
        "check", "classify one parameter point (n, s, p)");
    check->add_option("--n", c_n, "dimension n")->required();
    check->add_option("--s", c_s, "order s of the fractional Laplacian")->required();
    check->add_option("--p", c_p, "nonlinearity exponent p")->required();
    check->add_option("--tol", c_tol, "relative tolerance for critical detection");
    check->add_option("--format", c_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    // ---- exponents / region ----
    double e_s = 0, e_nmin = 0, e_nmax = 0, e_nstep = 1, e_tol = kRootTol;
    std::string e_format = "csv", e_out;
    CLI::App* exponents = app.add_subcommand(
        "exponents", "tabulate p_s, p_m, p_c, a_ns over an n-range");
    CLI::App* region = app.add_subcommand(
        "region", "tabulate the p_c and p_m regime boundaries over an n-range");
    for (CLI::App* sub : {exponents, region}) {
        sub->add_option("--s", e_s, "order s")->required();
        sub->add_option("--n-min", e_nmin, "first n value")->required();
        sub->add_option("--n-max", e_nmax, "last n value")->required();
        sub->add_option("--n-step", e_nstep, "grid step in n");
        sub->add_option("--tol", e_tol, "absolute tolerance for the p_c root");
        sub->add_option("--format", e_format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", e_out, "write the table to a file instead of stdout");
    }

    // ---- verify ----
    std::string v_filter, v_format = "text", v_out;
    CLI::App* verify = app.add_subcommand(
        "verify", "run the exact algebraic verification suite");
    verify->add_option("--filter", v_filter, "only run checks whose id starts here");
    verify->add_option("--format", v_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", v_out, "write the report to a file instead of stdout");

    // ---- n0 ----
    double z_s = 0, z_tol = kRootTol;
    std::string z_format = "text";
    CLI::App* n0cmd = app.add_subcommand(
        "n0", "dimension threshold n_0(s) below which p_c is infinite");
    n0cmd->add_option("--s", z_s, "order s")->required();
    n0cmd->add_option("--tol", z_tol, "bisection tolerance");
    n0cmd->add_option("--format", z_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    // ---------------------------------------------------------------- check
    if (check->parsed()) {
        if (!(c_s > 0) || c_s > 3) {
            err << "error: precondition violated: s must lie in (0, 3]\n";
            return 2;
        }
        if (!(c_n > 2 * c_s)) {
            err << "error: precondition violated: n > 2s is required\n";
            return 2;
        }
        if (!(c_p > 1)) {
            err << "error: precondition violated: p > 1 is required\n";
            return 2;
        }
        if (!(c_tol > 0)) {
            err << "error: precondition violated: tol > 0 is required\n";
            return 2;
        }
        if (!(c_s > 2 && c_s < 3))
            err << "warning: s = " << fmt(c_s)
                << " lies outside (2, 3); formulas are evaluated formally\n";

        const RegimeVerdict rv = classify_regime(ParamPoint(c_n, c_s, c_p), c_tol);
        if (c_format == "json") {
            nlohmann::json j = rv;
            j["n"] = c_n;
            j["s"] = c_s;
            j["p"] = c_p;
            out << j.dump() << "\n";
        } else {
            out << "regime=" << regime_name(rv.regime) << "\n";
            out << "statement=" << rv.statement << "\n";
            if (rv.criterion) {
                out << "F=" << fmt(rv.criterion->F) << "\n";
                out << "log_lhs=" << fmt(rv.criterion->log_lhs) << "\n";
                out << "log_rhs=" << fmt(rv.criterion->log_rhs) << "\n";
                out << "verdict=" << verdict_name(rv.criterion->verdict) << "\n";
                out << "boundary=" << (rv.criterion->boundary ? "true" : "false")
                    << "\n";
            }
        }
        return 0;
    }

    // ---------------------------------------------------- exponents / region
    if (exponents->parsed() || region->parsed()) {
        const bool full = exponents->parsed();
        if (!(e_s > 0) || e_s > 3) {
            err << "error: precondition violated: s must lie in (0, 3]\n";
            return 2;
        }
        if (!(e_nmin > 2 * e_s)) {
            err << "error: precondition violated: n-min must exceed 2s\n";
            return 2;
        }
        if (!(e_nstep > 0) || !(e_nmax >= e_nmin) || !(e_tol > 0)) {
            err << "error: precondition violated: need n-step > 0, n-max >= n-min, "
                   "tol > 0\n";
            return 2;
        }

        std::ofstream file;
        std::ostream* sink = &out;
        if (!e_out.empty()) {
            file.open(e_out);
            if (!file) {
                err << "error: cannot open output file " << e_out << "\n";
                return 2;
            }
            sink = &file;
        }

        std::vector<cli_detail::ScanRow> rows;
        for (int i = 0;; ++i) {
            const double n = e_nmin + i * e_nstep;
            if (n > e_nmax + e_nstep * 1e-9) break;
            rows.push_back(cli_detail::scan_row(n, e_s, e_tol));
        }

        bool any_error = false;
        if (e_format == "csv") {
            *sink << (full ? "n,s,p_s,p_m,p_c,a_ns,error" : "n,s,p_c,p_m,error")
                  << "\n";
            for (const auto& r : rows) {
                const std::string pc =
                    r.error.empty() ? cli_detail::csv_num(r.p_c) : std::string();
                const std::string a =
                    r.has_a ? cli_detail::fmt(r.a) : std::string();
                if (full)
                    *sink << fmt(r.n) << "," << fmt(r.s) << ","
                          << cli_detail::csv_num(r.p_s) << ","
                          << cli_detail::csv_num(r.p_m) << "," << pc << "," << a
                          << "," << cli_detail::csv_quote(r.error) << "\n";
                else
                    *sink << fmt(r.n) << "," << fmt(r.s) << "," << pc << ","
                          << cli_detail::csv_num(r.p_m) << ","
                          << cli_detail::csv_quote(r.error) << "\n";
                if (!r.error.empty()) any_error = true;
            }
        } else {
            for (const auto& r : rows) {
                nlohmann::json j;
                j["n"] = r.n;
                j["s"] = r.s;
                if (full) j["p_s"] = real_field_json(r.p_s);
                j["p_m"] = real_field_json(r.p_m);
                if (r.error.empty())
                    j["p_c"] = real_field_json(r.p_c);
                else
                    j["p_c"] = nlohmann::json{{"value", nullptr}, {"infinite", false}};
                if (full)
                    j["a_ns"] = r.has_a
                                    ? real_field_json(r.a)
                                    : nlohmann::json{{"value", nullptr},
                                                     {"infinite", false}};
                j["error"] = r.error.empty() ? nlohmann::json(nullptr)
                                             : nlohmann::json(r.error);
                *sink << j.dump() << "\n";
                if (!r.error.empty()) any_error = true;
            }
        }
        return any_error ? 1 : 0;
    }

    // --------------------------------------------------------------- verify
    if (verify->parsed()) {
        std::ofstream file;
        std::ostream* sink = &out;
        if (!v_out.empty()) {
            file.open(v_out);
            if (!file) {
                err << "error: cannot open output file " << v_out << "\n";
                return 2;
            }
            sink = &file;
        }

        const Report rep = verify_suite();
        Report filtered("exact verification suite");
        for (const CheckResult& cr : rep.checks())
            if (v_filter.empty() || cr.id.rfind(v_filter, 0) == 0)
                filtered.add(cr);
        if (filtered.checks().empty())
            err << "warning: no checks matched filter '" << v_filter << "'\n";

        if (v_format == "json") {
            *sink << filtered.json().dump() << "\n";
        } else {
            for (const CheckResult& cr : filtered.checks()) {
                *sink << (cr.pass ? "PASS " : "FAIL ") << cr.id << " :: "
                      << cr.anchor;
                if (!cr.pass && !cr.residual.empty())
                    *sink << " [" << cr.residual << "]";
                *sink << "\n";
            }
            *sink << (filtered.all_pass() ? "all checks passed ("
                                          : "FAILURES present (")
                  << filtered.checks().size() << " checks)\n";
        }
        return filtered.all_pass() ? 0 : 1;
    }

    // ------------------------------------------------------------------- n0
    if (n0cmd->parsed()) {
        if (!(z_s > 0) || z_s > 3) {
            err << "error: precondition violated: s must lie in (0, 3]\n";
            return 2;
        }
        if (!(z_tol > 0)) {
            err << "error: precondition violated: tol > 0 is required\n";
            return 2;
        }
        double n0 = 0;
        try {
            n0 = n0_threshold(z_s, z_tol);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return 1;
        }
        const double bound = 2 * z_s + 8.998;
        const bool in_range = (z_s > 2 && z_s < 3);
        const bool bound_ok = n0 <= bound;
        const std::string verdict =
            in_range ? (bound_ok ? "pass" : "fail") : "not-applicable";

        if (z_format == "json") {
            nlohmann::json j{{"s", z_s},
                             {"n0", n0},
                             {"bound", bound},
                             {"bound_check", verdict}};
            out << j.dump() << "\n";
        } else {
            out << "s=" << fmt(z_s) << "\n";
            out << "n0=" << fmt(n0) << "\n";
            out << "bound=" << fmt(bound) << "\n";
            out << "bound_check=" << verdict << "\n";
        }
        return (in_range && !bound_ok) ? 1 : 0;
    }

    err << "error: no subcommand selected\n";
    return 2;
}

}  // namespace lestab
