#pragma once

// Command-line front end: exact triangle rows, closed-form integrals with
// optional oracle verification, theorem series reports and verification
// sweeps, in text, JSON or CSV. Runs are flag-driven and fully
// deterministic; identical flags produce byte-identical output.
//
// Exit codes: 0 success, 2 verification failure, 64 usage error.

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sinint/closedform.hpp"
#include "sinint/oracle.hpp"
#include "sinint/transforms.hpp"
#include "sinint/triangles.hpp"

namespace sinint {

// 17 significant digits round-trip a double exactly through text.
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline RowKind row_kind_from_name(const std::string& s) {
    if (s == "odd_si") return RowKind::odd_si;
    if (s == "even_ci") return RowKind::even_ci;
    if (s == "invsq_si") return RowKind::invsq_si;
    if (s == "log_ei") return RowKind::log_ei;
    throw std::domain_error("unknown row kind: " + s);
}

// --- JSON bindings (numerators as decimal strings: they outgrow int64) ---

inline void to_json(nlohmann::json& j, const CoefficientRow& row) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : row.entries)
        entries.push_back({e.multiplier, e.numerator.to_string()});
    j = nlohmann::json{{"kind", row_kind_name(row.kind)},
                       {"n", row.row_index},
                       {"scale_log2", row.scale_log2},
                       {"entries", std::move(entries)}};
}

inline void from_json(const nlohmann::json& j, CoefficientRow& row) {
    row.kind = row_kind_from_name(j.at("kind").get<std::string>());
    row.row_index = j.at("n").get<long>();
    row.scale_log2 = j.at("scale_log2").get<unsigned>();
    row.entries.clear();
    for (const auto& e : j.at("entries"))
        row.entries.push_back(
            {e.at(0).get<long>(), BigInt::from_string(e.at(1).get<std::string>())});
}

inline void to_json(nlohmann::json& j, const ConvergenceReport& r) {
    j = nlohmann::json{{"theorem_id", r.theorem_id},
                       {"terms_used", r.terms_used},
                       {"partial_sum", r.partial_sum},
                       {"known_limit", r.known_limit},
                       {"raw_error", r.raw_error},
                       {"extrapolated", r.extrapolated},
                       {"tail_exponent_fit", r.tail_exponent_fit},
                       {"extrapolated_value", r.extrapolated_value},
                       {"extrapolated_error", r.extrapolated_error}};
}

inline void from_json(const nlohmann::json& j, ConvergenceReport& r) {
    j.at("theorem_id").get_to(r.theorem_id);
    j.at("terms_used").get_to(r.terms_used);
    j.at("partial_sum").get_to(r.partial_sum);
    j.at("known_limit").get_to(r.known_limit);
    j.at("raw_error").get_to(r.raw_error);
    j.at("extrapolated").get_to(r.extrapolated);
    j.at("tail_exponent_fit").get_to(r.tail_exponent_fit);
    j.at("extrapolated_value").get_to(r.extrapolated_value);
    j.at("extrapolated_error").get_to(r.extrapolated_error);
}

struct IntegralReport {
    std::string op;
    long n = 0;
    double value = 0;
    bool verified = false;
    double oracle_value = 0;
    double abs_diff = 0;
    double tol = 0;

    friend bool operator==(const IntegralReport&, const IntegralReport&) = default;
};

inline void to_json(nlohmann::json& j, const IntegralReport& r) {
    j = nlohmann::json{{"op", r.op}, {"n", r.n}, {"value", r.value}};
    if (r.verified) {
        j["oracle_value"] = r.oracle_value;
        j["abs_diff"] = r.abs_diff;
        j["tol"] = r.tol;
    }
}

inline void from_json(const nlohmann::json& j, IntegralReport& r) {
    r = IntegralReport{};
    j.at("op").get_to(r.op);
    j.at("n").get_to(r.n);
    j.at("value").get_to(r.value);
    if (j.contains("oracle_value")) {
        r.verified = true;
        j.at("oracle_value").get_to(r.oracle_value);
        j.at("abs_diff").get_to(r.abs_diff);
        j.at("tol").get_to(r.tol);
    }
}

struct CheckResult {
    std::string name;
    double observed = 0;
    double tol = 0;
    bool pass = false;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass = false;

    friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

inline void to_json(nlohmann::json& j, const CheckResult& c) {
    j = nlohmann::json{
        {"name", c.name}, {"observed", c.observed}, {"tol", c.tol}, {"pass", c.pass}};
}

inline void from_json(const nlohmann::json& j, CheckResult& c) {
    j.at("name").get_to(c.name);
    j.at("observed").get_to(c.observed);
    j.at("tol").get_to(c.tol);
    j.at("pass").get_to(c.pass);
}

inline void to_json(nlohmann::json& j, const VerifyReport& r) {
    j = nlohmann::json{{"suite", r.suite}, {"checks", r.checks}, {"pass", r.pass}};
}

inline void from_json(const nlohmann::json& j, VerifyReport& r) {
    j.at("suite").get_to(r.suite);
    j.at("checks").get_to(r.checks);
    j.at("pass").get_to(r.pass);
}

namespace cli {

enum class OutputFormat { text, json, csv };

// Everything a run depends on; no config files, no environment, no seeds.
struct RunConfig {
    std::string subcommand;
    std::string kind;
    long n = 0;
    int theorem_id = 1;
    long terms = 1000;
    double tol = 1e-9;
    bool verify = false;
    bool extrapolate = false;
    bool allow_large = false;
    int chunk = 64;
    OutputFormat format = OutputFormat::text;
    std::string suite;
};

namespace suites {

inline CheckResult exact_row_check(const char* name, const CoefficientRow& row,
                                   unsigned scale, const std::vector<long>& multipliers,
                                   const std::vector<long long>& numerators) {
    long mismatches = 0;
    if (row.scale_log2 != scale) ++mismatches;
    if (row.entries.size() != multipliers.size()) ++mismatches;
    for (std::size_t i = 0; i < row.entries.size() && i < multipliers.size(); ++i) {
        if (row.entries[i].multiplier != multipliers[i]) ++mismatches;
        if (!(row.entries[i].numerator == BigInt(numerators[i]))) ++mismatches;
    }
    return {name, static_cast<double>(mismatches), 0.0, mismatches == 0};
}

inline VerifyReport rows() {
    VerifyReport rep{"rows", {}, true};
    rep.checks.push_back(exact_row_check("odd_row_6_x13_display", odd_row(6), 13,
                                         {14, 12, 10, 8, 6, 4, 2},
                                         {1, -12, 65, -208, 429, -572, 429}));
    rep.checks.push_back(exact_row_check("even_row_6_x12_display", even_row(6), 12,
                                         {13, 11, 9, 7, 5, 3, 1},
                                         {1, -11, 54, -154, 275, -297, 132}));
    rep.checks.push_back(exact_row_check("invsq_row_3_x6_display", invsq_row(3), 6,
                                         {1, 3, 5, 7}, {-5, 27, -25, 7}));
    rep.checks.push_back(exact_row_check("invsq_row_4_x8_display", invsq_row(4), 8,
                                         {1, 3, 5, 7, 9}, {-14, 84, -100, 49, -9}));

    long nonzero = 0;
    for (long n = 1; n <= 30; ++n) {
        if (!even_row(n).signed_numerator_sum().is_zero()) ++nonzero;
        if (!log_row(n).signed_numerator_sum().is_zero()) ++nonzero;
    }
    rep.checks.push_back(
        {"signed_row_sums_zero_n1_30", static_cast<double>(nonzero), 0.0, nonzero == 0});

    long integrality_failures = 0;
    try {
        for (long n = 0; n <= 120; ++n)
            for (long k = 0; 2 * k <= n; ++k) (void)ballot_coefficient(n, k);
        for (long k = 1; k <= 60; ++k)
            for (long n = 1; n <= k; ++n) (void)invsq_coefficient(k, n);
    } catch (const std::logic_error&) {
        ++integrality_failures;
    }
    rep.checks.push_back({"triangle_integrality", static_cast<double>(integrality_failures),
                          0.0, integrality_failures == 0});

    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

inline VerifyReport integrals() {
    VerifyReport rep{"integrals", {}, true};
    const double tol = 1e-9;
    const double quad_tol = 1e-11;

    auto sweep = [&](const char* name, long lo, long hi, auto&& closed, IntegrandKind kind) {
        double worst = 0;
        for (long n = lo; n <= hi; ++n) {
            const double c = closed(n);
            const double q = integrate(integrand(kind, n), 0.0, 1.0, quad_tol).value;
            worst = std::fmax(worst, std::fabs(c - q));
        }
        rep.checks.push_back({name, worst, tol, worst <= tol});
    };

    sweep("integral_odd_vs_oracle_n0_20", 0, 20,
          [](long n) { return integral_odd(n).value; }, IntegrandKind::odd_power_over_asin);
    sweep("integral_even_vs_oracle_n1_20", 1, 20,
          [](long n) { return integral_even(n).value; }, IntegrandKind::even_power_over_asin);
    sweep("integral_invsq_vs_oracle_k1_15", 1, 15,
          [](long k) { return integral_invsq(k).value; }, IntegrandKind::power_over_asin_sq);
    sweep("integral_log_vs_oracle_n1_15", 1, 15,
          [](long n) { return integral_log(n).value; }, IntegrandKind::power_over_log);

    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

// Max over sample points of |numeric derivative - integrand| scaled so that
// 1e-6 relative with a 1e-9 absolute floor maps to observed <= 1e-6.
template <class F, class G>
CheckResult derivative_check(const std::string& name, F&& antideriv, G&& target,
                             double lo, double hi, double step) {
    double worst = 0;
    for (int p = 0; p < 20; ++p) {
        const double x = lo + (hi - lo) * (p + 0.5) / 20.0;
        const double d = differentiate(antideriv, x, step);
        const double f = target(x);
        worst = std::fmax(worst, std::fabs(d - f) / std::fmax(std::fabs(f), 1e-3));
    }
    return {name, worst, 1e-6, worst <= 1e-6};
}

inline VerifyReport antiderivatives() {
    VerifyReport rep{"antiderivatives", {}, true};
    for (long n : {0L, 1L, 2L, 6L})
        rep.checks.push_back(derivative_check(
            "antideriv_odd_" + std::to_string(n),
            [n](double x) { return antideriv_odd(n, x); },
            [n](double x) { return std::pow(x, static_cast<double>(2 * n + 1)) / std::asin(x); },
            0.30, 0.96, 0.002));
    for (long n : {0L, 1L, 3L, 6L})
        rep.checks.push_back(derivative_check(
            "antideriv_even_" + std::to_string(n),
            [n](double x) { return antideriv_even(n, x); },
            [n](double x) { return std::pow(x, static_cast<double>(2 * n)) / std::asin(x); },
            0.30, 0.96, 0.002));
    for (long k : {1L, 3L, 4L})
        rep.checks.push_back(derivative_check(
            "antideriv_invsq_" + std::to_string(k),
            [k](double x) { return antideriv_invsq(k, x); },
            [k](double x) {
                const double s = std::asin(x);
                return std::pow(x, static_cast<double>(2 * k)) / (s * s);
            },
            0.30, 0.95, 0.002));
    for (long n : {0L, 1L, 2L, 5L})
        rep.checks.push_back(derivative_check(
            "antideriv_log_" + std::to_string(n),
            [n](double x) { return antideriv_log(n, x); },
            [n](double x) { return std::pow(x, static_cast<double>(n)) / std::log1p(x); },
            0.25, 3.0, 0.01));
    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

}  // namespace suites

namespace detail {

inline void print_row_text(std::ostream& out, const CoefficientRow& row) {
    out << "kind=" << row_kind_name(row.kind) << " n=" << row.row_index
        << " scale_log2=" << row.scale_log2 << "\n";
    for (const auto& e : row.entries)
        out << "m=" << e.multiplier << " numerator=" << e.numerator.to_string() << "\n";
}

inline int cmd_triangle(const RunConfig& cfg, std::ostream& out) {
    if (cfg.kind == "ballot") {
        if (cfg.n < 0) throw std::domain_error("triangle: ballot needs --n >= 0");
        std::vector<BigInt> vals;
        for (long k = 0; 2 * k <= cfg.n; ++k) vals.push_back(ballot_coefficient(cfg.n, k));
        if (cfg.format == OutputFormat::json) {
            nlohmann::json entries = nlohmann::json::array();
            for (long k = 0; k < static_cast<long>(vals.size()); ++k)
                entries.push_back({k, vals[static_cast<std::size_t>(k)].to_string()});
            nlohmann::json j{{"kind", "ballot"},
                             {"n", cfg.n},
                             {"scale_log2", 0},
                             {"entries", std::move(entries)}};
            out << j.dump() << "\n";
        } else {
            out << "ballot n=" << cfg.n << ": (";
            for (std::size_t i = 0; i < vals.size(); ++i)
                out << (i ? ", " : "") << vals[i].to_string();
            out << ")\n";
        }
        return 0;
    }

    CoefficientRow row;
    if (cfg.kind == "odd")
        row = odd_row(cfg.n);
    else if (cfg.kind == "even")
        row = even_row(cfg.n);
    else if (cfg.kind == "invsq")
        row = invsq_row(cfg.n);
    else if (cfg.kind == "log")
        row = log_row(cfg.n);
    else
        throw std::domain_error("triangle: unknown --kind " + cfg.kind);

    if (cfg.format == OutputFormat::json) {
        out << nlohmann::json(row).dump() << "\n";
    } else {
        print_row_text(out, row);
    }
    return 0;
}

inline int cmd_integral(const RunConfig& cfg, std::ostream& out) {
    IntegralReport rep;
    rep.n = cfg.n;
    IntegrandKind ikind;
    if (cfg.kind == "odd") {
        rep.op = "integral_odd";
        rep.value = integral_odd(cfg.n).value;
        ikind = IntegrandKind::odd_power_over_asin;
    } else if (cfg.kind == "even") {
        rep.op = "integral_even";
        rep.value = integral_even(cfg.n).value;
        ikind = IntegrandKind::even_power_over_asin;
    } else if (cfg.kind == "invsq") {
        rep.op = "integral_invsq";
        rep.value = integral_invsq(cfg.n).value;
        ikind = IntegrandKind::power_over_asin_sq;
    } else if (cfg.kind == "log") {
        rep.op = "integral_log";
        rep.value = integral_log(cfg.n).value;
        ikind = IntegrandKind::power_over_log;
    } else {
        throw std::domain_error("integral: unknown --kind " + cfg.kind);
    }

    if (cfg.verify) {
        const double quad_tol = std::fmax(1e-13, cfg.tol / 100.0);
        rep.verified = true;
        rep.tol = cfg.tol;
        rep.oracle_value = integrate(integrand(ikind, cfg.n), 0.0, 1.0, quad_tol).value;
        rep.abs_diff = std::fabs(rep.value - rep.oracle_value);
    }

    if (cfg.format == OutputFormat::json) {
        out << nlohmann::json(rep).dump() << "\n";
    } else {
        out << "op=" << rep.op << " n=" << rep.n << " value=" << fmt17(rep.value);
        if (rep.verified)
            out << " oracle_value=" << fmt17(rep.oracle_value)
                << " abs_diff=" << fmt17(rep.abs_diff) << " tol=" << fmt17(rep.tol)
                << " status=" << (rep.abs_diff <= rep.tol ? "ok" : "FAIL");
        out << "\n";
    }
    return (rep.verified && rep.abs_diff > rep.tol) ? 2 : 0;
}

inline void print_report(const RunConfig& cfg, const ConvergenceReport& r,
                         std::ostream& out) {
    if (cfg.format == OutputFormat::json) {
        out << nlohmann::json(r).dump() << "\n";
        return;
    }
    if (cfg.format == OutputFormat::csv) {
        out << "J,partial_sum,raw_error,extrapolated_value,extrapolated_error\n"
            << r.terms_used << ',' << fmt17(r.partial_sum) << ',' << fmt17(r.raw_error)
            << ',' << fmt17(r.extrapolated_value) << ',' << fmt17(r.extrapolated_error)
            << "\n";
        return;
    }
    if (r.theorem_id == 0)
        out << "series=sec2";
    else
        out << "theorem=" << r.theorem_id;
    out << " terms=" << r.terms_used << " partial_sum=" << fmt17(r.partial_sum)
        << " known_limit=" << fmt17(r.known_limit) << " raw_error=" << fmt17(r.raw_error)
        << "\n";
    if (r.extrapolated)
        out << "extrapolated: p=" << fmt17(r.tail_exponent_fit)
            << " value=" << fmt17(r.extrapolated_value)
            << " error=" << fmt17(r.extrapolated_error) << "\n";
    else
        out << "extrapolated: none\n";
}

inline int cmd_theorem(const RunConfig& cfg, std::ostream& out) {
    if (cfg.terms > 20000 && !cfg.allow_large)
        throw std::domain_error(
            "theorem: budgets above 20000 do O(J^2) work; pass --allow-large to confirm");
    EvaluateOptions opts;
    opts.extrapolate = cfg.extrapolate;
    opts.parallel_chunk = cfg.chunk;
    const ConvergenceReport r = evaluate_theorem(cfg.theorem_id, cfg.terms, opts);
    print_report(cfg, r, out);
    return 0;
}

inline int cmd_series_sec2(const RunConfig& cfg, std::ostream& out) {
    if (cfg.terms > 20000 && !cfg.allow_large)
        throw std::domain_error(
            "series-sec2: budgets above 20000 do O(J^2) work; pass --allow-large to confirm");
    EvaluateOptions opts;
    opts.extrapolate = cfg.extrapolate;
    opts.parallel_chunk = cfg.chunk;
    const ConvergenceReport r = derived_series_sec2(cfg.terms, opts);
    print_report(cfg, r, out);
    return 0;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    VerifyReport rep;
    if (cfg.suite == "rows")
        rep = suites::rows();
    else if (cfg.suite == "integrals")
        rep = suites::integrals();
    else if (cfg.suite == "antiderivatives")
        rep = suites::antiderivatives();
    else
        throw std::domain_error("verify: unknown --suite " + cfg.suite);

    if (cfg.format == OutputFormat::json) {
        out << nlohmann::json(rep).dump() << "\n";
    } else {
        out << "suite=" << rep.suite << "\n";
        for (const auto& c : rep.checks)
            out << "check=" << c.name << " observed=" << fmt17(c.observed)
                << " tol=" << fmt17(c.tol) << " status=" << (c.pass ? "ok" : "FAIL")
                << "\n";
        out << "result=" << (rep.pass ? "pass" : "fail") << "\n";
    }
    return rep.pass ? 0 : 2;
}

}  // namespace detail

// Entry point shared by the binary and by in-process tests.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"closed forms, coefficient triangles and double series built on the sine integral"};
    app.require_subcommand(1);

    RunConfig cfg;
    bool as_json = false, as_csv = false;

    auto add_format = [&](CLI::App* sub, bool with_csv) {
        auto* jf = sub->add_flag("--json", as_json, "emit JSON");
        if (with_csv) sub->add_flag("--csv", as_csv, "emit CSV")->excludes(jf);
    };

    auto* tri = app.add_subcommand("triangle", "dump an exact coefficient row");
    tri->add_option("--kind", cfg.kind, "ballot|invsq|odd|even|log")->required();
    tri->add_option("--n", cfg.n, "row index")->required();
    add_format(tri, false);

    auto* integ = app.add_subcommand("integral", "closed-form definite integral on [0,1]");
    integ->add_option("--kind", cfg.kind, "odd|even|invsq|log")->required();
    integ->add_option("--n", cfg.n, "index")->required();
    integ->add_flag("--verify", cfg.verify, "compare against the quadrature oracle");
    integ->add_option("--tol", cfg.tol, "verification tolerance (default 1e-9)");
    add_format(integ, false);

    auto* thm = app.add_subcommand("theorem", "evaluate a theorem series");
    thm->add_option("--id", cfg.theorem_id, "1|2|3")->required()->check(CLI::Range(1, 3));
    thm->add_option("--terms", cfg.terms, "outer term budget J")->required();
    thm->add_flag("--extrapolate", cfg.extrapolate, "fit and add the algebraic tail");
    thm->add_option("--chunk", cfg.chunk, "parallel chunk size (default 64)");
    thm->add_flag("--allow-large", cfg.allow_large, "permit budgets above 20000");
    add_format(thm, true);

    auto* sec2 = app.add_subcommand("series-sec2", "evaluate the derived series over x^(2j+2)/asin^2");
    sec2->add_option("--terms", cfg.terms, "outer term budget J")->required();
    sec2->add_flag("--extrapolate", cfg.extrapolate, "fit and add the algebraic tail");
    sec2->add_option("--chunk", cfg.chunk, "parallel chunk size (default 64)");
    sec2->add_flag("--allow-large", cfg.allow_large, "permit budgets above 20000");
    add_format(sec2, true);

    auto* ver = app.add_subcommand("verify", "run an oracle verification sweep");
    ver->add_option("--suite", cfg.suite, "antiderivatives|integrals|rows")->required();
    add_format(ver, false);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 64;
    }

    cfg.format = as_json ? OutputFormat::json : as_csv ? OutputFormat::csv : OutputFormat::text;

    try {
        if (tri->parsed()) {
            cfg.subcommand = "triangle";
            return detail::cmd_triangle(cfg, out);
        }
        if (integ->parsed()) {
            cfg.subcommand = "integral";
            return detail::cmd_integral(cfg, out);
        }
        if (thm->parsed()) {
            cfg.subcommand = "theorem";
            return detail::cmd_theorem(cfg, out);
        }
        if (sec2->parsed()) {
            cfg.subcommand = "series-sec2";
            return detail::cmd_series_sec2(cfg, out);
        }
        if (ver->parsed()) {
            cfg.subcommand = "verify";
            return detail::cmd_verify(cfg, out);
        }
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 64;
    } catch (const QuadratureError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 64;
}

}  // namespace cli
}  // namespace sinint
