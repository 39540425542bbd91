#include "explog/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "explog/catalog.hpp"
#include "explog/evaluator.hpp"
#include "explog/integrand.hpp"
#include "explog/numeric.hpp"

namespace explog::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Rounds to 15 significant digits so reports are stable across platforms.
double fixed_digits(double v) {
    if (!std::isfinite(v)) return v;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return std::strtod(buf, nullptr);
}

std::string sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int report_error(const RunConfig& config, std::ostream& out, std::ostream& err, const std::string& kind,
                 const std::string& message, int code, Json extra = Json::object()) {
    if (config.output == OutputFormat::Json) {
        Json e = {{"kind", kind}, {"message", message}};
        for (auto& [k, v] : extra.items()) e[k] = v;
        emit(out, Json{{"error", e}});
    } else {
        err << "error (" << kind << "): " << message << "\n";
    }
    return code;
}

/// Parses and normalizes; on failure writes the diagnostic and returns nullopt.
std::optional<NormalizedIntegrand> load_integrand(const RunConfig& config, const std::string& text,
                                                  std::ostream& out, std::ostream& err, std::string& printed) {
    try {
        IntegrandAst ast = parse_integrand(text);
        printed = print(ast);
        return normalize(ast);
    } catch (const ParseError& e) {
        Json extra = {{"position", e.position()}, {"expected", e.expected()}, {"found", e.found()}};
        if (config.output == OutputFormat::Text) err << e.diagram(text) << "\n";
        report_error(config, out, err, "syntax", e.what(), kUsageError, extra);
    } catch (const UnsupportedIntegrand& e) {
        if (config.output == OutputFormat::Text) err << ParseError(e.position(), {}, "").diagram(text) << "\n";
        report_error(config, out, err, "unsupported", e.what(), kUsageError, {{"position", e.position()}});
    }
    return std::nullopt;
}

Json spec_json(const NormalizedIntegrand& n) {
    Json prefactor = Json::array();
    for (const auto& t : n.spec.prefactor) {
        prefactor.push_back({{"x_power", t.x_power}, {"coeff", t.coeff.canonical_str()}, {"mu_power", t.mu_power}});
    }
    return {{"prefactor", prefactor},
            {"s", n.spec.s.value().canonical_str()},
            {"n", n.spec.log_power},
            {"mu", n.mu.canonical_str()}};
}

std::string spec_text(const NormalizedIntegrand& n) {
    IntegralSpec shown = n.spec;
    shown.mu_value.reset();
    std::string text = shown.describe();
    return text.substr(0, text.rfind(", mu = ")) + ", mu = " + n.mu.str();
}

}  // namespace

void RunConfig::validate() const {
    if (!(tolerance >= 1e-13)) throw std::invalid_argument("--tol must be >= 1e-13");
    if (mu_grid.empty()) throw std::invalid_argument("mu grid is empty");
    for (double mu : mu_grid) {
        if (!(mu > 0.0) || !std::isfinite(mu)) throw std::invalid_argument("--mu values must be positive");
    }
    if (zeta_max < 2) throw std::invalid_argument("--zeta-max must be >= 2");
}

int cmd_eval(const RunConfig& config, const std::string& integrand, std::ostream& out, std::ostream& err) {
    std::string printed;
    auto normalized = load_integrand(config, integrand, out, err, printed);
    if (!normalized) return kUsageError;
    ClosedForm form = eval_general(normalized->spec);
    RenderOptions render_options{config.paper_style};
    if (config.output == OutputFormat::Json) {
        emit(out, Json{{"integrand", printed},
                       {"spec", spec_json(*normalized)},
                       {"closed_form", to_json(form)},
                       {"text", render(form, render_options)}});
    } else {
        out << "integrand   : " << printed << "\n"
            << "normalized  : " << spec_text(*normalized) << "\n"
            << "closed form : " << render(form, render_options) << "\n";
    }
    return kPass;
}

int cmd_verify(const RunConfig& config, const std::string& integrand, std::ostream& out, std::ostream& err) {
    std::string printed;
    auto normalized = load_integrand(config, integrand, out, err, printed);
    if (!normalized) return kUsageError;
    const double mu = *normalized->spec.mu_value;
    ClosedForm form = eval_general(normalized->spec);
    double closed_value = 0.0;
    try {
        closed_value = form.evaluate(mu, numeric::compute_constants(config.zeta_max).bindings());
    } catch (const UnboundGenerator& e) {
        return report_error(config, out, err, "unbound", std::string(e.what()) + " (raise --zeta-max)",
                            kVerificationFailure);
    }
    auto quad = numeric::quadrature(normalized->spec, mu, {config.tolerance});
    double rel_err = std::abs(closed_value - quad.value) / std::max(std::abs(quad.value), 1e-300);
    bool pass = quad.converged && rel_err <= config.pass_threshold();

    if (config.output == OutputFormat::Json) {
        emit(out, Json{{"integrand", printed},
                       {"spec", spec_json(*normalized)},
                       {"closed_form", to_json(form)},
                       {"text", render(form, {config.paper_style})},
                       {"closed_form_value", fixed_digits(closed_value)},
                       {"quadrature_value", fixed_digits(quad.value)},
                       {"quadrature_error_estimate", fixed_digits(quad.abs_error_estimate)},
                       {"nodes_used", quad.nodes_used},
                       {"converged", quad.converged},
                       {"rel_err", fixed_digits(rel_err)},
                       {"status", pass ? "pass" : "fail"}});
    } else {
        out << "integrand   : " << printed << "\n"
            << "normalized  : " << spec_text(*normalized) << "\n"
            << "closed form : " << render(form, {config.paper_style}) << "\n"
            << "value       : " << num(closed_value) << "\n"
            << "quadrature  : " << num(quad.value) << " (" << quad.nodes_used << " nodes, "
            << (quad.converged ? "converged" : "NOT converged") << ")\n"
            << "rel err     : " << sci(rel_err) << "\n"
            << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kPass : kVerificationFailure;
}

int cmd_catalog(const RunConfig& config, std::ostream& out, std::ostream&) {
    CatalogGrid grid;
    grid.mu_values = config.mu_grid;
    grid.max_n = config.max_n;
    grid.quadrature_tol = config.tolerance;
    grid.pass_rel_err = config.pass_threshold();
    auto checks = run_catalog(grid, numeric::compute_constants(config.zeta_max));
    bool all_pass = std::all_of(checks.begin(), checks.end(),
                                [&](const CatalogCheck& c) { return c.passed(grid.pass_rel_err); });
    if (config.output == OutputFormat::Json) {
        Json report = catalog_report(checks, grid.pass_rel_err);
        for (auto& row : report) row["numeric_rel_err"] = fixed_digits(row["numeric_rel_err"].get<double>());
        emit(out, report);
    } else {
        std::size_t passed = 0;
        for (const auto& c : checks) {
            std::ostringstream params;
            if (c.n) params << "n=" << *c.n << " ";
            if (c.nu) params << "nu=" << c.nu->str() << " ";
            params << "mu=" << num(c.mu);
            bool ok = c.passed(grid.pass_rel_err);
            passed += ok ? 1 : 0;
            out << std::left << std::setw(9) << c.id << std::setw(20) << params.str() << " symbolic="
                << (c.symbolic_equal ? "equal   " : "MISMATCH") << " rel_err=" << sci(c.numeric_rel_err) << "  "
                << (ok ? "PASS" : "FAIL") << "\n";
            if (!c.symbolic_equal) {
                out << "    evaluator: " << c.evaluator_form << "\n    printed:   " << c.printed_form << "\n";
            }
        }
        out << passed << "/" << checks.size() << " checks passed\n";
    }
    return all_pass ? kPass : kVerificationFailure;
}

int cmd_weight(const RunConfig& config, std::ostream& out, std::ostream&) {
    bool all_pass = true;
    Json rows = Json::array();
    for (unsigned n = 0; n <= config.max_n; ++n) {
        SymbolicConstant value = eval_In(n);
        Grade g = grade(value);
        bool ok = g == Grade::homogeneous(Rational(n));
        all_pass = all_pass && ok;
        if (config.output == OutputFormat::Json) {
            rows.push_back({{"n", n},
                            {"constant", render(value, {config.paper_style})},
                            {"grade", g.str()},
                            {"status", ok ? "pass" : "fail"}});
        } else {
            out << "I_" << std::left << std::setw(3) << n << std::setw(18) << g.str() << (ok ? "PASS" : "FAIL")
                << "  " << render(value, {config.paper_style}) << "\n";
        }
    }
    if (config.output == OutputFormat::Json) emit(out, rows);
    return all_pass ? kPass : kVerificationFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closed forms and numeric verification of exp-log integrals", "explog"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    RunConfig config;
    std::vector<double> mus;
    std::optional<unsigned> max_n;
    bool json = false;
    std::string integrand;

    app.add_option("--tol", config.tolerance, "quadrature tolerance (pass threshold is 10x)")->capture_default_str();
    app.add_option("--mu", mus, "decay rate for the catalog grid (repeatable)")->take_all()->allow_extra_args(false);
    app.add_option("--max-n", max_n, "largest n (catalog: 4, weight: 10)");
    app.add_flag("--json", json, "machine-readable output");
    app.add_option("--zeta-max", config.zeta_max, "largest k with a numeric zeta(k)")->capture_default_str();
    app.add_flag("--paper-style", config.paper_style, "render with delta and pi^2");

    auto* eval = app.add_subcommand("eval", "print the closed form of an integrand");
    eval->add_option("integrand", integrand, "e.g. \"exp(-2*x) * log(x)^3\"")->required();
    auto* verify = app.add_subcommand("verify", "compare the closed form with quadrature");
    verify->add_option("integrand", integrand, "e.g. \"exp(-x)*log(x)\"")->required();
    auto* catalog_cmd = app.add_subcommand("catalog", "check all table formulas over a parameter grid");
    auto* weight = app.add_subcommand("weight", "grade I_n by weight");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    config.output = json ? OutputFormat::Json : OutputFormat::Text;
    if (!mus.empty()) config.mu_grid = mus;
    config.max_n = max_n.value_or(weight->parsed() ? 10u : 4u);
    try {
        config.validate();
    } catch (const std::invalid_argument& e) {
        return report_error(config, out, err, "usage", e.what(), kUsageError);
    }

    if (eval->parsed()) return cmd_eval(config, integrand, out, err);
    if (verify->parsed()) return cmd_verify(config, integrand, out, err);
    if (catalog_cmd->parsed()) return cmd_catalog(config, out, err);
    return cmd_weight(config, out, err);
}

}  // namespace explog::cli
