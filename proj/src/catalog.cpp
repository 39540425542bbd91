#include "explog/catalog.hpp"

#include <cmath>
#include <stdexcept>

#include "explog/constant_parser.hpp"

namespace explog {

namespace {

SymbolicConstant sc(const Rational& r) { return SymbolicConstant(r); }

IntegralSpec simple_spec(ArgPoint s, unsigned log_power, std::optional<double> mu = std::nullopt) {
    return IntegralSpec{{PrefactorTerm{0, Rational(1), 0}}, s, log_power, mu};
}

std::string mu_factor(const Rational& mu) {
    return mu == Rational(1) ? "exp(-x)" : "exp(-" + mu.str() + "*x)";
}

std::string x_power(const Rational& exponent) {
    return "x^(" + exponent.str() + ")";
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;

    // Pure J_n(mu) formulas, printed with delta = gamma + ln mu.
    auto jn_entry = [&](std::string id, unsigned n, const char* printed) {
        CatalogEntry e;
        e.id = std::move(id);
        e.param_kind = ParamKind::None;
        e.integrand = [n](const CatalogParams&, const Rational& mu) {
            return mu_factor(mu) + (n == 1 ? " * log(x)" : " * log(x)^" + std::to_string(n));
        };
        e.builder = [n](const CatalogParams&) { return simple_spec(ArgPoint::integer(1), n); };
        SymbolicConstant constant = parse_constant(printed);
        e.printed_form = [constant](const CatalogParams&) { return ClosedForm::single(Rational(1), constant); };
        entries.push_back(std::move(e));
    };
    jn_entry("4.331.1", 1, "-delta");
    jn_entry("4.335.1", 2, "pi^2/6 + delta^2");
    // psi''(1) = -2*zeta(3)
    jn_entry("4.335.3", 3, "-(delta^3 + 1/2*pi^2*delta - (-2*zeta(3)))");

    {
        CatalogEntry e;
        e.id = "4.352.1";
        e.param_kind = ParamKind::ArgNu;
        e.integrand = [](const CatalogParams& p, const Rational& mu) {
            return x_power(p.nu.value() - Rational(1)) + " * " + mu_factor(mu) + " * log(x)";
        };
        e.builder = [](const CatalogParams& p) { return simple_spec(p.nu, 1); };
        e.printed_form = [](const CatalogParams& p) {
            SymbolicConstant c = gamma_at(p.nu) * (psi_deriv_at(0, p.nu) - SymbolicConstant(Generator::log_mu()));
            return ClosedForm::single(p.nu.value(), c);
        };
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "4.352.2";
        e.param_kind = ParamKind::IntegerN;
        e.integrand = [](const CatalogParams& p, const Rational& mu) {
            return x_power(Rational(p.n)) + " * " + mu_factor(mu) + " * log(x)";
        };
        e.builder = [](const CatalogParams& p) { return simple_spec(ArgPoint::integer(p.n + 1), 1); };
        e.printed_form = [](const CatalogParams& p) {
            SymbolicConstant bracket = sc(harmonic(p.n)) - parse_constant("gamma + log(mu)");
            return ClosedForm::single(Rational(p.n + 1), sc(Rational(factorial(p.n))) * bracket);
        };
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "4.352.3";
        e.param_kind = ParamKind::IntegerN;
        e.integrand = [](const CatalogParams& p, const Rational& mu) {
            return x_power(Rational(p.n) - Rational(1, 2)) + " * " + mu_factor(mu) + " * log(x)";
        };
        e.builder = [](const CatalogParams& p) { return simple_spec(ArgPoint::half_integer(p.n), 1); };
        e.printed_form = [](const CatalogParams& p) {
            Rational scale = Rational(double_factorial_odd(p.n)) / Rational(2).pow(static_cast<int>(p.n));
            SymbolicConstant bracket =
                sc(Rational(2) * odd_harmonic(p.n)) - parse_constant("gamma + log(4) + log(mu)");
            return ClosedForm::single(Rational(p.n) + Rational(1, 2),
                                      sc(scale) * parse_constant("sqrt(pi)") * bracket);
        };
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "4.352.4";
        e.param_kind = ParamKind::ArgNu;
        e.unit_mu_only = true;
        e.integrand = [](const CatalogParams& p, const Rational&) {
            return x_power(p.nu.value() - Rational(1)) + " * exp(-x) * log(x)";
        };
        e.builder = [](const CatalogParams& p) { return simple_spec(p.nu, 1, 1.0); };
        e.printed_form = [](const CatalogParams& p) {
            return ClosedForm::single(Rational(0), gamma_deriv_at(1, p.nu));
        };
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "4.353.1";
        e.param_kind = ParamKind::ArgNu;
        e.unit_mu_only = true;
        e.integrand = [](const CatalogParams& p, const Rational&) {
            return "(x - " + p.nu.str() + ") * " + x_power(p.nu.value() - Rational(1)) + " * exp(-x) * log(x)";
        };
        e.builder = [](const CatalogParams& p) {
            return IntegralSpec{{PrefactorTerm{1, Rational(1), 0}, PrefactorTerm{0, -p.nu.value(), 0}},
                                p.nu,
                                1,
                                1.0};
        };
        e.printed_form = [](const CatalogParams& p) { return ClosedForm::single(Rational(0), gamma_at(p.nu)); };
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "4.353.2";
        e.param_kind = ParamKind::IntegerN;
        e.integrand = [](const CatalogParams& p, const Rational& mu) {
            Rational shift = Rational(p.n) + Rational(1, 2);
            std::string slope = mu == Rational(1) ? "x" : mu.str() + "*x";
            return "(" + slope + " - " + shift.str() + ") * " + x_power(Rational(p.n) - Rational(1, 2)) + " * " +
                   mu_factor(mu) + " * log(x)";
        };
        e.builder = [](const CatalogParams& p) {
            Rational shift = Rational(p.n) + Rational(1, 2);
            return IntegralSpec{{PrefactorTerm{1, Rational(1), 1}, PrefactorTerm{0, -shift, 0}},
                                ArgPoint::half_integer(p.n),
                                1,
                                std::nullopt};
        };
        e.printed_form = [](const CatalogParams& p) {
            // (2n-1)!! / (2 mu)^n * sqrt(pi / mu)
            Rational scale = Rational(double_factorial_odd(p.n)) / Rational(2).pow(static_cast<int>(p.n));
            return ClosedForm::single(Rational(p.n) + Rational(1, 2), sc(scale) * parse_constant("sqrt(pi)"));
        };
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<CatalogParams> parameter_points(const CatalogEntry& entry, const CatalogGrid& grid) {
    std::vector<CatalogParams> points;
    switch (entry.param_kind) {
        case ParamKind::None:
            points.push_back({});
            break;
        case ParamKind::IntegerN:
            for (unsigned n = 0; n <= grid.max_n; ++n) points.push_back({n, ArgPoint::integer(1)});
            break;
        case ParamKind::ArgNu:
            for (const auto& nu : grid.nu_values) points.push_back({0, nu});
            break;
    }
    return points;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& id) {
    for (const auto& e : catalog()) {
        if (e.id == id) return e;
    }
    throw std::out_of_range("no catalog entry '" + id + "'");
}

std::vector<CatalogCheck> run_catalog(const CatalogGrid& grid, const numeric::ConstantsTable& constants) {
    if (grid.mu_values.empty()) throw std::invalid_argument("catalog mu grid is empty");
    const Bindings bindings = constants.bindings();
    std::vector<CatalogCheck> checks;
    for (const auto& entry : catalog()) {
        for (const auto& params : parameter_points(entry, grid)) {
            IntegralSpec spec = entry.builder(params);
            ClosedForm evaluated = eval_general(spec);
            ClosedForm printed = entry.printed_form(params);
            bool equal = evaluated == printed;

            std::vector<double> mus = entry.unit_mu_only ? std::vector<double>{1.0} : grid.mu_values;
            for (double mu : mus) {
                CatalogCheck check;
                check.id = entry.id;
                if (entry.param_kind == ParamKind::IntegerN) check.n = params.n;
                if (entry.param_kind == ParamKind::ArgNu) check.nu = params.nu;
                check.mu = mu;
                check.symbolic_equal = equal;
                if (!equal) {
                    check.evaluator_form = render(evaluated);
                    check.printed_form = render(printed);
                }
                check.closed_form_value = evaluated.evaluate(mu, bindings);
                auto quad = numeric::quadrature(spec, mu, {grid.quadrature_tol});
                check.quadrature_value = quad.value;
                check.quadrature_converged = quad.converged;
                double diff = std::abs(check.closed_form_value - quad.value);
                check.numeric_rel_err = quad.value != 0.0 ? diff / std::abs(quad.value) : diff;
                checks.push_back(std::move(check));
            }
        }
    }
    return checks;
}

nlohmann::ordered_json catalog_report(const std::vector<CatalogCheck>& checks, double pass_rel_err) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        if (c.n) params["n"] = *c.n;
        if (c.nu) params["nu"] = c.nu->str();
        params["mu"] = c.mu;
        nlohmann::ordered_json row = {{"id", c.id},
                                      {"params", params},
                                      {"symbolic_equal", c.symbolic_equal},
                                      {"numeric_rel_err", c.numeric_rel_err},
                                      {"status", c.passed(pass_rel_err) ? "pass" : "fail"}};
        if (!c.symbolic_equal) {
            row["evaluator_form"] = c.evaluator_form;
            row["printed_form"] = c.printed_form;
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace explog
