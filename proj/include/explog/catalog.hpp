#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "explog/evaluator.hpp"
#include "explog/numeric.hpp"

namespace explog {

/// Parameter point for a catalog formula. Which fields are used depends on
/// the entry's ParamKind.
struct CatalogParams {
    unsigned n = 0;
    ArgPoint nu = ArgPoint::integer(1);
};

enum class ParamKind { None, IntegerN, ArgNu };

struct CatalogEntry {
    std::string id;
    /// The integrand in the command-line DSL at a concrete parameter point.
    std::function<std::string(const CatalogParams&, const Rational& mu)> integrand;
    ParamKind param_kind = ParamKind::None;
    /// Formulas stated only at mu = 1 are checked there alone.
    bool unit_mu_only = false;
    std::function<IntegralSpec(const CatalogParams&)> builder;
    /// The closed form as printed in the table, transcribed independently of
    /// the evaluator.
    std::function<ClosedForm(const CatalogParams&)> printed_form;
};

/// The nine table formulas: 4.331.1, 4.335.1, 4.335.3, 4.352.1-4, 4.353.1-2.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& id);

struct CatalogGrid {
    std::vector<double> mu_values{0.5, 1.0, 2.0, 10.0};
    unsigned max_n = 4;
    std::vector<ArgPoint> nu_values{ArgPoint::integer(1),     ArgPoint::integer(2),
                                    ArgPoint::integer(3),     ArgPoint::half_integer(0),
                                    ArgPoint::half_integer(1), ArgPoint::half_integer(3)};
    double quadrature_tol = 1e-10;
    /// Numeric agreement required for a pass.
    double pass_rel_err = 1e-9;
};

struct CatalogCheck {
    std::string id;
    std::optional<unsigned> n;
    std::optional<ArgPoint> nu;
    double mu = 1.0;
    bool symbolic_equal = false;
    double closed_form_value = 0.0;
    double quadrature_value = 0.0;
    double numeric_rel_err = 0.0;
    bool quadrature_converged = false;
    std::string evaluator_form;  // rendered only on a symbolic mismatch
    std::string printed_form;

    bool passed(double pass_rel_err) const {
        return symbolic_equal && quadrature_converged && numeric_rel_err <= pass_rel_err;
    }
};

/// Runs every entry over the grid. Results are ordered by catalog order,
/// then parameter, then mu.
std::vector<CatalogCheck> run_catalog(const CatalogGrid& grid, const numeric::ConstantsTable& constants);

/// One object per check: {id, params, symbolic_equal, numeric_rel_err, status}.
nlohmann::ordered_json catalog_report(const std::vector<CatalogCheck>& checks, double pass_rel_err);

}  // namespace explog
