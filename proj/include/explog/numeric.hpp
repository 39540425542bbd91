#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "explog/symbolic.hpp"

namespace explog {

struct IntegralSpec;

namespace numeric {

/// Numeric values of the ring generators. Immutable once built.
struct ConstantsTable {
    double gamma_const = 0.0;
    double log2_const = 0.0;
    double sqrt_pi_const = 0.0;
    std::map<int, double> zeta_consts;  // k = 2..max_zeta

    int max_zeta() const { return zeta_consts.empty() ? 1 : zeta_consts.rbegin()->first; }

    /// Bindings for every generator; log(mu) is bound to `log_mu`.
    Bindings bindings(double log_mu = 0.0) const;
};

/// gamma by Euler-Maclaurin acceleration of H_N - ln N; zeta(k) by direct
/// summation plus an Euler-Maclaurin tail. Both at N = 100.
ConstantsTable compute_constants(int max_zeta = 12);

/// Table with the default zeta range, built once on first use.
const ConstantsTable& default_constants();

/// Hurwitz zeta(z, q) for z > 1, q > 0. Throws std::domain_error outside.
double hurwitz_zeta(double z, double q);

/// psi^{(m)}(x) for x > 0.
double digamma_m(unsigned m, double x);

/// log Gamma(x) for x > 0 via the Stirling series after shifting x >= 10.
long double log_gamma(long double x);
/// Gamma(x) for x > 0.
long double gamma_fn(long double x);

/// k-th derivative of Gamma at x by central differences with Richardson
/// extrapolation. Independent of the polygamma routines.
double gamma_derivative_fd(unsigned k, double x);

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t nodes_used = 0;
    bool converged = false;
    /// Error estimate after each step halving.
    std::vector<double> refinements;
};

struct QuadratureOptions {
    double rel_tol = 1e-10;
    std::size_t max_nodes = std::size_t{1} << 20;
};

/// Trapezoidal rule for the integral of p(x) x^{s-1} e^{-mu x} (ln x)^n over
/// (0, inf) after the substitution x = e^u, halving the step until two
/// successive estimates agree.
QuadratureResult quadrature(const IntegralSpec& spec, double mu_value, const QuadratureOptions& options = {});

}  // namespace numeric
}  // namespace explog
