#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "explog/rational.hpp"
#include "explog/special_values.hpp"
#include "explog/symbolic.hpp"

namespace explog {

/// coeff * mu^mu_power * x^x_power
struct PrefactorTerm {
    unsigned x_power = 0;
    Rational coeff{1};
    int mu_power = 0;

    friend bool operator==(const PrefactorTerm&, const PrefactorTerm&) = default;
};

/// Integral over (0, inf) of p(x) x^{s-1} e^{-mu x} (ln x)^n dx.
struct IntegralSpec {
    std::vector<PrefactorTerm> prefactor;
    ArgPoint s;
    unsigned log_power = 0;
    /// nullopt keeps mu symbolic.
    std::optional<double> mu_value;

    /// Throws std::invalid_argument on an empty prefactor or non-positive mu.
    void validate() const;
    /// "p(x) = x - 1/2, s = 1/2, n = 1, mu = 1"
    std::string describe() const;

    friend bool operator==(const IntegralSpec&, const IntegralSpec&) = default;
};

/// Exact value as a finite sum of mu^{-e} * c_e, keyed by e. Zero constants
/// are never stored.
class ClosedForm {
public:
    ClosedForm() = default;
    static ClosedForm single(Rational mu_exponent, SymbolicConstant constant);

    const std::map<Rational, SymbolicConstant>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Rational& mu_exponent, const SymbolicConstant& constant);
    ClosedForm& operator+=(const ClosedForm& rhs);
    friend ClosedForm operator+(ClosedForm a, const ClosedForm& b) { return a += b; }

    /// Specializes mu = 1: log(mu) -> 0 and every mu power -> 1.
    SymbolicConstant at_unit_mu() const;

    /// Binds log(mu) to ln(mu) and mu^{-e} to mu^{-e}; the remaining generators
    /// come from `bindings`.
    double evaluate(double mu, const Bindings& bindings) const;

    friend bool operator==(const ClosedForm&, const ClosedForm&) = default;

private:
    std::map<Rational, SymbolicConstant> terms_;
};

/// e.g. "mu^(-1)*(-gamma - log(mu))"; a form at mu-exponent 0 renders as its
/// constant alone.
std::string render(const ClosedForm& form, const RenderOptions& options = {});
/// {"terms":[{"mu_exponent":"1/1","constant":{...}}, ...]}
nlohmann::ordered_json to_json(const ClosedForm& form);

/// I_n = integral of e^{-x} (ln x)^n = Gamma^{(n)}(1).
SymbolicConstant eval_In(unsigned n);

/// J_n(mu) = integral of e^{-mu x} (ln x)^n, by expanding
/// (ln y - ln mu)^n over I_m.
ClosedForm eval_Jn(unsigned n);

/// d^n/ds^n [mu^{-s} Gamma(s)] applied term by term over the prefactor.
/// When spec.mu_value is exactly 1 the result is specialized to mu = 1.
ClosedForm eval_general(const IntegralSpec& spec);

}  // namespace explog
