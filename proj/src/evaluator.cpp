#include "explog/evaluator.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace explog {

void IntegralSpec::validate() const {
    if (prefactor.empty()) throw std::invalid_argument("integral spec has an empty prefactor");
    if (mu_value && !(*mu_value > 0.0)) throw std::invalid_argument("decay rate mu must be positive");
}

namespace {

std::string describe_prefactor(const std::vector<PrefactorTerm>& terms) {
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms) {
        bool negative = t.coeff.sign() < 0;
        out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        std::string body;
        if (t.mu_power != 0) body = t.mu_power == 1 ? "mu" : "mu^" + std::to_string(t.mu_power);
        if (t.x_power > 0) {
            if (!body.empty()) body += "*";
            body += t.x_power == 1 ? "x" : "x^" + std::to_string(t.x_power);
        }
        Rational mag = t.coeff.abs();
        if (body.empty()) {
            out << mag.str();
        } else if (mag == Rational(1)) {
            out << body;
        } else {
            out << mag.str() << "*" << body;
        }
    }
    return out.str();
}

}  // namespace

std::string IntegralSpec::describe() const {
    std::ostringstream out;
    out << "p(x) = " << describe_prefactor(prefactor) << ", s = " << s.str() << ", n = " << log_power
        << ", mu = ";
    if (mu_value) {
        out << *mu_value;
    } else {
        out << "symbolic";
    }
    return out.str();
}

ClosedForm ClosedForm::single(Rational mu_exponent, SymbolicConstant constant) {
    ClosedForm f;
    f.add(mu_exponent, constant);
    return f;
}

void ClosedForm::add(const Rational& mu_exponent, const SymbolicConstant& constant) {
    if (constant.is_zero()) return;
    auto it = terms_.find(mu_exponent);
    if (it == terms_.end()) {
        terms_.emplace(mu_exponent, constant);
        return;
    }
    it->second += constant;
    if (it->second.is_zero()) terms_.erase(it);
}

ClosedForm& ClosedForm::operator+=(const ClosedForm& rhs) {
    for (const auto& [e, c] : rhs.terms_) add(e, c);
    return *this;
}

SymbolicConstant ClosedForm::at_unit_mu() const {
    SymbolicConstant total;
    for (const auto& [e, c] : terms_) total += c.substitute(Generator::log_mu(), SymbolicConstant());
    return total;
}

double ClosedForm::evaluate(double mu, const Bindings& bindings) const {
    Bindings b = bindings;
    b[Generator::log_mu()] = std::log(mu);
    double total = 0.0;
    for (const auto& [e, c] : terms_) {
        total += std::pow(mu, -e.to_double()) * explog::evaluate(c, b);
    }
    return total;
}

std::string render(const ClosedForm& form, const RenderOptions& options) {
    if (form.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : form.terms()) {
        if (!out.empty()) out += " + ";
        if (e.is_zero()) {
            out += form.terms().size() == 1 ? render(c, options) : "(" + render(c, options) + ")";
        } else {
            out += "mu^(" + (-e).str() + ")*(" + render(c, options) + ")";
        }
    }
    return out;
}

nlohmann::ordered_json to_json(const ClosedForm& form) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : form.terms()) {
        terms.push_back({{"mu_exponent", e.canonical_str()}, {"constant", to_json(c)}});
    }
    return {{"terms", terms}};
}

SymbolicConstant eval_In(unsigned n) {
    return gamma_deriv_at(n, ArgPoint::integer(1));
}

ClosedForm eval_Jn(unsigned n) {
    // (1/mu) * sum_m C(n,m) I_m (-log mu)^{n-m}
    const SymbolicConstant minus_log_mu = -SymbolicConstant(Generator::log_mu());
    SymbolicConstant total;
    for (unsigned m = 0; m <= n; ++m) {
        total += SymbolicConstant(Rational(binomial(n, m))) * eval_In(m) * minus_log_mu.pow(n - m);
    }
    return ClosedForm::single(Rational(1), total);
}

ClosedForm eval_general(const IntegralSpec& spec) {
    spec.validate();
    const unsigned n = spec.log_power;
    const SymbolicConstant minus_log_mu = -SymbolicConstant(Generator::log_mu());
    ClosedForm result;
    for (const auto& term : spec.prefactor) {
        ArgPoint shifted = spec.s.shifted(term.x_power);
        // d^n/ds^n [mu^{-s} Gamma(s)] = mu^{-s} sum_k C(n,k) (-log mu)^{n-k} Gamma^{(k)}(s)
        SymbolicConstant constant;
        for (unsigned k = 0; k <= n; ++k) {
            constant += SymbolicConstant(Rational(binomial(n, k))) * minus_log_mu.pow(n - k) *
                        gamma_deriv_at(k, shifted);
        }
        result.add(shifted.value() - Rational(term.mu_power), SymbolicConstant(term.coeff) * constant);
    }
    if (spec.mu_value && *spec.mu_value == 1.0) {
        return ClosedForm::single(Rational(0), result.at_unit_mu());
    }
    return result;
}

}  // namespace explog
