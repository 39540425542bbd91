#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "explog/evaluator.hpp"
#include "explog/parse_error.hpp"
#include "explog/rational.hpp"

namespace explog {

/// Expression tree of the integrand DSL:
///
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := rational | 'x' ['^' ('(' rational ')' | integer)]
///           | 'exp' '(' '-' [rational ['*']] 'x' ')'
///           | 'log' '(' 'x' ')' ['^' integer] | '(' expr ')'
///   rational := ['-'] integer ['/' integer]
struct IntegrandAst {
    enum class Kind { Number, X, XPower, Exp, Log, Add, Sub, Mul, Group };

    Kind kind = Kind::Number;
    /// Number: the literal. XPower: exponent. Exp: decay rate c in exp(-c*x).
    /// Log: integer power.
    Rational value;
    std::vector<IntegrandAst> children;
    std::size_t pos = 0;  // source offset; ignored by ==

    friend bool operator==(const IntegrandAst& a, const IntegrandAst& b) {
        return a.kind == b.kind && a.value == b.value && a.children == b.children;
    }
};

/// A well-formed integrand outside the supported class.
class UnsupportedIntegrand : public std::runtime_error {
public:
    UnsupportedIntegrand(std::size_t position, const std::string& what)
        : std::runtime_error("unsupported integrand at position " + std::to_string(position) + ": " + what),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

IntegrandAst parse_integrand(std::string_view text);

/// Canonical text; parse_integrand(print(ast)) == ast.
std::string print(const IntegrandAst& ast);

struct NormalizedIntegrand {
    IntegralSpec spec;
    Rational mu;  // exact decay rate; spec.mu_value holds it as a double
};

/// Expands the tree and maps it onto p(x) x^{s-1} e^{-mu x} (ln x)^n.
/// Throws UnsupportedIntegrand naming the offending factor or term.
NormalizedIntegrand normalize(const IntegrandAst& ast);

}  // namespace explog
