#include "explog/integrand.hpp"

#include <map>
#include <optional>

#include "lexer.hpp"

namespace explog {

namespace {

using detail::Token;
using detail::TokenCursor;
using Kind = IntegrandAst::Kind;

IntegrandAst leaf(Kind kind, Rational value, std::size_t pos) {
    return IntegrandAst{kind, std::move(value), {}, pos};
}

IntegrandAst node(Kind kind, std::vector<IntegrandAst> children, std::size_t pos) {
    return IntegrandAst{kind, Rational(0), std::move(children), pos};
}

class IntegrandParser {
public:
    explicit IntegrandParser(std::string_view text) : cur_(detail::tokenize(text, "+-*/^()")) {}

    IntegrandAst parse() {
        IntegrandAst ast = expr();
        if (cur_.peek().kind != Token::Kind::End) cur_.fail({"'+'", "'-'", "'*'", "end of input"});
        return ast;
    }

private:
    IntegrandAst expr() {
        IntegrandAst lhs = term();
        while (cur_.peek().is('+') || cur_.peek().is('-')) {
            const Token& op = cur_.next();
            IntegrandAst rhs = term();
            lhs = node(op.is('+') ? Kind::Add : Kind::Sub, {std::move(lhs), std::move(rhs)}, op.pos);
        }
        return lhs;
    }

    IntegrandAst term() {
        IntegrandAst lhs = factor();
        while (cur_.peek().is('*')) {
            std::size_t pos = cur_.next().pos;
            IntegrandAst rhs = factor();
            lhs = node(Kind::Mul, {std::move(lhs), std::move(rhs)}, pos);
        }
        return lhs;
    }

    Rational unsigned_integer() {
        return Rational(BigInt(cur_.expect_number().text));
    }

    Rational rational(bool allow_sign) {
        bool negative = allow_sign && cur_.accept('-');
        Rational value = unsigned_integer();
        if (cur_.peek().is('/')) {
            cur_.next();
            const Token& den = cur_.expect_number();
            if (BigInt(den.text) == 0) throw ParseError(den.pos, {"nonzero denominator"}, "'0'");
            value /= Rational(BigInt(den.text));
        }
        return negative ? -value : value;
    }

    IntegrandAst factor() {
        const Token& t = cur_.peek();
        const std::size_t pos = t.pos;
        if (t.kind == Token::Kind::Number || t.is('-')) {
            if (t.is('-') && cur_.peek(1).kind != Token::Kind::Number) {
                cur_.next();
                cur_.fail({"integer"});
            }
            return leaf(Kind::Number, rational(true), pos);
        }
        if (cur_.accept('(')) {
            IntegrandAst inner = expr();
            cur_.expect(')');
            return node(Kind::Group, {std::move(inner)}, pos);
        }
        if (t.is_ident("x")) {
            cur_.next();
            if (!cur_.accept('^')) return leaf(Kind::X, Rational(1), pos);
            if (cur_.accept('(')) {
                Rational e = rational(true);
                cur_.expect(')');
                return leaf(Kind::XPower, e, pos);
            }
            if (cur_.peek().kind != Token::Kind::Number) cur_.fail({"'('", "integer"});
            return leaf(Kind::XPower, unsigned_integer(), pos);
        }
        if (t.is_ident("exp")) {
            cur_.next();
            cur_.expect('(');
            if (!cur_.peek().is('-')) cur_.fail({"'-' (only exp(-c*x) is supported)"});
            cur_.next();
            Rational rate(1);
            if (cur_.peek().kind == Token::Kind::Number) {
                rate = rational(false);
                cur_.accept('*');
            }
            cur_.expect_ident("x");
            cur_.expect(')');
            return leaf(Kind::Exp, rate, pos);
        }
        if (t.is_ident("log")) {
            cur_.next();
            cur_.expect('(');
            cur_.expect_ident("x");
            cur_.expect(')');
            Rational power(1);
            if (cur_.accept('^')) power = unsigned_integer();
            return leaf(Kind::Log, power, pos);
        }
        if (t.kind == Token::Kind::Ident) {
            throw UnsupportedIntegrand(
                pos, "'" + t.text + "' is not part of the integrand class (x, x^(r), exp(-c*x), log(x)^k)");
        }
        cur_.fail({"rational", "'x'", "'exp'", "'log'", "'('"});
    }

    TokenCursor cur_;
};

struct Mono {
    Rational coeff{1};
    Rational x_power{0};
    std::optional<Rational> rate;
    unsigned log_power = 0;
};

std::string describe(const Mono& m) {
    std::string out = m.coeff.str();
    if (!m.x_power.is_zero()) out += " * x^(" + m.x_power.str() + ")";
    if (m.rate) out += " * exp(-" + m.rate->str() + "*x)";
    if (m.log_power > 0) out += " * log(x)^" + std::to_string(m.log_power);
    return out;
}

std::vector<Mono> expand(const IntegrandAst& ast) {
    switch (ast.kind) {
        case Kind::Number: return {Mono{ast.value, 0, std::nullopt, 0}};
        case Kind::X: return {Mono{1, 1, std::nullopt, 0}};
        case Kind::XPower: return {Mono{1, ast.value, std::nullopt, 0}};
        case Kind::Exp: return {Mono{1, 0, ast.value, 0}};
        case Kind::Log: {
            if (ast.value.num() > 64) throw UnsupportedIntegrand(ast.pos, "log power above 64");
            return {Mono{1, 0, std::nullopt, ast.value.num().convert_to<unsigned>()}};
        }
        case Kind::Group: return expand(ast.children.at(0));
        case Kind::Add:
        case Kind::Sub: {
            auto lhs = expand(ast.children.at(0));
            auto rhs = expand(ast.children.at(1));
            for (auto& m : rhs) {
                if (ast.kind == Kind::Sub) m.coeff = -m.coeff;
                lhs.push_back(std::move(m));
            }
            return lhs;
        }
        case Kind::Mul: {
            auto lhs = expand(ast.children.at(0));
            auto rhs = expand(ast.children.at(1));
            std::vector<Mono> out;
            for (const auto& a : lhs) {
                for (const auto& b : rhs) {
                    if (a.rate && b.rate) {
                        throw UnsupportedIntegrand(ast.pos, "more than one exp factor in '" + print(ast) + "'");
                    }
                    out.push_back(Mono{a.coeff * b.coeff, a.x_power + b.x_power, a.rate ? a.rate : b.rate,
                                       a.log_power + b.log_power});
                }
            }
            return out;
        }
    }
    return {};
}

}  // namespace

IntegrandAst parse_integrand(std::string_view text) {
    return IntegrandParser(text).parse();
}

std::string print(const IntegrandAst& ast) {
    switch (ast.kind) {
        case Kind::Number: return ast.value.str();
        case Kind::X: return "x";
        case Kind::XPower: return "x^(" + ast.value.str() + ")";
        case Kind::Exp: return ast.value == Rational(1) ? "exp(-x)" : "exp(-" + ast.value.str() + "*x)";
        case Kind::Log: return ast.value == Rational(1) ? "log(x)" : "log(x)^" + ast.value.str();
        case Kind::Add: return print(ast.children.at(0)) + " + " + print(ast.children.at(1));
        case Kind::Sub: return print(ast.children.at(0)) + " - " + print(ast.children.at(1));
        case Kind::Mul: return print(ast.children.at(0)) + " * " + print(ast.children.at(1));
        case Kind::Group: return "(" + print(ast.children.at(0)) + ")";
    }
    return {};
}

NormalizedIntegrand normalize(const IntegrandAst& ast) {
    // Combine like terms first so that cancelling pieces do not trip the checks.
    std::map<std::tuple<Rational, std::optional<Rational>, unsigned>, Rational> combined;
    for (const auto& m : expand(ast)) combined[{m.x_power, m.rate, m.log_power}] += m.coeff;

    std::vector<Mono> monos;
    for (const auto& [key, coeff] : combined) {
        if (!coeff.is_zero()) monos.push_back(Mono{coeff, std::get<0>(key), std::get<1>(key), std::get<2>(key)});
    }
    if (monos.empty()) throw UnsupportedIntegrand(ast.pos, "integrand is identically zero");

    const Mono& first = monos.front();
    for (const auto& m : monos) {
        if (!m.rate) {
            throw UnsupportedIntegrand(ast.pos, "term '" + describe(m) + "' has no exp(-c*x) factor");
        }
        if (m.rate->sign() <= 0) {
            throw UnsupportedIntegrand(ast.pos, "decay rate in exp(-" + m.rate->str() + "*x) must be positive");
        }
        if (first.rate && *m.rate != *first.rate) {
            throw UnsupportedIntegrand(ast.pos, "terms '" + describe(first) + "' and '" + describe(m) +
                                                    "' have different exp factors");
        }
        if (m.log_power != first.log_power) {
            throw UnsupportedIntegrand(ast.pos, "terms '" + describe(first) + "' and '" + describe(m) +
                                                    "' have different log(x) powers");
        }
    }

    Rational lowest = first.x_power;
    for (const auto& m : monos) lowest = std::min(lowest, m.x_power);
    Rational s = lowest + Rational(1);
    if (s.sign() <= 0) {
        throw UnsupportedIntegrand(ast.pos, "x^(" + lowest.str() + ") is not integrable at 0 (need exponent > -1)");
    }
    std::optional<ArgPoint> point;
    try {
        point = ArgPoint::from_rational(s);
    } catch (const std::domain_error&) {
        throw UnsupportedIntegrand(ast.pos, "x^(" + lowest.str() +
                                                ") is off the half-integer lattice; only integer and half-integer "
                                                "exponents have closed forms");
    }

    std::vector<PrefactorTerm> prefactor;
    for (auto it = monos.rbegin(); it != monos.rend(); ++it) {
        Rational offset = it->x_power - lowest;
        if (!offset.is_integer() || offset.num() > 64) {
            throw UnsupportedIntegrand(ast.pos, "term '" + describe(*it) + "' is not an integer power of x away from '" +
                                                    describe(monos.front()) + "'");
        }
        prefactor.push_back(PrefactorTerm{offset.num().convert_to<unsigned>(), it->coeff, 0});
    }
    Rational mu = *first.rate;
    return NormalizedIntegrand{IntegralSpec{std::move(prefactor), *point, first.log_power, mu.to_double()}, mu};
}

}  // namespace explog
