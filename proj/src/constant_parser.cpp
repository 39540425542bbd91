#include "explog/constant_parser.hpp"

#include "lexer.hpp"

namespace explog {

namespace {

using detail::Token;
using detail::TokenCursor;

constexpr unsigned kMaxExponent = 64;

class ConstantParser {
public:
    explicit ConstantParser(std::string_view text) : cur_(detail::tokenize(text, "+-*/^()[]")) {}

    SymbolicConstant parse() {
        SymbolicConstant value = expr();
        if (cur_.peek().kind != Token::Kind::End) cur_.fail({"'+'", "'-'", "'*'", "'/'", "end of input"});
        return value;
    }

private:
    SymbolicConstant expr() {
        SymbolicConstant value = term();
        while (true) {
            if (cur_.accept('+')) {
                value += term();
            } else if (cur_.accept('-')) {
                value -= term();
            } else {
                return value;
            }
        }
    }

    SymbolicConstant term() {
        SymbolicConstant value = unary();
        while (true) {
            if (cur_.accept('*')) {
                value *= unary();
            } else if (cur_.peek().is('/')) {
                std::size_t at = cur_.next().pos;
                SymbolicConstant divisor = unary();
                auto r = divisor.as_rational();
                if (!r || r->is_zero()) throw ParseError(at, {"nonzero rational divisor"}, "'/'");
                value *= SymbolicConstant(r->reciprocal());
            } else {
                return value;
            }
        }
    }

    SymbolicConstant unary() {
        if (cur_.accept('-')) return -unary();
        return power();
    }

    unsigned exponent() {
        const Token& t = cur_.expect_number();
        if (t.text.size() > 3 || std::stoul(t.text) > kMaxExponent) {
            throw ParseError(t.pos, {"exponent <= " + std::to_string(kMaxExponent)}, "'" + t.text + "'");
        }
        return static_cast<unsigned>(std::stoul(t.text));
    }

    SymbolicConstant power() {
        if (cur_.peek().is_ident("pi")) {
            cur_.next();
            if (!cur_.peek().is('^')) cur_.fail({"'^' (only even powers of pi are representable)"});
            cur_.next();
            const Token& at = cur_.peek();
            unsigned e = exponent();
            if (e % 2 != 0) throw ParseError(at.pos, {"even exponent of pi"}, "'" + at.text + "'");
            return (SymbolicConstant(6) * SymbolicConstant(Generator::zeta(2))).pow(e / 2);
        }
        SymbolicConstant base = primary();
        if (cur_.accept('^')) return base.pow(exponent());
        return base;
    }

    SymbolicConstant primary() {
        const Token& t = cur_.peek();
        if (t.kind == Token::Kind::Number) {
            cur_.next();
            return SymbolicConstant(Rational(BigInt(t.text)));
        }
        if (cur_.accept('(')) {
            SymbolicConstant inner = expr();
            cur_.expect(')');
            return inner;
        }
        if (cur_.accept('[')) {
            SymbolicConstant inner = expr();
            cur_.expect(']');
            return inner;
        }
        if (t.is_ident("gamma")) {
            cur_.next();
            return Generator::euler_gamma();
        }
        if (t.is_ident("delta")) {
            cur_.next();
            return SymbolicConstant(Generator::euler_gamma()) + SymbolicConstant(Generator::log_mu());
        }
        if (t.is_ident("log")) {
            cur_.next();
            cur_.expect('(');
            SymbolicConstant value;
            if (cur_.peek().is_ident("mu")) {
                value = Generator::log_mu();
            } else if (cur_.peek().kind == Token::Kind::Number && cur_.peek().text == "2") {
                value = Generator::log2();
            } else if (cur_.peek().kind == Token::Kind::Number && cur_.peek().text == "4") {
                value = SymbolicConstant(2) * SymbolicConstant(Generator::log2());
            } else {
                cur_.fail({"'mu'", "'2'", "'4'"});
            }
            cur_.next();
            cur_.expect(')');
            return value;
        }
        if (t.is_ident("sqrt")) {
            cur_.next();
            cur_.expect('(');
            cur_.expect_ident("pi");
            cur_.expect(')');
            return Generator::sqrt_pi();
        }
        if (t.is_ident("zeta")) {
            cur_.next();
            cur_.expect('(');
            const Token& k = cur_.expect_number();
            if (k.text.size() > 4 || std::stoi(k.text) < 2) {
                throw ParseError(k.pos, {"integer argument 2..9999"}, "'" + k.text + "'");
            }
            cur_.expect(')');
            return Generator::zeta(std::stoi(k.text));
        }
        cur_.fail({"integer", "'('", "'['", "'-'", "gamma", "delta", "pi^2k", "log(...)", "sqrt(pi)", "zeta(k)"});
    }

    TokenCursor cur_;
};

}  // namespace

SymbolicConstant parse_constant(std::string_view text) {
    return ConstantParser(text).parse();
}

}  // namespace explog
