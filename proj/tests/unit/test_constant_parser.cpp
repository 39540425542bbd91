#include <doctest.h>

#include "explog/constant_parser.hpp"
#include "explog/parse_error.hpp"

using namespace explog;

namespace {

const SymbolicConstant kGamma{Generator::euler_gamma()};
const SymbolicConstant kLogMu{Generator::log_mu()};
const SymbolicConstant kLog2{Generator::log2()};
const SymbolicConstant kZeta2{Generator::zeta(2)};

std::size_t error_position(const std::string& text) {
    try {
        parse_constant(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    FAIL("expected ParseError for " << text);
    return 0;
}

}  // namespace

TEST_CASE("names and literals") {
    CHECK(parse_constant("gamma") == kGamma);
    CHECK(parse_constant("log(mu)") == kLogMu);
    CHECK(parse_constant("log(2)") == kLog2);
    CHECK(parse_constant("log(4)") == SymbolicConstant(2) * kLog2);
    CHECK(parse_constant("sqrt(pi)") == SymbolicConstant(Generator::sqrt_pi()));
    CHECK(parse_constant("zeta(7)") == SymbolicConstant(Generator::zeta(7)));
    CHECK(parse_constant("-3/4") == SymbolicConstant(Rational(-3, 4)));
    CHECK(parse_constant("0").is_zero());
}

TEST_CASE("display conveniences") {
    CHECK(parse_constant("delta") == kGamma + kLogMu);
    CHECK(parse_constant("pi^2") == SymbolicConstant(6) * kZeta2);
    CHECK(parse_constant("pi^4/36") == kZeta2.pow(2));
    CHECK(parse_constant("1/6*pi^2") == kZeta2);
}

TEST_CASE("arithmetic and precedence") {
    CHECK(parse_constant("1 + 2*3") == SymbolicConstant(7));
    CHECK(parse_constant("(1 + 2)*3") == SymbolicConstant(9));
    CHECK(parse_constant("[1 + 2]*3") == SymbolicConstant(9));
    CHECK(parse_constant("-gamma^2") == -kGamma.pow(2));
    CHECK(parse_constant("2^3*2") == SymbolicConstant(16));
    CHECK(parse_constant("(gamma + log(mu))^2 / 2") ==
          SymbolicConstant(Rational(1, 2)) * (kGamma + kLogMu).pow(2));
    CHECK(parse_constant("-(delta^3 + 1/2*pi^2*delta - (-2*zeta(3)))") ==
          -((kGamma + kLogMu).pow(3) + SymbolicConstant(3) * kZeta2 * (kGamma + kLogMu) +
            SymbolicConstant(2) * SymbolicConstant(Generator::zeta(3))));
}

TEST_CASE("rejections") {
    CHECK_THROWS_AS(parse_constant("pi"), ParseError);
    CHECK_THROWS_AS(parse_constant("pi^3"), ParseError);
    CHECK_THROWS_AS(parse_constant("gamma / gamma"), ParseError);
    CHECK_THROWS_AS(parse_constant("1/0"), ParseError);
    CHECK_THROWS_AS(parse_constant("2^3^2"), ParseError);
    CHECK_THROWS_AS(parse_constant("zeta(1)"), ParseError);
    CHECK_THROWS_AS(parse_constant("log(3)"), ParseError);
    CHECK_THROWS_AS(parse_constant("gamma^65"), ParseError);
}

TEST_CASE("error positions") {
    CHECK(error_position("gamma +") == 7);
    CHECK(error_position("gamma + + 1") == 8);
    CHECK(error_position("log(x)") == 4);
    CHECK(error_position("(gamma") == 6);
    CHECK(error_position("gamma ) ") == 6);
    CHECK(error_position("2 * foo") == 4);
    CHECK(error_position("pi^3") == 3);
    CHECK(error_position("1/0") == 1);
}
