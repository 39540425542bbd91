#include <doctest.h>

#include <cmath>

#include "explog/catalog.hpp"
#include "explog/constant_parser.hpp"
#include "explog/evaluator.hpp"
#include "explog/numeric.hpp"
#include "test_support.hpp"

using namespace explog;
using explog::testing::close_rel;

namespace {

const SymbolicConstant kGamma{Generator::euler_gamma()};
const SymbolicConstant kLogMu{Generator::log_mu()};

IntegralSpec plain(ArgPoint s, unsigned n, std::optional<double> mu = std::nullopt) {
    return IntegralSpec{{PrefactorTerm{0, Rational(1), 0}}, s, n, mu};
}

}  // namespace

TEST_CASE("eval_In examples") {
    CHECK(eval_In(0) == SymbolicConstant(1));
    CHECK(eval_In(1) == -kGamma);
    CHECK(eval_In(2) == parse_constant("zeta(2) + gamma^2"));
    for (unsigned n = 0; n <= 10; ++n) CHECK(eval_In(n) == gamma_deriv_at(n, ArgPoint::integer(1)));
}

TEST_CASE("eval_Jn examples") {
    CHECK(eval_Jn(0) == ClosedForm::single(Rational(1), SymbolicConstant(1)));
    CHECK(eval_Jn(1) == ClosedForm::single(Rational(1), parse_constant("-delta")));
    CHECK(eval_Jn(2) == ClosedForm::single(Rational(1), parse_constant("pi^2/6 + delta^2")));
    CHECK(eval_Jn(3) == ClosedForm::single(Rational(1), parse_constant("-(delta^3 + 3*zeta(2)*delta + 2*zeta(3))")));
    CHECK(render(eval_Jn(1)) == "mu^(-1)*(-gamma - log(mu))");
    CHECK(render(eval_Jn(2), {true}) == "mu^(-1)*(delta^2 + 1/6*pi^2)");
}

TEST_CASE("J_n at unit mu reduces to I_n") {
    for (unsigned n = 0; n <= 8; ++n) {
        ClosedForm j = eval_Jn(n);
        REQUIRE(j.terms().size() == 1);
        CHECK(j.terms().begin()->first == Rational(1));
        CHECK(j.at_unit_mu() == eval_In(n));
    }
}

TEST_CASE("eval_general examples") {
    SUBCASE("4.352.1 shape") {
        for (long t = 1; t <= 8; ++t) {
            ArgPoint s = ArgPoint::from_twice(t);
            SymbolicConstant expected = gamma_at(s) * (psi_deriv_at(0, s) - kLogMu);
            CHECK(eval_general(plain(s, 1)) == ClosedForm::single(s.value(), expected));
        }
    }
    SUBCASE("4.352.2 shape") {
        for (unsigned n = 0; n <= 5; ++n) {
            SymbolicConstant expected =
                SymbolicConstant(Rational(factorial(n))) * (SymbolicConstant(harmonic(n)) - kGamma - kLogMu);
            CHECK(eval_general(plain(ArgPoint::integer(n + 1), 1)) == ClosedForm::single(Rational(n + 1), expected));
        }
    }
    SUBCASE("4.352.3 shape") {
        for (unsigned n = 0; n <= 5; ++n) {
            Rational scale = Rational(double_factorial_odd(n)) / Rational(2).pow(static_cast<int>(n));
            SymbolicConstant expected = SymbolicConstant(scale) * parse_constant("sqrt(pi)") *
                                        (SymbolicConstant(Rational(2) * odd_harmonic(n)) -
                                         parse_constant("gamma + log(4) + log(mu)"));
            CHECK(eval_general(plain(ArgPoint::half_integer(n), 1)) ==
                  ClosedForm::single(Rational(n) + Rational(1, 2), expected));
        }
    }
    SUBCASE("unit mu gives Gamma'(s)") {
        for (long t = 1; t <= 8; ++t) {
            ArgPoint s = ArgPoint::from_twice(t);
            CHECK(eval_general(plain(s, 1, 1.0)) == ClosedForm::single(Rational(0), gamma_deriv_at(1, s)));
        }
    }
    SUBCASE("4.353.2 with mu-weighted prefactor") {
        for (unsigned n = 0; n <= 5; ++n) {
            Rational shift = Rational(n) + Rational(1, 2);
            IntegralSpec spec{{PrefactorTerm{1, Rational(1), 1}, PrefactorTerm{0, -shift, 0}},
                              ArgPoint::half_integer(n), 1, std::nullopt};
            Rational scale = Rational(double_factorial_odd(n)) / Rational(2).pow(static_cast<int>(n));
            CHECK(eval_general(spec) == ClosedForm::single(shift, SymbolicConstant(scale) * parse_constant("sqrt(pi)")));
        }
    }
}

TEST_CASE("4.353.1 psi terms cancel to a pure Gamma value") {
    for (long t = 1; t <= 12; ++t) {
        ArgPoint nu = ArgPoint::from_twice(t);
        IntegralSpec spec{{PrefactorTerm{1, Rational(1), 0}, PrefactorTerm{0, -nu.value(), 0}}, nu, 1, 1.0};
        ClosedForm form = eval_general(spec);
        REQUIRE(form.terms().size() == 1);
        const SymbolicConstant& c = form.terms().begin()->second;
        CHECK_FALSE(c.contains(Generator::Kind::EulerGamma));
        CHECK_FALSE(c.contains(Generator::Kind::LogMu));
        CHECK_FALSE(c.contains(Generator::Kind::Zeta));
        CHECK_FALSE(c.contains(Generator::Kind::Log2));
        CHECK(c == gamma_at(nu));
    }
}

TEST_CASE("IntegralSpec validation") {
    IntegralSpec empty{{}, ArgPoint::integer(1), 0, std::nullopt};
    CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
    CHECK_THROWS_AS(eval_general(empty), std::invalid_argument);
    CHECK_THROWS_AS(plain(ArgPoint::integer(1), 0, 0.0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(plain(ArgPoint::integer(1), 0, -2.0).validate(), std::invalid_argument);
    CHECK_NOTHROW(plain(ArgPoint::integer(1), 0, 2.0).validate());
}

TEST_CASE("closed forms evaluate consistently with quadrature") {
    Bindings b = numeric::default_constants().bindings();
    for (long t : {1, 2, 3, 6}) {
        for (unsigned n = 0; n <= 4; ++n) {
            for (double mu : {0.5, 1.0, 2.0, 10.0}) {
                IntegralSpec spec{{PrefactorTerm{2, Rational(3), 0}, PrefactorTerm{0, Rational(-1, 2), 0}},
                                  ArgPoint::from_twice(t), n, std::nullopt};
                double closed = eval_general(spec).evaluate(mu, b);
                auto q = numeric::quadrature(spec, mu);
                INFO("s=" << t << "/2 n=" << n << " mu=" << mu);
                REQUIRE(q.converged);
                CHECK(close_rel(closed, q.value, 1e-9));
            }
        }
    }
}

TEST_CASE("closed form rendering and JSON") {
    ClosedForm f;
    f.add(Rational(1, 2), parse_constant("sqrt(pi)"));
    f.add(Rational(3, 2), parse_constant("-gamma"));
    CHECK(render(f) == "mu^(-1/2)*(sqrt(pi)) + mu^(-3/2)*(-gamma)");
    CHECK(to_json(f).dump() ==
          R"j({"terms":[{"mu_exponent":"1/2","constant":{"terms":[{"coeff":"1/1","powers":{"sqrt(pi)":1}}]}},)j"
          R"j({"mu_exponent":"3/2","constant":{"terms":[{"coeff":"-1/1","powers":{"gamma":1}}]}}]})j");
    f.add(Rational(1, 2), parse_constant("-sqrt(pi)"));
    CHECK(f.terms().size() == 1);
    CHECK(render(ClosedForm::single(Rational(0), parse_constant("zeta(2)"))) == "zeta(2)");
}

TEST_CASE("catalog entries") {
    REQUIRE(catalog().size() == 9);
    const auto& constants = numeric::default_constants();
    Bindings b = constants.bindings();

    const auto& e331 = catalog_entry("4.331.1");
    CHECK(eval_general(e331.builder({})).evaluate(1.0, b) == doctest::Approx(-constants.gamma_const).epsilon(1e-15));
    CHECK(e331.printed_form({}).at_unit_mu() == -kGamma);

    const auto& e3531 = catalog_entry("4.353.1");
    CatalogParams half{0, ArgPoint::half_integer(0)};
    CHECK(eval_general(e3531.builder(half)) == ClosedForm::single(Rational(0), parse_constant("sqrt(pi)")));

    CHECK_THROWS_AS(catalog_entry("4.999.9"), std::out_of_range);
}

TEST_CASE("catalog run over a reduced grid") {
    CatalogGrid grid;
    grid.mu_values = {1.0, 2.0};
    grid.max_n = 2;
    grid.nu_values = {ArgPoint::integer(1), ArgPoint::half_integer(1)};
    auto checks = run_catalog(grid, numeric::default_constants());
    // 3 plain + 2*(2 nu) + 2*(3 n) at two mus, unit-mu entries once per nu
    CHECK(checks.size() == 2 * 3 + 2 * 2 + 2 * 3 + 2 * 3 + 2 + 2 + 2 * 3);
    for (const auto& c : checks) {
        INFO(c.id << " mu=" << c.mu);
        CHECK(c.passed(grid.pass_rel_err));
        CHECK(c.evaluator_form.empty());
    }
    auto report = catalog_report(checks, grid.pass_rel_err);
    REQUIRE(report.is_array());
    CHECK(report[0]["id"] == "4.331.1");
    CHECK(report[0]["status"] == "pass");
    std::vector<std::string> keys;
    for (const auto& [k, v] : report[0].items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"id", "params", "symbolic_equal", "numeric_rel_err", "status"});
}
