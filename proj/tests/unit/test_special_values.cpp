#include <doctest.h>

#include <numeric>
#include <thread>

#include "explog/constant_parser.hpp"
#include "explog/numeric.hpp"
#include "explog/special_values.hpp"
#include "test_support.hpp"

using namespace explog;
using explog::testing::close_rel;

namespace {

const SymbolicConstant kGamma{Generator::euler_gamma()};
const SymbolicConstant kLog2{Generator::log2()};
const SymbolicConstant kSqrtPi{Generator::sqrt_pi()};

std::vector<ArgPoint> lattice(long max_twice) {
    std::vector<ArgPoint> out;
    for (long t = 1; t <= max_twice; ++t) out.push_back(ArgPoint::from_twice(t));
    return out;
}

}  // namespace

TEST_CASE("ArgPoint validation") {
    CHECK_THROWS_AS(ArgPoint::from_twice(0), std::domain_error);
    CHECK_THROWS_AS(ArgPoint::from_twice(-3), std::domain_error);
    CHECK_THROWS_AS(ArgPoint::from_rational(Rational(1, 3)), std::domain_error);
    CHECK_THROWS_AS(ArgPoint::from_rational(Rational(-1, 2)), std::domain_error);
    CHECK(ArgPoint::from_rational(Rational(7, 2)).twice() == 7);
    CHECK(ArgPoint::half_integer(3).value() == Rational(7, 2));
    CHECK(ArgPoint::integer(4).is_integer());
    CHECK_THROWS_AS(ArgPoint::half_integer(0).shifted(-1), std::domain_error);
}

TEST_CASE("harmonic, odd harmonic and double factorial") {
    CHECK(harmonic(0) == Rational(0));
    // Direct summation over a common denominator.
    for (unsigned n = 1; n <= 12; ++n) {
        long long den = 1;
        for (long long k = 1; k <= n; ++k) den = std::lcm(den, k);
        long long num = 0;
        for (long long k = 1; k <= n; ++k) num += den / k;
        CHECK(harmonic(n) == Rational(num, den));
    }
    CHECK(harmonic(4) == Rational(25, 12));
    CHECK(odd_harmonic(0) == Rational(0));
    CHECK(odd_harmonic(3) == Rational(1) + Rational(1, 3) + Rational(1, 5));
    CHECK(double_factorial_odd(0) == 1);
    CHECK(double_factorial_odd(3) == 15);
    CHECK(double_factorial_odd(6) == 10395);
}

TEST_CASE("psi_deriv_at examples") {
    CHECK(psi_deriv_at(0, ArgPoint::integer(1)) == -kGamma);
    CHECK(psi_deriv_at(1, ArgPoint::integer(1)) == SymbolicConstant(Generator::zeta(2)));
    CHECK(psi_deriv_at(1, ArgPoint::integer(1)) == parse_constant("pi^2/6"));
    CHECK(psi_deriv_at(2, ArgPoint::integer(1)) == SymbolicConstant(-2) * SymbolicConstant(Generator::zeta(3)));
    CHECK(psi_deriv_at(0, ArgPoint::half_integer(3)) ==
          -kGamma - SymbolicConstant(2) * kLog2 +
              SymbolicConstant(Rational(2) * (Rational(1) + Rational(1, 3) + Rational(1, 5))));
    CHECK(psi_deriv_at(0, ArgPoint::half_integer(0)) == -kGamma - SymbolicConstant(2) * kLog2);
}

TEST_CASE("gamma_at examples") {
    CHECK(gamma_at(ArgPoint::integer(1)) == SymbolicConstant(1));
    CHECK(gamma_at(ArgPoint::integer(5)) == SymbolicConstant(24));
    CHECK(gamma_at(ArgPoint::half_integer(0)) == kSqrtPi);
    // (2*3 - 1)!! / 2^3 computed directly
    long long dfact = 1;
    for (long long k = 1; k <= 5; k += 2) dfact *= k;
    CHECK(dfact == 15);
    CHECK(gamma_at(ArgPoint::half_integer(3)) == SymbolicConstant(Rational(dfact, 8)) * kSqrtPi);
}

TEST_CASE("gamma_deriv_at examples") {
    const ArgPoint one = ArgPoint::integer(1);
    CHECK(gamma_deriv_at(0, one) == SymbolicConstant(1));
    CHECK(gamma_deriv_at(1, one) == -kGamma);
    CHECK(gamma_deriv_at(2, one) == parse_constant("zeta(2) + gamma^2"));
    CHECK(gamma_deriv_at(3, one) == parse_constant("-gamma^3 - 1/2*pi^2*gamma - 2*zeta(3)"));
    SymbolicConstant g4 = gamma_deriv_at(4, one);
    CHECK(grade(g4) == Grade::homogeneous(4));
    // Value checked against quadrature in test_evaluator / acceptance.
    CHECK(render(g4) == "gamma^4 + 6*gamma^2*zeta(2) + 8*gamma*zeta(3) + 3*zeta(2)^2 + 6*zeta(4)");
}

TEST_CASE("I_n is homogeneous of weight n") {
    for (unsigned n = 0; n <= 10; ++n) {
        CHECK(grade(gamma_deriv_at(n, ArgPoint::integer(1))) == Grade::homogeneous(n));
    }
}

TEST_CASE("psi functional equation holds exactly") {
    for (const auto& x : lattice(20)) {
        SymbolicConstant diff = psi_deriv_at(0, x.shifted(1)) - psi_deriv_at(0, x);
        CHECK(diff == SymbolicConstant(x.value().reciprocal()));
    }
}

TEST_CASE("polygamma shift identity holds exactly") {
    for (unsigned m = 1; m <= 6; ++m) {
        for (const auto& x : lattice(20)) {
            SymbolicConstant diff = psi_deriv_at(m, x.shifted(1)) - psi_deriv_at(m, x);
            Rational expected = Rational(factorial(m)) * x.value().pow(-static_cast<int>(m + 1));
            if (m % 2 == 1) expected = -expected;
            CHECK(diff == SymbolicConstant(expected));
        }
    }
}

TEST_CASE("symbolic polygamma agrees with the numeric oracle") {
    Bindings b = numeric::default_constants().bindings();
    for (unsigned m = 0; m <= 6; ++m) {
        for (const auto& x : lattice(14)) {
            double symbolic = evaluate(psi_deriv_at(m, x), b);
            double numeric = numeric::digamma_m(m, x.to_double());
            // Closed forms at large x cancel heavily; bound by the sum of term magnitudes.
            double magnitude = 0;
            for (const auto& t : psi_deriv_at(m, x).terms()) {
                magnitude += std::abs(evaluate(SymbolicConstant::from_terms({t}), b));
            }
            INFO("m=" << m << " x=" << x.str() << " magnitude=" << magnitude);
            CHECK(std::abs(symbolic - numeric) <= 1e-12 * std::max(1.0, std::abs(numeric)) + 1e-15 * magnitude);
        }
    }
}

TEST_CASE("gamma_deriv_at agrees with finite differences of numeric Gamma") {
    Bindings b = numeric::default_constants().bindings();
    for (unsigned k = 0; k <= 4; ++k) {
        for (const auto& x : {ArgPoint::integer(1), ArgPoint::integer(2), ArgPoint::half_integer(2),
                              ArgPoint::half_integer(3)}) {
            double exact = evaluate(gamma_deriv_at(k, x), b);
            double fd = numeric::gamma_derivative_fd(k, x.to_double());
            INFO("k=" << k << " x=" << x.str() << " exact=" << exact << " fd=" << fd);
            CHECK(close_rel(exact, fd, 1e-6));
        }
    }
}

TEST_CASE("memo table is write-once under concurrent use") {
    SpecialValueTable table;
    std::vector<SymbolicConstant> results(4);
    std::vector<std::thread> workers;
    for (int i = 0; i < 4; ++i) {
        workers.emplace_back([&, i] { results[i] = table.gamma_deriv(6, ArgPoint::half_integer(2)); });
    }
    for (auto& w : workers) w.join();
    for (const auto& r : results) CHECK(r == results.front());
    CHECK(table.gamma_deriv(6, ArgPoint::half_integer(2)) == gamma_deriv_at(6, ArgPoint::half_integer(2)));
}
