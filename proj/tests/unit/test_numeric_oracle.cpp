#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "explog/evaluator.hpp"
#include "explog/numeric.hpp"
#include "test_support.hpp"

using namespace explog;
using namespace explog::numeric;
using explog::testing::close_rel;

namespace {

IntegralSpec plain(long s_twice, unsigned n) {
    return IntegralSpec{{PrefactorTerm{0, Rational(1), 0}}, ArgPoint::from_twice(s_twice), n, std::nullopt};
}

/// Integral of t e^{-t} exp(-e^{-t}) over the real line, which equals gamma.
/// Plain trapezoid on a fixed window; shares nothing with the library.
double gamma_by_log_substitution() {
    const double h = 1.0 / 64;
    double sum = 0.0;
    for (double t = -8.0; t <= 60.0; t += h) sum += t * std::exp(-t - std::exp(-t));
    return sum * h;
}

double ulp_distance(double a, double b) {
    return std::abs(a - b) / (std::nextafter(std::abs(b), INFINITY) - std::abs(b));
}

}  // namespace

TEST_CASE("constants table") {
    ConstantsTable t = compute_constants(12);
    // 0.57721566490153286060651209008240243...
    CHECK(ulp_distance(t.gamma_const, 0.57721566490153286060651209) <= 2.0);
    CHECK(t.gamma_const == doctest::Approx(gamma_by_log_substitution()).epsilon(1e-12));

    CHECK(t.zeta_consts.at(2) == doctest::Approx(1.64493406684822643).epsilon(1e-15));
    double pi_sq_over_6 = std::pow(t.sqrt_pi_const, 4) / 6.0;
    CHECK(std::abs(t.zeta_consts.at(2) - pi_sq_over_6) < 1e-14);
    CHECK(t.zeta_consts.at(12) - 1.0 < 3e-4);
    CHECK(t.zeta_consts.at(12) > 1.0);
    // Known values: zeta(3) (Apery), zeta(4) = pi^4/90.
    CHECK(ulp_distance(t.zeta_consts.at(3), 1.2020569031595942854) <= 2.0);
    CHECK(ulp_distance(t.zeta_consts.at(4), std::pow(std::numbers::pi, 4) / 90) <= 2.0);
    CHECK(t.max_zeta() == 12);
    CHECK_THROWS_AS(compute_constants(1), std::domain_error);
}

TEST_CASE("hurwitz zeta") {
    const auto& t = default_constants();
    CHECK(std::abs(hurwitz_zeta(2, 1) - t.zeta_consts.at(2)) < 1e-14);
    CHECK(hurwitz_zeta(2, 0.5) == doctest::Approx(3 * t.zeta_consts.at(2)).epsilon(1e-12));

    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> q_dist(1e-3, 10.0);
    std::uniform_real_distribution<double> z_dist(1.5, 9.0);
    for (int i = 0; i < 300; ++i) {
        double q = q_dist(rng);
        double z = z_dist(rng);
        double telescoped = hurwitz_zeta(z, q) - hurwitz_zeta(z, q + 1);
        CHECK(close_rel(telescoped, std::pow(q, -z), 1e-12));
        int k = std::uniform_int_distribution<int>(2, 10)(rng);
        double half = hurwitz_zeta(k, 0.5);
        CHECK(close_rel(half, (std::pow(2.0, k) - 1) * t.zeta_consts.at(k), 1e-12));
    }
    CHECK_THROWS_AS(hurwitz_zeta(1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), std::domain_error);
}

TEST_CASE("polygamma values") {
    const auto& t = default_constants();
    CHECK(std::abs(digamma_m(0, 1) + t.gamma_const) < 1e-13);
    CHECK(close_rel(digamma_m(1, 1), t.zeta_consts.at(2), 1e-12));
    CHECK(close_rel(digamma_m(2, 1), -2 * t.zeta_consts.at(3), 1e-12));
    CHECK_THROWS_AS(digamma_m(0, 0.0), std::domain_error);
    CHECK_THROWS_AS(digamma_m(0, -1.0), std::domain_error);
}

TEST_CASE("polygamma recurrence on random arguments") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> log_x(std::log(1e-3), std::log(1e3));
    for (int i = 0; i < 400; ++i) {
        double x = std::exp(log_x(rng));
        unsigned m = std::uniform_int_distribution<unsigned>(0, 6)(rng);
        double lhs = digamma_m(m, x + 1) - digamma_m(m, x);
        double fact = std::tgamma(m + 1.0);
        double rhs = (m % 2 == 0 ? 1.0 : -1.0) * fact * std::pow(x, -(m + 1.0));
        INFO("m=" << m << " x=" << x);
        // Absolute floor scaled to the larger term guards the psi(x+1) ~ psi(x) cancellation.
        double scale = std::max({std::abs(rhs), std::abs(digamma_m(m, x)), 1.0});
        CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
    }
}

TEST_CASE("digamma against an independent series") {
    // psi(x) = -gamma + sum_{k>=0} (1/(k+1) - 1/(k+x)), summed with a tail estimate.
    const double g = default_constants().gamma_const;
    for (double x : {0.25, 0.5, 0.75, 1.5, 2.5, 3.75, 7.0}) {
        long double s = 0;
        const long K = 2'000'000;
        for (long k = K - 1; k >= 0; --k) s += 1.0L / (k + 1) - 1.0L / (k + x);
        s += (x - 1) / (K + 0.5L * x);  // tail ~ (x-1)/K
        CHECK(close_rel(digamma_m(0, x), static_cast<double>(-g + s), 1e-11));
    }
}

TEST_CASE("numeric Gamma satisfies the functional equation") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> dist(1e-6, 50.0);
    for (int i = 0; i < 500; ++i) {
        long double x = dist(rng);
        long double ratio = gamma_fn(x + 1) / (x * gamma_fn(x));
        CHECK(std::abs(static_cast<double>(ratio) - 1.0) < 1e-12);
    }
    CHECK(static_cast<double>(gamma_fn(5)) == doctest::Approx(24).epsilon(1e-15));
    CHECK(static_cast<double>(gamma_fn(0.5L)) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-15));
    CHECK(static_cast<double>(log_gamma(100)) == doctest::Approx(std::lgamma(100.0)).epsilon(1e-14));
}

TEST_CASE("quadrature examples") {
    auto r = quadrature(plain(2, 1), 1.0);
    CHECK(r.converged);
    CHECK(std::abs(r.value + 0.5772156649) < 1e-10);

    auto pure = quadrature(plain(2, 0), 3.0);
    CHECK(pure.converged);
    CHECK(close_rel(pure.value, 1.0 / 3.0, 1e-12));

    const auto& t = default_constants();
    auto second = quadrature(plain(2, 2), 1.0);
    double oracle = t.zeta_consts.at(2) + t.gamma_const * t.gamma_const;
    CHECK(close_rel(second.value, oracle, 1e-10));
    CHECK(close_rel(second.value, 1.9781119906, 1e-10));
}

TEST_CASE("quadrature error estimate shrinks until convergence") {
    for (long twice : {1, 2, 3, 7, 10}) {
        for (unsigned n = 0; n <= 5; ++n) {
            for (double mu : {0.5, 1.0, 2.0, 10.0}) {
                auto r = quadrature(plain(twice, n), mu, {1e-10});
                INFO("s=" << twice << "/2 n=" << n << " mu=" << mu);
                REQUIRE(r.converged);
                CHECK(r.abs_error_estimate <= 1e-10 * (1 + std::abs(r.value)));
                for (std::size_t i = 1; i < r.refinements.size(); ++i) {
                    CHECK(r.refinements[i] < r.refinements[i - 1]);
                }
            }
        }
    }
}

TEST_CASE("quadrature argument checks and node budget") {
    CHECK_THROWS_AS(quadrature(plain(2, 1), 0.0), std::domain_error);
    CHECK_THROWS_AS(quadrature(plain(2, 1), 1.0, {1e-15}), std::domain_error);
    auto starved = quadrature(plain(2, 1), 1.0, {1e-12, 300});
    CHECK_FALSE(starved.converged);
    CHECK(starved.nodes_used <= 300);
}

TEST_CASE("finite-difference derivatives of Gamma") {
    // Gamma'(2) = 1 - gamma, Gamma''(1) = gamma^2 + pi^2/6
    const double g = default_constants().gamma_const;
    CHECK(close_rel(gamma_derivative_fd(1, 2.0), 1 - g, 1e-9));
    CHECK(close_rel(gamma_derivative_fd(2, 1.0), g * g + std::numbers::pi * std::numbers::pi / 6, 1e-9));
}
