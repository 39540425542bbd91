#include "explog/numeric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "explog/evaluator.hpp"

namespace explog::numeric {

namespace {

using Real = long double;

// B_2, B_4, ..., B_24
constexpr std::array<Real, 12> kBernoulliEven = {
    1.0L / 6.0L,           -1.0L / 30.0L,        1.0L / 42.0L,         -1.0L / 30.0L,
    5.0L / 66.0L,          -691.0L / 2730.0L,    7.0L / 6.0L,          -3617.0L / 510.0L,
    43867.0L / 798.0L,     -174611.0L / 330.0L,  854513.0L / 138.0L,   -236364091.0L / 2730.0L,
};

/// B_{2j} / (2j)! * z (z+1) ... (z+2j-2) * a^{-z-2j+1}, the j-th Euler-Maclaurin correction.
Real em_correction(int j, Real z, Real a) {
    Real rising = 1.0L;
    for (int i = 0; i < 2 * j - 1; ++i) rising *= (z + i);
    Real fact = 1.0L;
    for (int i = 2; i <= 2 * j; ++i) fact *= i;
    return kBernoulliEven[j - 1] / fact * rising * std::pow(a, -z - 2 * j + 1);
}

/// Euler-Maclaurin evaluation of zeta(z, q) with N explicit terms and
/// `corrections` Bernoulli terms.
Real hurwitz_em(Real z, Real q, long N, int corrections) {
    Real head = 0.0L;
    for (long n = N - 1; n >= 0; --n) head += std::pow(n + q, -z);
    const Real a = N + q;
    Real tail = std::pow(a, 1.0L - z) / (z - 1.0L) + 0.5L * std::pow(a, -z);
    for (int j = 1; j <= corrections; ++j) tail += em_correction(j, z, a);
    return head + tail;
}

constexpr int kHurwitzCorrections = 10;

Real hurwitz_ld(Real z, Real q) {
    long N = 8;
    while (true) {
        Real estimate = hurwitz_em(z, q, N, kHurwitzCorrections);
        Real omitted = std::abs(em_correction(kHurwitzCorrections + 1, z, N + q));
        if (omitted < 1e-17L * std::abs(estimate) || N > 1'000'000) return estimate;
        N *= 2;
    }
}

Real digamma_ld(Real x) {
    Real shift = 0.0L;
    while (x < 10.0L) {
        shift -= 1.0L / x;
        x += 1.0L;
    }
    // psi(x) ~ ln x - 1/(2x) - sum_k B_{2k} / (2k x^{2k}), through B_12
    Real series = std::log(x) - 0.5L / x;
    Real x2 = x * x;
    Real xp = x2;
    for (int k = 1; k <= 6; ++k) {
        series -= kBernoulliEven[k - 1] / (2 * k * xp);
        xp *= x2;
    }
    return series + shift;
}

/// Stirling series for log Gamma at x >= 10.
Real stirling(Real x) {
    constexpr Real half_log_two_pi = 0.918938533204672741780329736405617639861L;
    Real sum = (x - 0.5L) * std::log(x) - x + half_log_two_pi;
    Real x2 = x * x;
    Real xp = x;
    for (int k = 1; k <= 10; ++k) {
        sum += kBernoulliEven[k - 1] / (2 * k * (2 * k - 1) * xp);
        xp *= x2;
    }
    return sum;
}

void require_positive(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error(std::string(what) + " requires a positive finite argument");
    }
}

}  // namespace

Bindings ConstantsTable::bindings(double log_mu) const {
    Bindings b;
    b[Generator::euler_gamma()] = gamma_const;
    b[Generator::log_mu()] = log_mu;
    b[Generator::log2()] = log2_const;
    b[Generator::sqrt_pi()] = sqrt_pi_const;
    for (const auto& [k, v] : zeta_consts) b[Generator::zeta(k)] = v;
    return b;
}

ConstantsTable compute_constants(int max_zeta) {
    if (max_zeta < 2) throw std::domain_error("compute_constants requires max_zeta >= 2");
    constexpr long N = 100;
    ConstantsTable table;

    // gamma = H_N - ln N - 1/(2N) + sum_{k=1}^{4} B_{2k} / (2k N^{2k})
    Real harmonic = 0.0L;
    for (long k = N; k >= 1; --k) harmonic += 1.0L / k;
    Real correction = -0.5L / N;
    Real n2 = static_cast<Real>(N) * N;
    Real np = n2;
    for (int k = 1; k <= 4; ++k) {
        correction += kBernoulliEven[k - 1] / (2 * k * np);
        np *= n2;
    }
    table.gamma_const = static_cast<double>(harmonic - std::log(static_cast<Real>(N)) + correction);

    table.log2_const = static_cast<double>(std::log(2.0L));
    table.sqrt_pi_const = static_cast<double>(std::sqrt(std::numbers::pi_v<Real>));
    for (int k = 2; k <= max_zeta; ++k) {
        // sum_{n=1}^{N-1} n^-k plus the tail from N on: zeta(k, 1) with N-1 head terms.
        table.zeta_consts[k] = static_cast<double>(hurwitz_em(k, 1.0L, N - 1, kHurwitzCorrections));
    }
    return table;
}

const ConstantsTable& default_constants() {
    static const ConstantsTable table = compute_constants(12);
    return table;
}

double hurwitz_zeta(double z, double q) {
    if (!(z > 1.0) || !std::isfinite(z)) throw std::domain_error("hurwitz_zeta requires z > 1");
    require_positive(q, "hurwitz_zeta");
    return static_cast<double>(hurwitz_ld(z, q));
}

double digamma_m(unsigned m, double x) {
    require_positive(x, "digamma_m");
    if (m == 0) return static_cast<double>(digamma_ld(x));
    // psi^{(m)}(x) = (-1)^{m+1} m! zeta(m+1, x)
    Real fact = 1.0L;
    for (unsigned i = 2; i <= m; ++i) fact *= i;
    Real sign = m % 2 == 1 ? 1.0L : -1.0L;
    return static_cast<double>(sign * fact * hurwitz_ld(m + 1.0L, x));
}

long double log_gamma(long double x) {
    require_positive(static_cast<double>(x), "log_gamma");
    Real product = 1.0L;
    while (x < 10.0L) {
        product *= x;
        x += 1.0L;
    }
    return stirling(x) - std::log(product);
}

long double gamma_fn(long double x) {
    require_positive(static_cast<double>(x), "gamma_fn");
    Real product = 1.0L;
    while (x < 10.0L) {
        product *= x;
        x += 1.0L;
    }
    return std::exp(stirling(x)) / product;
}

double gamma_derivative_fd(unsigned k, double x) {
    require_positive(x, "gamma_derivative_fd");
    if (k == 0) return static_cast<double>(gamma_fn(x));
    // Stencil must stay clear of the pole at 0.
    const Real h0 = std::min<Real>(0.25L, x / (k + 1.0L));
    constexpr int levels = 6;
    std::array<std::array<Real, levels>, levels> table{};
    std::vector<Real> weights(k + 1);
    for (unsigned j = 0; j <= k; ++j) {
        Real c = 1.0L;
        for (unsigned i = 1; i <= j; ++i) c = c * (k - j + i) / i;
        weights[j] = (j % 2 == 0) ? c : -c;
    }
    for (int level = 0; level < levels; ++level) {
        Real h = h0 / std::pow(2.0L, level);
        Real sum = 0.0L;
        for (unsigned j = 0; j <= k; ++j) {
            sum += weights[j] * gamma_fn(static_cast<Real>(x) + (static_cast<Real>(k) / 2 - j) * h);
        }
        table[level][0] = sum / std::pow(h, static_cast<Real>(k));
        Real factor = 1.0L;
        for (int col = 1; col <= level; ++col) {
            factor *= 4.0L;
            table[level][col] =
                table[level][col - 1] + (table[level][col - 1] - table[level - 1][col - 1]) / (factor - 1.0L);
        }
    }
    return static_cast<double>(table[levels - 1][levels - 1]);
}

QuadratureResult quadrature(const IntegralSpec& spec, double mu_value, const QuadratureOptions& options) {
    spec.validate();
    require_positive(mu_value, "quadrature");
    if (!(options.rel_tol >= 1e-13)) throw std::domain_error("quadrature rel_tol must be >= 1e-13");

    struct Term {
        Real coeff;
        Real a;  // exponent of e^u
    };
    std::vector<Term> terms;
    Real a_min = 1e300L;
    for (const auto& p : spec.prefactor) {
        Real a = spec.s.to_double() + p.x_power;
        terms.push_back({p.coeff.to_long_double() * std::pow(static_cast<Real>(mu_value), p.mu_power), a});
        a_min = std::min(a_min, a);
    }
    const Real mu = mu_value;
    const unsigned n = spec.log_power;

    auto integrand = [&](Real u) {
        Real decay = mu * std::exp(u);
        Real sum = 0.0L;
        for (const auto& t : terms) sum += t.coeff * std::exp(t.a * u - decay);
        return sum * std::pow(u, static_cast<Real>(n));
    };
    auto envelope = [&](Real u) {
        Real decay = mu * std::exp(u);
        Real sum = 0.0L;
        for (const auto& t : terms) sum += std::abs(t.coeff) * std::exp(t.a * u - decay);
        return sum * std::pow(std::max<Real>(std::abs(u), 1.0L), static_cast<Real>(n));
    };

    // Past this point mu e^u > 700 and the integrand is below double range.
    const Real right_cap = std::log(700.0L / mu);
    const Real centre = std::log(a_min / mu);
    const Real poly_peak = -static_cast<Real>(n) / a_min;
    Real peak = 0.0L;
    for (Real u = std::min(centre, poly_peak) - 4.0L; u <= right_cap; u += 0.05L) peak = std::max(peak, envelope(u));
    const Real threshold = options.rel_tol * 1e-3L * peak;

    Real left = std::min(centre, right_cap);
    while (envelope(left) > threshold || left > poly_peak - 1.0L) left -= 0.5L;
    Real right = std::min(centre, right_cap);
    while (right < right_cap && envelope(right) > threshold) right = std::min(right + 0.25L, right_cap);

    QuadratureResult result;
    Real h = 0.5L;
    auto intervals = static_cast<std::size_t>(std::ceil((right - left) / h));
    intervals = std::max<std::size_t>(intervals, 4);
    h = (right - left) / intervals;

    Real sum = 0.5L * (integrand(left) + integrand(right));
    Real abs_sum = 0.5L * (std::abs(integrand(left)) + std::abs(integrand(right)));
    for (std::size_t i = 1; i < intervals; ++i) {
        Real f = integrand(left + i * h);
        sum += f;
        abs_sum += std::abs(f);
    }
    Real estimate = h * sum;
    result.nodes_used = intervals + 1;

    for (int level = 1;; ++level) {
        if (result.nodes_used + intervals > options.max_nodes) break;
        Real mid_sum = 0.0L;
        Real mid_abs = 0.0L;
        for (std::size_t i = 0; i < intervals; ++i) {
            Real f = integrand(left + (i + 0.5L) * h);
            mid_sum += f;
            mid_abs += std::abs(f);
        }
        result.nodes_used += intervals;
        sum += mid_sum;
        abs_sum += mid_abs;
        intervals *= 2;
        h /= 2;
        Real refined = h * sum;
        Real error = std::abs(refined - estimate);
        estimate = refined;
        result.refinements.push_back(static_cast<double>(error));

        Real value = std::abs(refined);
        Real l1 = h * abs_sum;
        Real scale = std::min(1.0L + value, std::max(value, 1e-3L * l1));
        if (level >= 2 && error <= options.rel_tol * scale) {
            result.converged = true;
            break;
        }
    }
    result.value = static_cast<double>(estimate);
    result.abs_error_estimate = result.refinements.empty() ? 0.0 : result.refinements.back();
    return result;
}

}  // namespace explog::numeric
