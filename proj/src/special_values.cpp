#include "explog/special_values.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace explog {

ArgPoint ArgPoint::from_twice(long twice) {
    if (twice < 1) {
        throw std::domain_error("argument point must be a positive integer or half-integer (twice = " +
                                std::to_string(twice) + ")");
    }
    return ArgPoint(twice);
}

ArgPoint ArgPoint::from_rational(const Rational& r) {
    Rational doubled = r * Rational(2);
    if (!doubled.is_integer() || doubled.sign() <= 0 || doubled.num() > 1'000'000) {
        throw std::domain_error("argument " + r.str() + " is not on the positive half-integer lattice");
    }
    return ArgPoint(doubled.num().convert_to<long>());
}

Rational harmonic(unsigned n) {
    Rational sum;
    for (unsigned k = 1; k <= n; ++k) sum += Rational(1, k);
    return sum;
}

Rational odd_harmonic(unsigned n) {
    Rational sum;
    for (unsigned k = 1; k <= n; ++k) sum += Rational(1, 2 * static_cast<std::int64_t>(k) - 1);
    return sum;
}

BigInt double_factorial_odd(unsigned n) {
    BigInt r = 1;
    for (unsigned k = 1; k <= n; ++k) r *= 2 * k - 1;
    return r;
}

namespace {

/// Exact zeta(z, x) for x on the half-integer lattice, z >= 2.
SymbolicConstant hurwitz_exact(unsigned z, ArgPoint x) {
    const int iz = static_cast<int>(z);
    SymbolicConstant zeta_z(Generator::zeta(iz));
    Rational partial;
    if (x.is_integer()) {
        // zeta(z, n+1) = zeta(z) - sum_{k=1}^{n} k^-z
        long n = x.twice() / 2 - 1;
        for (long k = 1; k <= n; ++k) partial += Rational(k).pow(-iz);
        return zeta_z - SymbolicConstant(partial);
    }
    // zeta(z, 1/2) = (2^z - 1) zeta(z); zeta(z, n+1/2) drops (k+1/2)^-z for k < n
    long n = (x.twice() - 1) / 2;
    for (long k = 0; k < n; ++k) partial += Rational(2 * k + 1, 2).pow(-iz);
    Rational scale = Rational(2).pow(iz) - Rational(1);
    return SymbolicConstant(scale) * zeta_z - SymbolicConstant(partial);
}

SymbolicConstant digamma_exact(ArgPoint x) {
    SymbolicConstant minus_gamma = -SymbolicConstant(Generator::euler_gamma());
    if (x.is_integer()) {
        return minus_gamma + SymbolicConstant(harmonic(static_cast<unsigned>(x.twice() / 2 - 1)));
    }
    auto n = static_cast<unsigned>((x.twice() - 1) / 2);
    return minus_gamma - SymbolicConstant(2) * SymbolicConstant(Generator::log2()) +
           SymbolicConstant(Rational(2) * odd_harmonic(n));
}

}  // namespace

bool SpecialValueTable::lookup(const Key& key, SymbolicConstant& out) const {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it == memo_.end()) return false;
    out = it->second;
    return true;
}

const SymbolicConstant& SpecialValueTable::store(const Key& key, SymbolicConstant value) {
    std::unique_lock lock(mutex_);
    return memo_.try_emplace(key, std::move(value)).first->second;
}

SymbolicConstant SpecialValueTable::psi_deriv(unsigned m, ArgPoint x) {
    Key key{Fn::Psi, m, x.twice()};
    SymbolicConstant cached;
    if (lookup(key, cached)) return cached;
    SymbolicConstant value;
    if (m == 0) {
        value = digamma_exact(x);
    } else {
        // psi^{(m)}(x) = (-1)^{m+1} m! zeta(m+1, x)
        Rational sign = m % 2 == 1 ? Rational(1) : Rational(-1);
        value = SymbolicConstant(sign * Rational(factorial(m))) * hurwitz_exact(m + 1, x);
    }
    return store(key, std::move(value));
}

SymbolicConstant SpecialValueTable::gamma(ArgPoint x) {
    if (x.is_integer()) {
        return SymbolicConstant(Rational(factorial(static_cast<unsigned>(x.twice() / 2 - 1))));
    }
    // Gamma(n + 1/2) = (2n-1)!! sqrt(pi) / 2^n
    auto n = static_cast<unsigned>((x.twice() - 1) / 2);
    Rational scale = Rational(double_factorial_odd(n)) / Rational(2).pow(static_cast<int>(n));
    return SymbolicConstant(scale) * SymbolicConstant(Generator::sqrt_pi());
}

SymbolicConstant SpecialValueTable::gamma_deriv(unsigned k, ArgPoint x) {
    Key key{Fn::GammaDeriv, k, x.twice()};
    SymbolicConstant cached;
    if (lookup(key, cached)) return cached;
    if (k == 0) return store(key, gamma(x));
    const unsigned j = k - 1;
    SymbolicConstant value;
    for (unsigned i = 0; i <= j; ++i) {
        value += SymbolicConstant(Rational(binomial(j, i))) * psi_deriv(j - i, x) * gamma_deriv(i, x);
    }
    return store(key, std::move(value));
}

SpecialValueTable& default_table() {
    static SpecialValueTable table;
    return table;
}

}  // namespace explog
