#pragma once

#include <map>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "explog/rational.hpp"
#include "explog/symbolic.hpp"

namespace explog {

/// A point s = twice/2 on the positive half-integer lattice.
class ArgPoint {
public:
    /// Throws std::domain_error unless twice >= 1.
    static ArgPoint from_twice(long twice);
    static ArgPoint integer(long n) { return from_twice(2 * n); }
    /// n + 1/2
    static ArgPoint half_integer(long n) { return from_twice(2 * n + 1); }
    /// Throws std::domain_error when r is not a positive multiple of 1/2.
    static ArgPoint from_rational(const Rational& r);

    long twice() const { return twice_; }
    bool is_integer() const { return twice_ % 2 == 0; }
    Rational value() const { return Rational(twice_, 2); }
    double to_double() const { return static_cast<double>(twice_) / 2.0; }
    /// Adds an integer; throws if the result leaves the lattice.
    ArgPoint shifted(long k) const { return from_twice(twice_ + 2 * k); }
    std::string str() const { return value().str(); }

    friend auto operator<=>(const ArgPoint&, const ArgPoint&) = default;

private:
    explicit ArgPoint(long twice) : twice_(twice) {}
    long twice_;
};

Rational harmonic(unsigned n);
/// sum_{k=1}^{n} 1/(2k-1)
Rational odd_harmonic(unsigned n);
/// (2n-1)!!, with (-1)!! = 1.
BigInt double_factorial_odd(unsigned n);

/// Memoized exact values of Gamma, psi and their derivatives on the
/// half-integer lattice. Entries are write-once; concurrent readers are
/// safe and a duplicate computation under contention yields the same value.
class SpecialValueTable {
public:
    /// psi^{(m)}(x)
    SymbolicConstant psi_deriv(unsigned m, ArgPoint x);
    SymbolicConstant gamma(ArgPoint x);
    /// Gamma^{(k)}(x), by G_{j+1} = sum_i C(j,i) psi^{(j-i)}(x) G_i.
    SymbolicConstant gamma_deriv(unsigned k, ArgPoint x);

private:
    enum class Fn { Psi, GammaDeriv };
    using Key = std::tuple<Fn, unsigned, long>;

    bool lookup(const Key& key, SymbolicConstant& out) const;
    const SymbolicConstant& store(const Key& key, SymbolicConstant value);

    mutable std::shared_mutex mutex_;
    std::map<Key, SymbolicConstant> memo_;
};

/// Process-wide table used by the free functions below.
SpecialValueTable& default_table();

inline SymbolicConstant psi_deriv_at(unsigned m, ArgPoint x) { return default_table().psi_deriv(m, x); }
inline SymbolicConstant gamma_at(ArgPoint x) { return default_table().gamma(x); }
inline SymbolicConstant gamma_deriv_at(unsigned k, ArgPoint x) { return default_table().gamma_deriv(k, x); }

}  // namespace explog
