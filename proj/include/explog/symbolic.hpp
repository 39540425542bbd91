#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "explog/rational.hpp"

namespace explog {

/// A named transcendental constant. Ordering: gamma < log(mu) < log(2) <
/// sqrt(pi) < zeta(2) < zeta(3) < ...
class Generator {
public:
    enum class Kind { EulerGamma, LogMu, Log2, SqrtPi, Zeta };

    static Generator euler_gamma() { return Generator(Kind::EulerGamma, 0); }
    static Generator log_mu() { return Generator(Kind::LogMu, 0); }
    static Generator log2() { return Generator(Kind::Log2, 0); }
    static Generator sqrt_pi() { return Generator(Kind::SqrtPi, 0); }
    /// Riemann zeta at an integer k >= 2.
    static Generator zeta(int k);

    /// Inverse of name(); nullopt for unknown names.
    static std::optional<Generator> from_name(const std::string& name);

    Kind kind() const { return kind_; }
    int zeta_arg() const { return zeta_arg_; }

    /// "gamma", "log(mu)", "log(2)", "sqrt(pi)", "zeta(k)".
    std::string name() const;

    /// Weight in the gamma/zeta grading; nullopt for log(mu), log(2), sqrt(pi).
    std::optional<int> weight() const;

    friend auto operator<=>(const Generator&, const Generator&) = default;

private:
    Generator(Kind kind, int zeta_arg) : kind_(kind), zeta_arg_(zeta_arg) {}

    Kind kind_;
    int zeta_arg_;
};

/// Generator -> positive exponent; keys sorted by generator order.
using PowerMap = std::map<Generator, unsigned>;

struct Monomial {
    Rational coeff;
    PowerMap powers;

    unsigned degree() const;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lexicographic order: higher total degree first, ties broken by
/// the larger exponent of the earliest generator.
bool graded_lex_before(const PowerMap& a, const PowerMap& b);

class UnboundGenerator : public std::runtime_error {
public:
    explicit UnboundGenerator(const Generator& g)
        : std::runtime_error("no numeric binding for generator " + g.name()), generator_(g) {}
    const Generator& generator() const { return generator_; }

private:
    Generator generator_;
};

using Bindings = std::map<Generator, double>;

/// Polynomial with rational coefficients in the generators. Always stored in
/// canonical form: like terms combined, zero terms dropped, graded-lex order.
/// The empty polynomial is zero.
class SymbolicConstant {
public:
    SymbolicConstant() = default;
    SymbolicConstant(Rational value);  // NOLINT(google-explicit-constructor)
    SymbolicConstant(std::int64_t value) : SymbolicConstant(Rational(value)) {}  // NOLINT
    SymbolicConstant(const Generator& g);  // NOLINT(google-explicit-constructor)

    /// Builds the canonical form of an arbitrary list of monomials.
    static SymbolicConstant from_terms(std::vector<Monomial> terms);

    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool contains(Generator::Kind kind) const;
    /// The rational value if this is a pure rational (possibly zero).
    std::optional<Rational> as_rational() const;

    SymbolicConstant operator-() const;
    friend SymbolicConstant operator+(const SymbolicConstant& a, const SymbolicConstant& b);
    friend SymbolicConstant operator-(const SymbolicConstant& a, const SymbolicConstant& b);
    friend SymbolicConstant operator*(const SymbolicConstant& a, const SymbolicConstant& b);
    SymbolicConstant& operator+=(const SymbolicConstant& rhs) { return *this = *this + rhs; }
    SymbolicConstant& operator-=(const SymbolicConstant& rhs) { return *this = *this - rhs; }
    SymbolicConstant& operator*=(const SymbolicConstant& rhs) { return *this = *this * rhs; }

    /// a^0 = 1, including 0^0.
    SymbolicConstant pow(unsigned k) const;

    /// Replaces every occurrence of `g` by `replacement`.
    SymbolicConstant substitute(const Generator& g, const SymbolicConstant& replacement) const;

    friend bool operator==(const SymbolicConstant&, const SymbolicConstant&) = default;

private:
    std::vector<Monomial> terms_;
};

struct Grade {
    enum class Kind { Homogeneous, Inhomogeneous, Ungradable };
    Kind kind;
    Rational weight;  // meaningful only for Homogeneous

    static Grade homogeneous(Rational w) { return {Kind::Homogeneous, std::move(w)}; }
    static Grade inhomogeneous() { return {Kind::Inhomogeneous, 0}; }
    static Grade ungradable() { return {Kind::Ungradable, 0}; }

    std::string str() const;
    friend bool operator==(const Grade&, const Grade&) = default;
};

/// Weight grading with gamma -> 1, zeta(k) -> k. Constants touching log(mu),
/// log(2) or sqrt(pi) are Ungradable. Zero is reported as Homogeneous(0).
Grade grade(const SymbolicConstant& c);

/// Neumaier-compensated sum of the monomial values, left to right.
double evaluate(const SymbolicConstant& c, const Bindings& bindings);

struct RenderOptions {
    /// zeta(2) shown as pi^2/6 and, when log(mu) is present, gamma rewritten
    /// through delta = gamma + log(mu).
    bool paper_style = false;
};

/// e.g. "-gamma^3 - 3*gamma*zeta(2) - 2*zeta(3)". Parses back through
/// parse_constant().
std::string render(const SymbolicConstant& c, const RenderOptions& options = {});

/// {"terms":[{"coeff":"-1/1","powers":{"gamma":3}}, ...]}
nlohmann::ordered_json to_json(const SymbolicConstant& c);
SymbolicConstant constant_from_json(const nlohmann::ordered_json& j);

std::ostream& operator<<(std::ostream& os, const SymbolicConstant& c);

}  // namespace explog
