#include "explog/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace explog {

Generator Generator::zeta(int k) {
    if (k < 2) {
        throw std::domain_error("zeta(k) generator requires k >= 2, got " + std::to_string(k));
    }
    return Generator(Kind::Zeta, k);
}

std::optional<Generator> Generator::from_name(const std::string& name) {
    if (name == "gamma") return euler_gamma();
    if (name == "log(mu)") return log_mu();
    if (name == "log(2)") return log2();
    if (name == "sqrt(pi)") return sqrt_pi();
    if (name.size() > 6 && name.starts_with("zeta(") && name.back() == ')') {
        std::string digits = name.substr(5, name.size() - 6);
        if (digits.empty() || digits.size() > 6 ||
            !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
            return std::nullopt;
        }
        int k = std::stoi(digits);
        if (k < 2) return std::nullopt;
        return zeta(k);
    }
    return std::nullopt;
}

std::string Generator::name() const {
    switch (kind_) {
        case Kind::EulerGamma: return "gamma";
        case Kind::LogMu: return "log(mu)";
        case Kind::Log2: return "log(2)";
        case Kind::SqrtPi: return "sqrt(pi)";
        case Kind::Zeta: return "zeta(" + std::to_string(zeta_arg_) + ")";
    }
    return {};
}

std::optional<int> Generator::weight() const {
    switch (kind_) {
        case Kind::EulerGamma: return 1;
        case Kind::Zeta: return zeta_arg_;
        default: return std::nullopt;
    }
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (const auto& [g, e] : powers) d += e;
    return d;
}

namespace {

unsigned total_degree(const PowerMap& p) {
    unsigned d = 0;
    for (const auto& [g, e] : p) d += e;
    return d;
}

struct GradedLexLess {
    bool operator()(const PowerMap& a, const PowerMap& b) const { return graded_lex_before(a, b); }
};

using Accumulator = std::map<PowerMap, Rational, GradedLexLess>;

SymbolicConstant from_accumulator(const Accumulator& acc) {
    std::vector<Monomial> out;
    out.reserve(acc.size());
    for (const auto& [powers, coeff] : acc) {
        if (!coeff.is_zero()) out.push_back({coeff, powers});
    }
    return SymbolicConstant::from_terms(std::move(out));
}

PowerMap multiply_powers(const PowerMap& a, const PowerMap& b) {
    PowerMap r = a;
    for (const auto& [g, e] : b) r[g] += e;
    return r;
}

}  // namespace

bool graded_lex_before(const PowerMap& a, const PowerMap& b) {
    unsigned da = total_degree(a);
    unsigned db = total_degree(b);
    if (da != db) return da > db;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first != ib->first) {
            // The side holding the earlier generator has the larger exponent there.
            return ia->first < ib->first;
        }
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    return ia != a.end() && ib == b.end();
}

SymbolicConstant::SymbolicConstant(Rational value) {
    if (!value.is_zero()) terms_.push_back({std::move(value), {}});
}

SymbolicConstant::SymbolicConstant(const Generator& g) {
    terms_.push_back({Rational(1), {{g, 1u}}});
}

SymbolicConstant SymbolicConstant::from_terms(std::vector<Monomial> terms) {
    Accumulator acc;
    for (auto& m : terms) {
        for (auto it = m.powers.begin(); it != m.powers.end();) {
            it = it->second == 0 ? m.powers.erase(it) : std::next(it);
        }
        acc[m.powers] += m.coeff;
    }
    SymbolicConstant c;
    for (auto& [powers, coeff] : acc) {
        if (!coeff.is_zero()) c.terms_.push_back({coeff, powers});
    }
    return c;
}

bool SymbolicConstant::contains(Generator::Kind kind) const {
    for (const auto& m : terms_) {
        for (const auto& [g, e] : m.powers) {
            if (g.kind() == kind) return true;
        }
    }
    return false;
}

std::optional<Rational> SymbolicConstant::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.front().powers.empty()) return terms_.front().coeff;
    return std::nullopt;
}

SymbolicConstant SymbolicConstant::operator-() const {
    SymbolicConstant r = *this;
    for (auto& m : r.terms_) m.coeff = -m.coeff;
    return r;
}

SymbolicConstant operator+(const SymbolicConstant& a, const SymbolicConstant& b) {
    Accumulator acc;
    for (const auto& m : a.terms_) acc[m.powers] += m.coeff;
    for (const auto& m : b.terms_) acc[m.powers] += m.coeff;
    return from_accumulator(acc);
}

SymbolicConstant operator-(const SymbolicConstant& a, const SymbolicConstant& b) {
    return a + (-b);
}

SymbolicConstant operator*(const SymbolicConstant& a, const SymbolicConstant& b) {
    Accumulator acc;
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            acc[multiply_powers(x.powers, y.powers)] += x.coeff * y.coeff;
        }
    }
    return from_accumulator(acc);
}

SymbolicConstant SymbolicConstant::pow(unsigned k) const {
    SymbolicConstant result(Rational(1));
    SymbolicConstant base = *this;
    while (k > 0) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k > 0) base *= base;
    }
    return result;
}

SymbolicConstant SymbolicConstant::substitute(const Generator& g, const SymbolicConstant& replacement) const {
    SymbolicConstant out;
    for (const auto& m : terms_) {
        Monomial rest = m;
        unsigned e = 0;
        if (auto it = rest.powers.find(g); it != rest.powers.end()) {
            e = it->second;
            rest.powers.erase(it);
        }
        out += from_terms({rest}) * replacement.pow(e);
    }
    return out;
}

std::string Grade::str() const {
    switch (kind) {
        case Kind::Homogeneous: return "Homogeneous(" + weight.str() + ")";
        case Kind::Inhomogeneous: return "Inhomogeneous";
        case Kind::Ungradable: return "Ungradable";
    }
    return {};
}

Grade grade(const SymbolicConstant& c) {
    std::optional<Rational> common;
    bool mixed = false;
    for (const auto& m : c.terms()) {
        Rational w = 0;
        for (const auto& [g, e] : m.powers) {
            auto gw = g.weight();
            if (!gw) return Grade::ungradable();
            w += Rational(static_cast<std::int64_t>(*gw) * e);
        }
        if (!common) {
            common = w;
        } else if (*common != w) {
            mixed = true;
        }
    }
    if (mixed) return Grade::inhomogeneous();
    return Grade::homogeneous(common.value_or(Rational(0)));
}

double evaluate(const SymbolicConstant& c, const Bindings& bindings) {
    double sum = 0.0;
    double compensation = 0.0;
    for (const auto& m : c.terms()) {
        double value = m.coeff.to_double();
        for (const auto& [g, e] : m.powers) {
            auto it = bindings.find(g);
            if (it == bindings.end()) throw UnboundGenerator(g);
            value *= std::pow(it->second, static_cast<double>(e));
        }
        double t = sum + value;
        if (std::abs(sum) >= std::abs(value)) {
            compensation += (sum - t) + value;
        } else {
            compensation += (value - t) + sum;
        }
        sum = t;
    }
    return sum + compensation;
}

namespace {

std::string render_factor(const std::string& name, unsigned e) {
    return e == 1 ? name : name + "^" + std::to_string(e);
}

std::string render_monomial_body(const Monomial& m, bool paper_style, const std::string& gamma_name,
                                 Rational& coeff) {
    std::string body;
    for (const auto& [g, e] : m.powers) {
        std::string factor;
        if (paper_style && g == Generator::zeta(2)) {
            coeff /= Rational(6).pow(static_cast<int>(e));
            factor = render_factor("pi", 2 * e);
        } else if (g.kind() == Generator::Kind::EulerGamma) {
            factor = render_factor(gamma_name, e);
        } else {
            factor = render_factor(g.name(), e);
        }
        if (!body.empty()) body += "*";
        body += factor;
    }
    return body;
}

}  // namespace

std::string render(const SymbolicConstant& c, const RenderOptions& options) {
    if (c.is_zero()) return "0";
    SymbolicConstant shown = c;
    std::string gamma_name = "gamma";
    if (options.paper_style && c.contains(Generator::Kind::LogMu)) {
        shown = c.substitute(Generator::euler_gamma(),
                             SymbolicConstant(Generator::euler_gamma()) - SymbolicConstant(Generator::log_mu()));
        gamma_name = "delta";
    }
    if (shown.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& m : shown.terms()) {
        Rational coeff = m.coeff;
        std::string body = render_monomial_body(m, options.paper_style, gamma_name, coeff);
        bool negative = coeff.sign() < 0;
        Rational magnitude = coeff.abs();
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        if (body.empty()) {
            out << magnitude.str();
        } else if (magnitude == Rational(1)) {
            out << body;
        } else {
            out << magnitude.str() << "*" << body;
        }
    }
    return out.str();
}

nlohmann::ordered_json to_json(const SymbolicConstant& c) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& m : c.terms()) {
        nlohmann::ordered_json powers = nlohmann::ordered_json::object();
        for (const auto& [g, e] : m.powers) powers[g.name()] = e;
        terms.push_back({{"coeff", m.coeff.canonical_str()}, {"powers", powers}});
    }
    return {{"terms", terms}};
}

SymbolicConstant constant_from_json(const nlohmann::ordered_json& j) {
    std::vector<Monomial> terms;
    for (const auto& t : j.at("terms")) {
        Monomial m{Rational::parse(t.at("coeff").get<std::string>()), {}};
        for (const auto& [key, value] : t.at("powers").items()) {
            auto g = Generator::from_name(key);
            if (!g) throw std::invalid_argument("unknown generator '" + key + "' in JSON constant");
            auto e = value.get<long long>();
            if (e <= 0) throw std::invalid_argument("non-positive exponent for '" + key + "' in JSON constant");
            m.powers[*g] += static_cast<unsigned>(e);
        }
        terms.push_back(std::move(m));
    }
    return SymbolicConstant::from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const SymbolicConstant& c) {
    return os << render(c);
}

}  // namespace explog
