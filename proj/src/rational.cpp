#include "explog/rational.hpp"

#include <ostream>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace explog {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw DivisionByZero();
    }
    normalize();
}

void Rational::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = mp::gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view digits, bool allow_sign) {
        std::size_t start = 0;
        if (allow_sign && !digits.empty() && digits.front() == '-') {
            start = 1;
        }
        if (digits.size() == start) {
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
        for (std::size_t i = start; i < digits.size(); ++i) {
            if (digits[i] < '0' || digits[i] > '9') {
                throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
            }
        }
        return BigInt(std::string(digits));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text, true));
    }
    return Rational(parse_int(text.substr(0, slash), true), parse_int(text.substr(slash + 1), false));
}

Rational Rational::abs() const {
    Rational r = *this;
    if (r.num_.sign() < 0) {
        r.num_ = -r.num_;
    }
    return r;
}

Rational Rational::reciprocal() const {
    return Rational(den_, num_);
}

Rational Rational::pow(int exponent) const {
    if (exponent < 0) {
        return reciprocal().pow(-exponent);
    }
    Rational r;
    r.num_ = mp::pow(num_, static_cast<unsigned>(exponent));
    r.den_ = mp::pow(den_, static_cast<unsigned>(exponent));
    return r;
}

double Rational::to_double() const {
    return mp::cpp_rational(num_, den_).convert_to<double>();
}

long double Rational::to_long_double() const {
    using Wide = mp::number<mp::cpp_bin_float<128>>;
    Wide value = Wide(num_) / Wide(den_);
    return value.convert_to<long double>();
}

std::string Rational::canonical_str() const {
    return num_.str() + "/" + den_.str();
}

std::string Rational::str() const {
    return den_ == 1 ? num_.str() : canonical_str();
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw DivisionByZero();
    }
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned k = 2; k <= n; ++k) {
        r *= k;
    }
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace explog
