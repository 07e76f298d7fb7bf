#pragma once

// Exact rational arithmetic over arbitrary-precision integers.
// Values are always stored in lowest terms with a positive denominator,
// so equality is plain field-wise comparison and hashing is stable.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cnx {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(const BigInt& n) : num_(n), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        // Denominators are positive, so cross-multiplication preserves order.
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    // Parses "a", "-a", or "a/b" with optional surrounding whitespace.
    static Rational parse(std::string_view text);

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    BigInt num_;
    BigInt den_;  // > 0 always
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

inline Rational Rational::parse(std::string_view text) {
    size_t b = text.find_first_not_of(" \t");
    size_t e = text.find_last_not_of(" \t");
    if (b == std::string_view::npos) throw std::invalid_argument("Rational::parse: empty input");
    text = text.substr(b, e - b + 1);
    size_t slash = text.find('/');
    auto to_big = [](std::string_view s) {
        if (s.empty()) throw std::invalid_argument("Rational::parse: empty integer");
        return BigInt(std::string(s));
    };
    if (slash == std::string_view::npos) return Rational(to_big(text));
    return Rational(to_big(text.substr(0, slash)), to_big(text.substr(slash + 1)));
}

}  // namespace cnx
