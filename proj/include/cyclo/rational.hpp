#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "cyclo/errors.hpp"

namespace cyclo {

// Exact rational with int64 numerator/denominator, always normalized:
// gcd(num, den) == 1 and den > 0. Arithmetic goes through __int128 and errors
// with `overflow` instead of wrapping if a normalized result leaves int64.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    // Truncates toward zero. Only valid on integers when exactness matters.
    std::int64_t as_integer() const {
        if (den_ != 1) fail(errc::not_integral, "rational " + str() + " is not an integer");
        return num_;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        i128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
        return from128(n, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        i128 n = i128(a.num_) * b.den_ - i128(b.num_) * a.den_;
        return from128(n, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) fail(errc::overflow, "division by zero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // "p" for integers, "p/q" otherwise.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    // Parses "p" or "p/q" (optional leading '-'); anything else is parse_error.
    static Rational parse(const std::string& text);

private:
    using i128 = __int128;

    void assign(std::int64_t n, std::int64_t d) {
        if (d == 0) fail(errc::overflow, "zero denominator");
        if (d < 0) { n = -n; d = -d; }
        std::int64_t g = std::gcd(n, d);
        if (g > 1) { n /= g; d /= g; }
        num_ = n;
        den_ = d;
    }

    static Rational from128(i128 n, i128 d) {
        if (d == 0) fail(errc::overflow, "zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi) fail(errc::overflow, "rational overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a;
    }

    std::int64_t num_;
    std::int64_t den_;
};

inline Rational Rational::parse(const std::string& text) {
    auto bad = [&]() -> Rational {
        fail(errc::parse_error, "bad rational '" + text + "'");
    };
    std::size_t slash = text.find('/');
    auto parse_int = [&](const std::string& part) -> std::int64_t {
        if (part.empty()) bad();
        std::size_t i = part[0] == '-' ? 1 : 0;
        if (i == part.size()) bad();
        i128 v = 0;
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') bad();
            v = v * 10 + (part[i] - '0');
            if (v > i128(INT64_MAX)) fail(errc::overflow, "integer overflow in '" + text + "'");
        }
        return part[0] == '-' ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
    };
    if (slash == std::string::npos) return Rational(parse_int(text));
    std::int64_t n = parse_int(text.substr(0, slash));
    std::string den_part = text.substr(slash + 1);
    if (!den_part.empty() && den_part[0] == '-') bad();  // canonical form has positive den
    std::int64_t d = parse_int(den_part);
    if (d == 0) fail(errc::parse_error, "zero denominator in '" + text + "'");
    return Rational(n, d);
}

}  // namespace cyclo
