#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace tempra {

// Exact rational over 64-bit integers, always stored normalized (gcd 1,
// positive denominator).  Intermediate products are computed in 128 bits;
// a result whose reduced form does not fit in int64 throws
// std::overflow_error instead of wrapping.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws std::domain_error on /0

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    bool operator==(const Rational& o) const = default;
    std::strong_ordering operator<=>(const Rational& o) const;

    Rational abs() const { return num_ < 0 ? -*this : *this; }
    double to_double() const;

    // "p" when integral, otherwise "p/q".
    std::string str() const;

    // Accepts "p", "p/q" and plain decimals ("0.35"), all parsed exactly.
    // Throws std::invalid_argument on anything else.
    static Rational parse(std::string_view text);

private:
    std::int64_t num_, den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace tempra
