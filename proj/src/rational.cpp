#include "tempra/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace tempra {

namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow(i128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("rational out of 64-bit range");
    }
    return static_cast<std::int64_t>(v);
}

std::int64_t parse_digits(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("bad rational literal");
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("bad rational literal");
    }
    return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    i128 n = num, d = den;
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
}

// Reduces in 128 bits first so intermediate products may exceed 64 bits as
// long as the reduced value fits.
static Rational make_reduced(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational(narrow(n), narrow(d));
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = narrow(-i128(num_));
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    *this = make_reduced(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    *this = make_reduced(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    *this = make_reduced(i128(num_) * o.num_, i128(den_) * o.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("division by zero rational");
    *this = make_reduced(i128(num_) * o.den_, i128(den_) * o.num_);
    return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    i128 lhs = i128(num_) * o.den_;
    i128 rhs = i128(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    bool neg = false;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        neg = text[0] == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) throw std::invalid_argument("bad rational literal");

    Rational r;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::int64_t n = parse_digits(text.substr(0, slash));
        std::int64_t d = parse_digits(text.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("bad rational literal");
        r = Rational(n, d);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 18) {
            throw std::invalid_argument("bad rational literal");
        }
        std::int64_t w = whole.empty() ? 0 : parse_digits(whole);
        std::int64_t f = parse_digits(frac);
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        r = Rational(w) + Rational(f, scale);
    } else {
        r = Rational(parse_digits(text));
    }
    return neg ? -r : r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace tempra
