#include "gcdc/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>

namespace gcdc {

namespace {

using wide = __int128;

std::optional<Rational> from_wide(wide num, wide den) {
    if (den == 0) {
        return std::nullopt;
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    wide a = num < 0 ? -num : num;
    wide b = den;
    while (b != 0) {
        wide t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    constexpr wide lo = std::numeric_limits<std::int64_t>::min() + 1;
    constexpr wide hi = std::numeric_limits<std::int64_t>::max();
    if (num < lo || num > hi || den > hi) {
        return std::nullopt;
    }
    return Rational::make(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

std::optional<Rational> Rational::make(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        return std::nullopt;
    }
    if (den < 0) {
        if (num == std::numeric_limits<std::int64_t>::min() ||
            den == std::numeric_limits<std::int64_t>::min()) {
            return std::nullopt;
        }
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    Rational r;
    r.num_ = g > 1 ? num / g : num;
    r.den_ = g > 1 ? den / g : den;
    return r;
}

std::optional<Rational> Rational::from_decimal(const std::string& text) {
    wide mantissa = 0;
    int scale = 0;
    std::size_t i = 0;
    bool any_digit = false;
    constexpr wide cap = wide(1) << 100;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        mantissa = mantissa * 10 + (text[i] - '0');
        any_digit = true;
        if (mantissa > cap) {
            return std::nullopt;
        }
        ++i;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            mantissa = mantissa * 10 + (text[i] - '0');
            any_digit = true;
            --scale;
            if (mantissa > cap) {
                return std::nullopt;
            }
            ++i;
        }
    }
    if (!any_digit) {
        return std::nullopt;
    }
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        int sign = 1;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        }
        int exponent = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            exponent = exponent * 10 + (text[i] - '0');
            if (exponent > 40) {
                return std::nullopt;
            }
            ++i;
        }
        scale += sign * exponent;
    }
    if (i != text.size()) {
        return std::nullopt;
    }
    wide den = 1;
    for (; scale > 0; --scale) {
        mantissa *= 10;
        if (mantissa > cap) {
            return std::nullopt;
        }
    }
    for (; scale < 0; ++scale) {
        den *= 10;
        if (den > cap) {
            return std::nullopt;
        }
    }
    return from_wide(mantissa, den);
}

std::optional<Rational> add(const Rational& a, const Rational& b) {
    return from_wide(wide(a.num_) * b.den_ + wide(b.num_) * a.den_, wide(a.den_) * b.den_);
}

std::optional<Rational> sub(const Rational& a, const Rational& b) {
    return from_wide(wide(a.num_) * b.den_ - wide(b.num_) * a.den_, wide(a.den_) * b.den_);
}

std::optional<Rational> mul(const Rational& a, const Rational& b) {
    return from_wide(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
}

std::optional<Rational> div(const Rational& a, const Rational& b) {
    return from_wide(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
}

std::optional<Rational> pow(const Rational& a, unsigned n) {
    std::optional<Rational> result = Rational(1);
    for (unsigned i = 0; i < n && result; ++i) {
        result = mul(*result, a);
    }
    return result;
}

Rational Rational::negated() const {
    Rational r = *this;
    r.num_ = -num_;
    return r;
}

std::string Rational::to_string() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace gcdc
