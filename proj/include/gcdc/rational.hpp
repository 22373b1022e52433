#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace gcdc {

/// Exact rational with 64-bit parts. Arithmetic is checked: an operation
/// whose result does not fit returns nullopt and callers fall back to double.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num) : num_(num) {}

    /// Normalizes sign and common factors; nullopt on zero denominator.
    static std::optional<Rational> make(std::int64_t num, std::int64_t den);

    /// Exact value of a decimal literal such as "0.25" or "1e-3", when representable.
    static std::optional<Rational> from_decimal(const std::string& text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend std::optional<Rational> add(const Rational& a, const Rational& b);
    friend std::optional<Rational> sub(const Rational& a, const Rational& b);
    friend std::optional<Rational> mul(const Rational& a, const Rational& b);
    friend std::optional<Rational> div(const Rational& a, const Rational& b);
    friend std::optional<Rational> pow(const Rational& a, unsigned n);
    Rational negated() const;

    friend bool operator==(const Rational&, const Rational&) = default;

    std::string to_string() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace gcdc
