#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace fdt {

/// Exact fraction num/den over 64-bit integers.
///
/// Always kept in canonical form: den > 0 and gcd(|num|, den) = 1, so two
/// values are equal iff their fields are equal. Every operation detects
/// integer overflow and throws fdt::Error("rational overflow") instead of
/// wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    [[nodiscard]] std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] std::int64_t den() const noexcept { return den_; }

    [[nodiscard]] bool is_integer() const noexcept { return den_ == 1; }
    [[nodiscard]] bool is_zero() const noexcept { return num_ == 0; }
    [[nodiscard]] bool is_positive() const noexcept { return num_ > 0; }
    [[nodiscard]] double to_double() const noexcept;

    /// "p/q", or "p" when den == 1.
    [[nodiscard]] std::string str() const;

    /// Accepts "p/q" or "p" with optional surrounding whitespace and a sign
    /// on the numerator.
    static Rational parse(std::string_view text);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a);

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Greatest common divisor of |a| and |b|; gcd(0, 0) = 0.
std::int64_t gcd(std::int64_t a, std::int64_t b);
/// Least common multiple of positive integers, overflow-checked.
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Smallest integer >= r.
std::int64_t ceil(const Rational& r);
/// Largest integer <= r.
std::int64_t floor(const Rational& r);

} // namespace fdt
