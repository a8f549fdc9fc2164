#include "fdt/rational.hpp"

#include "fdt/error.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace fdt {

namespace {

__extension__ typedef __int128 wide_int;

[[noreturn]] void overflow() { throw Error("rational overflow"); }

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) overflow();
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) overflow();
    return out;
}

std::int64_t checked_neg(std::int64_t a) {
    if (a == std::numeric_limits<std::int64_t>::min()) overflow();
    return -a;
}

std::int64_t parse_int(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t value = 0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) overflow();
    if (s.empty() || ec != std::errc{} || ptr != last)
        throw Error("invalid rational literal '" + std::string(s) + "'");
    return value;
}

} // namespace

std::int64_t gcd(std::int64_t a, std::int64_t b) {
    // Work in unsigned space so |INT64_MIN| is representable.
    auto ua = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
    auto ub = b < 0 ? 0 - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
    while (ub != 0) {
        auto t = ua % ub;
        ua = ub;
        ub = t;
    }
    if (ua > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) overflow();
    return static_cast<std::int64_t>(ua);
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / gcd(a, b), b);
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error("zero denominator");
    if (den < 0) {
        num = checked_neg(num);
        den = checked_neg(den);
    }
    const auto g = gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

double Rational::to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational operator+(const Rational& a, const Rational& b) {
    const auto g = gcd(a.den_, b.den_);
    const auto num = checked_add(checked_mul(a.num_, b.den_ / g), checked_mul(b.num_, a.den_ / g));
    return Rational(num, checked_mul(a.den_, b.den_ / g));
}

Rational operator-(const Rational& a) {
    Rational out;
    out.num_ = checked_neg(a.num_);
    out.den_ = a.den_;
    return out;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    const auto g1 = a.num_ == 0 ? 1 : gcd(a.num_, b.den_);
    const auto g2 = b.num_ == 0 ? 1 : gcd(b.num_, a.den_);
    return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error("zero denominator");
    return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const auto lhs = static_cast<wide_int>(a.num_) * b.den_;
    const auto rhs = static_cast<wide_int>(b.num_) * a.den_;
    return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::int64_t floor(const Rational& r) {
    auto q = r.num() / r.den();
    if (r.num() % r.den() != 0 && r.num() < 0) --q;
    return q;
}

std::int64_t ceil(const Rational& r) {
    auto q = r.num() / r.den();
    if (r.num() % r.den() != 0 && r.num() > 0) ++q;
    return q;
}

} // namespace fdt
