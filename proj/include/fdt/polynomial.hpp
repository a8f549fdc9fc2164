#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace fdt {

/// Real polynomial sum_i c[i] * t^i with canonical degree: the highest
/// stored coefficient is nonzero, and the zero polynomial stores nothing.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<double> coeffs);
    explicit Polynomial(std::vector<double> coeffs);

    static Polynomial constant(double c) { return Polynomial({c}); }
    static Polynomial monomial(double c, std::size_t power);

    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    /// Degree; the zero polynomial reports 0.
    [[nodiscard]] std::size_t degree() const noexcept { return c_.empty() ? 0 : c_.size() - 1; }
    [[nodiscard]] std::span<const double> coeffs() const noexcept { return c_; }
    /// Coefficient of t^i, zero past the degree.
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0.0; }

    [[nodiscard]] double operator()(double t) const noexcept;

    /// q(s) = p(s + shift). Recentering at a: p.shifted(a) holds p in powers of (t - a).
    [[nodiscard]] Polynomial shifted(double shift) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(double s, const Polynomial& p);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<double> c_;
};

} // namespace fdt
