#include "fdt/polynomial.hpp"

#include <algorithm>

namespace fdt {

Polynomial::Polynomial(std::initializer_list<double> coeffs) : c_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(double c, std::size_t power) {
    std::vector<double> v(power + 1, 0.0);
    v[power] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

double Polynomial::operator()(double t) const noexcept {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Polynomial Polynomial::shifted(double shift) const {
    // Repeated synthetic division by (s - shift) yields the Taylor
    // coefficients at `shift` (Horner's scheme for all derivatives).
    std::vector<double> out(c_);
    const auto n = out.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) out[j - 1] += shift * out[j];
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<double> out(std::max(a.c_.size(), b.c_.size()), 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-1.0) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<double> out(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
}

Polynomial operator*(double s, const Polynomial& p) {
    std::vector<double> out(p.c_);
    for (auto& c : out) c *= s;
    return Polynomial(std::move(out));
}

} // namespace fdt
