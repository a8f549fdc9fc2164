#include "fdt/series.hpp"

#include "fdt/error.hpp"
#include "fdt/gamma.hpp"
#include "fdt/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace fdt {

namespace {

void require_alpha(const Rational& alpha) {
    if (!(alpha.is_positive() && alpha <= Rational(1)))
        throw Error("series order alpha must lie in (0, 1], got " + alpha.str());
}

void require_same_basis(const FracSeries& a, const FracSeries& b) {
    if (!(a.basis() == b.basis())) throw Error("incompatible bases");
}

int positive_grid_index(const Rational& r, const Rational& alpha) {
    if (!r.is_positive()) throw Error("exponent must be positive, got " + r.str());
    return grid_index(r, alpha);
}

} // namespace

FracSeries::FracSeries(SeriesBasis basis) : FracSeries(basis, {}) {}

FracSeries::FracSeries(SeriesBasis basis, std::vector<double> coeff)
    : basis_(basis), coeff_(std::move(coeff)), reliable_(basis.K) {
    require_alpha(basis_.alpha);
    if (basis_.K < 0) throw Error("truncation index K must be nonnegative");
    coeff_.resize(static_cast<std::size_t>(basis_.K) + 1, 0.0);
}

FracSeries FracSeries::rebased(const SeriesBasis& basis) const {
    if (basis.alpha != basis_.alpha || basis.K != basis_.K) throw Error("incompatible bases");
    FracSeries out(basis, coeff_);
    out.reliable_ = reliable_;
    return out;
}

FracSeries FracSeries::with_reliable(int reliable) const {
    FracSeries out(*this);
    out.reliable_ = std::clamp(reliable, -1, basis_.K);
    return out;
}

int grid_index(const Rational& r, const Rational& alpha) {
    const Rational idx = r / alpha;
    if (!idx.is_integer() || idx.num() < 0) throw Error("off-grid exponent");
    if (idx.num() > std::numeric_limits<int>::max()) throw Error("off-grid exponent");
    return static_cast<int>(idx.num());
}

FracSeries from_polynomial(const Polynomial& p, const SeriesBasis& basis) {
    require_alpha(basis.alpha);
    const Polynomial local = p.shifted(basis.t0);
    std::vector<double> coeff(static_cast<std::size_t>(basis.K) + 1, 0.0);
    const auto c = local.coeffs();
    for (std::size_t r = 0; r < c.size(); ++r) {
        if (c[r] == 0.0) continue;
        const int k = grid_index(Rational(static_cast<std::int64_t>(r)), basis.alpha);
        if (k <= basis.K) coeff[static_cast<std::size_t>(k)] = c[r];
    }
    return FracSeries(basis, std::move(coeff));
}

double evaluate(const FracSeries& s, double t) {
    const double t0 = s.basis().t0;
    if (t < t0) throw Error("evaluation left of expansion point");
    double out = 0.0;
    kernels::serial::evaluate_many(s.coeff(), s.basis().alpha.to_double(), t0, {&t, 1}, {&out, 1});
    return out;
}

FracSeries linear_combine(double c1, const FracSeries& s1, double c2, const FracSeries& s2) {
    require_same_basis(s1, s2);
    std::vector<double> out(s1.coeff().size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = c1 * s1.coeff()[k] + c2 * s2.coeff()[k];
    return FracSeries(s1.basis(), std::move(out)).with_reliable(std::min(s1.reliable(), s2.reliable()));
}

FracSeries cauchy_product(const FracSeries& s1, const FracSeries& s2) {
    require_same_basis(s1, s2);
    std::vector<double> out(s1.coeff().size());
    kernels::convolve(s1.coeff(), s2.coeff(), out);
    return FracSeries(s1.basis(), std::move(out)).with_reliable(std::min(s1.reliable(), s2.reliable()));
}

FracSeries shift_divide(const FracSeries& s, const Rational& r) {
    const int m = positive_grid_index(r, s.basis().alpha);
    const auto& c = s.coeff();
    for (int l = 0; l < std::min(m, s.K() + 1); ++l)
        if (std::abs(c[static_cast<std::size_t>(l)]) > kVanishTolerance)
            throw Error("division by (t-t0)^r of non-vanishing series");
    std::vector<double> out(c.size(), 0.0);
    for (int k = 0; k + m <= s.K(); ++k) out[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k + m)];
    return FracSeries(s.basis(), std::move(out)).with_reliable(s.reliable() - m);
}

FracSeries caputo_transform(const FracSeries& s, const Rational& beta) {
    const int b = positive_grid_index(beta, s.basis().alpha);
    const auto& c = s.coeff();
    std::vector<double> out(c.size(), 0.0);
    for (int k = 0; k + b <= s.K(); ++k)
        out[static_cast<std::size_t>(k)] = gamma_ratio(s.basis().alpha, k, beta) * c[static_cast<std::size_t>(k + b)];
    return FracSeries(s.basis(), std::move(out)).with_reliable(s.reliable() - b);
}

Polynomial to_local_polynomial(const FracSeries& s) {
    const Rational& alpha = s.basis().alpha;
    std::vector<double> out;
    for (int k = 0; k <= s.K(); ++k) {
        const double c = s[k];
        if (c == 0.0) continue;
        const Rational power = alpha * Rational(k);
        if (!power.is_integer()) throw Error("off-grid exponent");
        const auto r = static_cast<std::size_t>(power.num());
        if (out.size() <= r) out.resize(r + 1, 0.0);
        out[r] = c;
    }
    return Polynomial(std::move(out));
}

std::vector<CoeffRecord> nonzero_records(const FracSeries& s) {
    std::vector<CoeffRecord> out;
    for (int k = 0; k <= s.K(); ++k)
        if (s[k] != 0.0) out.push_back({k, s.basis().alpha * Rational(k), s[k]});
    return out;
}

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace fdt
