#pragma once

#include "fdt/polynomial.hpp"
#include "fdt/rational.hpp"

#include <string>
#include <vector>

namespace fdt {

/// Exponent grid {alpha*k : k = 0..K} centred at t0.
struct SeriesBasis {
    double t0 = 0.0;
    Rational alpha{1};
    int K = 0;

    friend bool operator==(const SeriesBasis&, const SeriesBasis&) = default;
};

/// Truncated fractional power series sum_{k=0}^{K} coeff[k] * (t - t0)^(alpha*k).
///
/// `reliable` is the last index whose coefficient is exact with respect to
/// the untruncated operation; index-shifting operations (shift_divide,
/// caputo_transform) zero-fill the tail and lower it.
class FracSeries {
public:
    explicit FracSeries(SeriesBasis basis);
    FracSeries(SeriesBasis basis, std::vector<double> coeff);

    [[nodiscard]] const SeriesBasis& basis() const noexcept { return basis_; }
    [[nodiscard]] const std::vector<double>& coeff() const noexcept { return coeff_; }
    [[nodiscard]] double operator[](int k) const { return coeff_.at(static_cast<std::size_t>(k)); }
    [[nodiscard]] int K() const noexcept { return basis_.K; }
    [[nodiscard]] int reliable() const noexcept { return reliable_; }
    [[nodiscard]] bool shortened() const noexcept { return reliable_ < basis_.K; }

    /// Same coefficients on another basis with equal alpha and K.
    [[nodiscard]] FracSeries rebased(const SeriesBasis& basis) const;

    FracSeries with_reliable(int reliable) const;

private:
    SeriesBasis basis_;
    std::vector<double> coeff_;
    int reliable_;
};

/// Grid index m with alpha*m = r. Throws "off-grid exponent" when r/alpha
/// is not a nonnegative integer.
int grid_index(const Rational& r, const Rational& alpha);

/// Exact transform of a polynomial in t: recentre at basis.t0 and put the
/// coefficient of (t - t0)^r at index r/alpha. Powers beyond the grid are
/// truncated.
FracSeries from_polynomial(const Polynomial& p, const SeriesBasis& basis);

/// Truncated sum at t >= t0.
double evaluate(const FracSeries& s, double t);

FracSeries linear_combine(double c1, const FracSeries& s1, double c2, const FracSeries& s2);

/// Transform of a product: truncated convolution of the coefficient arrays.
FracSeries cauchy_product(const FracSeries& s1, const FracSeries& s2);

/// Transform of s(t) / (t - t0)^r. Requires the first r/alpha coefficients
/// to vanish (|c| <= kVanishTolerance).
FracSeries shift_divide(const FracSeries& s, const Rational& r);

/// Transform of the Caputo derivative of order beta (started at t0).
FracSeries caputo_transform(const FracSeries& s, const Rational& beta);

/// Reads a series whose nonzero coefficients sit on integer powers as a
/// polynomial in (t - t0). Throws "off-grid exponent" otherwise.
Polynomial to_local_polynomial(const FracSeries& s);

inline constexpr double kVanishTolerance = 1e-12;

/// One row of the serialized coefficient table.
struct CoeffRecord {
    int k;
    Rational exponent;
    double coeff;
};

/// Nonzero coefficients in index order.
std::vector<CoeffRecord> nonzero_records(const FracSeries& s);

/// Decimal text with 17 significant digits.
std::string format_real(double x);

} // namespace fdt
