#pragma once

#include "fdt/rational.hpp"
#include "fdt/series.hpp"

#include <cstddef>
#include <vector>

namespace fdt {

/// Grid order for a Caputo order nu = p/q: alpha = 1/q, the largest alpha
/// in (0, 1] with both nu and 1 on the grid (nu = alpha*p, 1 = alpha*q).
struct AlphaChoice {
    Rational alpha{1};
    int p = 1;
    int q = 1;

    [[nodiscard]] int k_nu() const noexcept { return p; }
    [[nodiscard]] int k_one() const noexcept { return q; }
    [[nodiscard]] Rational nu() const { return Rational(p, q); }
};

AlphaChoice choose_alpha(const Rational& nu);

/// Delay-free problem on one segment:
///   D^nu x = A0(t) x + forcing(t),  x(t0) = x0,
/// with every series on `basis`.
struct SegmentProblem {
    SeriesBasis basis;
    std::size_t n = 0;
    std::vector<FracSeries> A0;       ///< n*n, row-major
    std::vector<FracSeries> forcing;  ///< n
    std::vector<double> x0;           ///< n
};

/// Seed coefficients X(0..p-1) for each component: X(0) = x0, the rest zero
/// (alpha*k is not an integer for 0 < k < p when nu <= 1).
std::vector<std::vector<double>> transform_initial_state(const std::vector<double>& x0, const AlphaChoice& choice);

/// Solves the coefficient recurrence
///   X(k+p) = Gamma(k/q+1)/Gamma((k+p)/q+1) * (sum_l A0(l) X(k-l) + forcing(k)),
/// for k = 0..K-p, all n components at index k before index k+1.
std::vector<FracSeries> build_and_iterate(const SegmentProblem& prob, const AlphaChoice& choice);

} // namespace fdt
