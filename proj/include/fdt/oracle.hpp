#pragma once

#include "fdt/model.hpp"

#include <vector>

namespace fdt::oracle {

// Reference solvers for cross-checking the transform solution. Nothing here
// depends on the series or recurrence code; gamma values come from the C++
// standard library.

struct MLParams {
    double alpha = 1.0;
    double tol = 1e-14;
};

/// One-parameter Mittag-Leffler function E_alpha(z) = sum_k z^k / Gamma(alpha*k + 1),
/// summed until the geometric tail bound drops below params.tol.
double mittag_leffler(const MLParams& params, double z);

struct PowerTerm {
    double coeff;
    double exponent;  ///< >= 0
};

/// sum_i coeff_i * (t - center)^exponent_i for t >= center.
struct PowerSum {
    double center = 0.0;
    std::vector<PowerTerm> terms;

    [[nodiscard]] double operator()(double t) const;
};

struct Trajectory {
    std::vector<double> t;                    ///< nodes t0 + i*h, i = 0..N
    std::vector<std::vector<double>> values;  ///< values[component][node]
    double h = 0.0;                           ///< step actually used
};

inline constexpr long kMaxSteps = 10'000'000;

/// Fractional Adams-Bashforth-Moulton predictor-corrector for
///   D^nu x = A0(t) x + forcing(t),  x(t0) = x0,  0 < nu <= 1,
/// with the Caputo derivative started at t0. Uses N = ceil((t1-t0)/h)
/// uniform steps (so the effective step is <= h); `corrector_passes` = 1 is
/// the classical PECE scheme.
Trajectory abm_solve(const PolyMatrix& A0, const std::vector<PowerSum>& forcing, double nu,
                     const std::vector<double>& x0, double t0, double t1, double h, int corrector_passes = 1);

} // namespace fdt::oracle
