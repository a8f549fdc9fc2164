#pragma once

#include "fdt/rational.hpp"

namespace fdt {

/// Gamma function for x > 0 (Lanczos, g = 7, 9 terms). Small positive
/// integers return the exact factorial. Throws Error("gamma domain") for
/// x <= 0 or non-finite x.
double gamma(double x);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Gamma(alpha*k + beta + 1) / Gamma(alpha*k + 1), the factor of the
/// Caputo-derivative transform rule. Switches to a log-gamma difference
/// once either argument would overflow a double.
double gamma_ratio(const Rational& alpha, long k, const Rational& beta);

} // namespace fdt
