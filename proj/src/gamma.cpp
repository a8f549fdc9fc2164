#include "fdt/gamma.hpp"

#include "fdt/error.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace fdt {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,      -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7,
};

// Gamma(n) = (n-1)! is exact in double arithmetic up to n = 23 (the odd part
// of 22! still fits in 53 bits).
constexpr int kExactFactorialMax = 23;

double lanczos_series(double z) {
    double sum = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (z + static_cast<double>(i));
    return sum;
}

void check_domain(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw Error("gamma domain");
}

// Valid for x >= 0.5.
double gamma_lanczos(double x) {
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    // Split t^(z+1/2) to delay overflow near x ~ 171.
    const double half = std::pow(t, 0.5 * (z + 0.5));
    return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * lanczos_series(z);
}

} // namespace

double gamma(double x) {
    check_domain(x);
    if (x == std::floor(x) && x <= kExactFactorialMax) {
        double f = 1.0;
        for (int i = 2; i < static_cast<int>(x); ++i) f *= i;
        return f;
    }
    if (x < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_lanczos(1.0 - x));
    return gamma_lanczos(x);
}

double log_gamma(double x) {
    check_domain(x);
    if (x < 0.5) return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
    if (x < 100.0) return std::log(gamma(x));
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(lanczos_series(z));
}

double gamma_ratio(const Rational& alpha, long k, const Rational& beta) {
    const double lower = alpha.to_double() * static_cast<double>(k) + 1.0;
    const double upper = lower + beta.to_double();
    if (upper < 170.0) return gamma(upper) / gamma(lower);
    return std::exp(log_gamma(upper) - log_gamma(lower));
}

} // namespace fdt
