#include "fdt/kernels.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fdt::kernels {

namespace {

inline double convolve_at(std::span<const double> a, std::span<const double> b, std::size_t k) {
    // l ranges over indices where both a[l] and b[k-l] exist.
    const std::size_t l_lo = k >= b.size() ? k - b.size() + 1 : 0;
    const std::size_t l_hi = std::min(k, a.size() == 0 ? 0 : a.size() - 1);
    double acc = 0.0;
    if (a.empty() || b.empty() || l_lo > l_hi) return acc;
    for (std::size_t l = l_lo; l <= l_hi; ++l) acc += a[l] * b[k - l];
    return acc;
}

inline double evaluate_at(std::span<const double> coeff, double alpha, double dt) {
    if (dt == 0.0) return coeff.empty() ? 0.0 : coeff[0];
    double acc = 0.0;
    for (std::size_t k = 0; k < coeff.size(); ++k)
        if (coeff[k] != 0.0) acc += coeff[k] * std::pow(dt, alpha * static_cast<double>(k));
    return acc;
}

} // namespace

namespace serial {

void convolve(std::span<const double> a, std::span<const double> b, std::span<double> out) {
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = convolve_at(a, b, k);
}

void evaluate_many(std::span<const double> coeff, double alpha, double t0, std::span<const double> ts,
                   std::span<double> out) {
    for (std::size_t i = 0; i < ts.size(); ++i) out[i] = evaluate_at(coeff, alpha, ts[i] - t0);
}

double reversed_dot(std::span<const double> w, std::span<const double> f) {
    const std::size_t m = f.size();
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) acc += w[m - 1 - j] * f[j];
    return acc;
}

} // namespace serial

namespace parallel {

void convolve(std::span<const double> a, std::span<const double> b, std::span<double> out) {
    const auto n = static_cast<long>(out.size());
    // Work per k grows linearly, so hand out chunks dynamically.
#pragma omp parallel for schedule(dynamic, 64)
    for (long k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = convolve_at(a, b, static_cast<std::size_t>(k));
}

void evaluate_many(std::span<const double> coeff, double alpha, double t0, std::span<const double> ts,
                   std::span<double> out) {
    const auto n = static_cast<long>(ts.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
        const auto u = static_cast<std::size_t>(i);
        out[u] = evaluate_at(coeff, alpha, ts[u] - t0);
    }
}

double reversed_dot(std::span<const double> w, std::span<const double> f) {
    const auto m = static_cast<long>(f.size());
    double acc = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : acc)
    for (long j = 0; j < m; ++j) acc += w[static_cast<std::size_t>(m - 1 - j)] * f[static_cast<std::size_t>(j)];
    return acc;
}

} // namespace parallel

void convolve(std::span<const double> a, std::span<const double> b, std::span<double> out) {
    if (out.size() >= kConvolveParallelMin && max_threads() > 1)
        parallel::convolve(a, b, out);
    else
        serial::convolve(a, b, out);
}

void evaluate_many(std::span<const double> coeff, double alpha, double t0, std::span<const double> ts,
                   std::span<double> out) {
    if (ts.size() >= kEvaluateParallelMin && max_threads() > 1)
        parallel::evaluate_many(coeff, alpha, t0, ts, out);
    else
        serial::evaluate_many(coeff, alpha, t0, ts, out);
}

double reversed_dot(std::span<const double> w, std::span<const double> f) {
    if (f.size() >= kDotParallelMin && max_threads() > 1) return parallel::reversed_dot(w, f);
    return serial::reversed_dot(w, f);
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace fdt::kernels
