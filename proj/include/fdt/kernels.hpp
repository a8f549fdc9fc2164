#pragma once

#include <cstddef>
#include <span>

namespace fdt::kernels {

// Data-parallel inner loops. `serial` is the reference implementation kept
// for testing and benchmarking; `parallel` is the OpenMP version (it falls
// back to the serial loops when built without OpenMP). The unqualified
// entry points dispatch on problem size.

namespace serial {

/// out[k] = sum_{l=0}^{k} a[l] * b[k-l] for k < out.size(); missing
/// entries of a or b count as zero.
void convolve(std::span<const double> a, std::span<const double> b, std::span<double> out);

/// out[i] = sum_k coeff[k] * (ts[i] - t0)^(alpha*k); requires ts[i] >= t0.
void evaluate_many(std::span<const double> coeff, double alpha, double t0, std::span<const double> ts,
                   std::span<double> out);

/// sum_{j<m} w[m-1-j] * f[j] with m = f.size() <= w.size().
double reversed_dot(std::span<const double> w, std::span<const double> f);

} // namespace serial

namespace parallel {

void convolve(std::span<const double> a, std::span<const double> b, std::span<double> out);
void evaluate_many(std::span<const double> coeff, double alpha, double t0, std::span<const double> ts,
                   std::span<double> out);
double reversed_dot(std::span<const double> w, std::span<const double> f);

} // namespace parallel

/// Below these sizes thread start-up costs more than the loop.
inline constexpr std::size_t kConvolveParallelMin = 512;
inline constexpr std::size_t kEvaluateParallelMin = 256;
inline constexpr std::size_t kDotParallelMin = 8192;

void convolve(std::span<const double> a, std::span<const double> b, std::span<double> out);
void evaluate_many(std::span<const double> coeff, double alpha, double t0, std::span<const double> ts,
                   std::span<double> out);
double reversed_dot(std::span<const double> w, std::span<const double> f);

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();

} // namespace fdt::kernels
