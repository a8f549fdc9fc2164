#pragma once

#include "fdt/polynomial.hpp"
#include "fdt/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace fdt {

/// Matrix of polynomials in t, row-major.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols);
    PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Polynomial> entries);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] const std::vector<Polynomial>& entries() const noexcept { return entries_; }

    [[nodiscard]] const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }
    Polynomial& operator()(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] std::size_t max_degree() const;

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Polynomial> entries_;
};

/// Linear Caputo system with constant state delays:
///   D^nu x(t) = A0(t) x(t) + sum_i A_i(t) x(t - tau_i) + B(t) u(t),  t >= 0,
/// with x = phi on [-tau_r, 0].
struct DelaySystem {
    Rational nu{1};
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Rational> delays;
    std::vector<PolyMatrix> A;  ///< A[0] undelayed, A[i] multiplies x(t - delays[i-1]).
    PolyMatrix B;
    std::vector<Polynomial> u;
    std::vector<Polynomial> phi;
    Rational horizon{1};

    [[nodiscard]] std::size_t r() const noexcept { return delays.size(); }

    friend bool operator==(const DelaySystem&, const DelaySystem&) = default;
};

struct SolverConfig {
    int K = 40;
    Rational sample_step{1, 100};

    friend bool operator==(const SolverConfig&, const SolverConfig&) = default;
};

/// Every structural violation, in a stable order. Empty means valid.
std::vector<std::string> validate(const DelaySystem& sys);

std::vector<std::string> validate(const SolverConfig& cfg);

} // namespace fdt
