#include "fdt/error.hpp"
#include "fdt/oracle.hpp"

#include <doctest.h>

#include <cmath>

using fdt::Polynomial;
using fdt::oracle::abm_solve;
using fdt::oracle::mittag_leffler;
using fdt::oracle::PowerSum;

namespace {

// Error of the ABM solution of D^{1/2} x = x, x(0) = 1 at t = 1/2.
double ml_benchmark_error(double h) {
    const auto traj = abm_solve(fdt::PolyMatrix(1, 1, {Polynomial{1.0}}), {PowerSum{}}, 0.5, {1.0}, 0.0, 0.5, h);
    return std::abs(traj.values[0].back() - mittag_leffler({0.5, 1e-15}, std::sqrt(0.5)));
}

} // namespace

TEST_CASE("Mittag-Leffler special cases") {
    CHECK(std::abs(mittag_leffler({1.0, 1e-15}, 1.0) - 2.718281828459045) < 1e-12);
    CHECK(std::abs(mittag_leffler({2.0, 1e-15}, 1.0) - 1.543080634815244) < 1e-12);
    CHECK(std::abs(mittag_leffler({2.0, 1e-15}, -4.0) - std::cos(2.0)) < 1e-12);
    // E_{1/2}(z) = exp(z^2) erfc(-z)
    for (double z : {1.0, 0.3, -0.7, 2.0})
        CHECK(std::abs(mittag_leffler({0.5, 1e-14}, z) - std::exp(z * z) * std::erfc(-z)) <
              1e-12 * std::max(1.0, std::exp(z * z)));
    CHECK(mittag_leffler({0.5, 1e-13}, 0.0) == 1.0);
}

TEST_CASE("Mittag-Leffler with alpha = 1 is the exponential") {
    for (int i = 0; i <= 100; ++i) {
        const double z = -5.0 + 0.1 * i;
        CHECK(std::abs(mittag_leffler({1.0, 1e-15}, z) - std::exp(z)) < 1e-12);
    }
}

TEST_CASE("Mittag-Leffler errors") {
    CHECK_THROWS_AS(mittag_leffler({0.0, 1e-12}, 1.0), fdt::Error);
    CHECK_THROWS_AS(mittag_leffler({0.5, 0.0}, 1.0), fdt::Error);
    CHECK_THROWS_WITH_AS(mittag_leffler({0.01, 1e-12}, 10.0), "Mittag-Leffler series did not converge", fdt::Error);
}

TEST_CASE("PowerSum evaluation") {
    const PowerSum f{1.0, {{2.0, 0.0}, {3.0, 0.5}, {1.0, 2.0}}};
    CHECK(f(1.0) == 2.0);
    CHECK(std::abs(f(5.0) - (2.0 + 3.0 * 2.0 + 16.0)) < 1e-14);
}

TEST_CASE("ABM integer order reduces to the exponential") {
    const auto traj = abm_solve(fdt::PolyMatrix(1, 1, {Polynomial{1.0}}), {PowerSum{}}, 1.0, {1.0}, 0.0, 1.0, 1e-3);
    CHECK(traj.t.size() == 1001);
    CHECK(std::abs(traj.values[0].back() - std::exp(1.0)) < 5e-6);
}

TEST_CASE("ABM half order against Mittag-Leffler") {
    const double h = 1e-4;
    const auto traj = abm_solve(fdt::PolyMatrix(1, 1, {Polynomial{1.0}}), {PowerSum{}}, 0.5, {1.0}, 0.0, 0.5, h);
    CHECK(std::abs(traj.t.back() - 0.5) < 1e-15);
    double worst = 0.0;
    for (std::size_t i = 0; i < traj.t.size(); i += 50)
        worst = std::max(worst, std::abs(traj.values[0][i] - mittag_leffler({0.5, 1e-15}, std::sqrt(traj.t[i]))));
    CHECK(worst < 1e-4);
}

TEST_CASE("ABM error shrinks at least linearly under step halving") {
    const double e1 = ml_benchmark_error(4e-3);
    const double e2 = ml_benchmark_error(2e-3);
    const double e3 = ml_benchmark_error(1e-3);
    MESSAGE("ABM errors: " << e1 << " " << e2 << " " << e3);
    CHECK(std::log2(e1 / e2) >= 0.9);
    CHECK(std::log2(e2 / e3) >= 0.9);
}

TEST_CASE("ABM on the first delay-free segment of the two-delay example") {
    // D^{1/2} x1 = 0, D^{1/2} x2 = 2t + 1, x(0) = 0
    const double nu = 0.5;
    const auto traj = abm_solve(fdt::PolyMatrix(2, 2), {PowerSum{}, PowerSum{0.0, {{1.0, 0.0}, {2.0, 1.0}}}}, nu,
                                {0.0, 0.0}, 0.0, 1.0 / 3.0, 1e-4);
    double worst = 0.0;
    for (std::size_t i = 0; i < traj.t.size(); ++i) {
        const double t = traj.t[i];
        const double want = std::pow(t, nu) / std::tgamma(1.0 + nu) + 2.0 * std::pow(t, nu + 1.0) / std::tgamma(2.0 + nu);
        worst = std::max(worst, std::abs(traj.values[1][i] - want));
        CHECK(traj.values[0][i] == 0.0);
    }
    MESSAGE("segment-1 ABM deviation " << worst);
    CHECK(worst < 1e-6);
}

TEST_CASE("ABM arguments") {
    const fdt::PolyMatrix A(1, 1);
    CHECK_THROWS_AS(abm_solve(A, {PowerSum{}}, 1.5, {1.0}, 0.0, 1.0, 1e-2), fdt::Error);
    CHECK_THROWS_AS(abm_solve(A, {PowerSum{}, PowerSum{}}, 0.5, {1.0}, 0.0, 1.0, 1e-2), fdt::Error);
    CHECK_THROWS_AS(abm_solve(A, {PowerSum{}}, 0.5, {1.0}, 1.0, 0.0, 1e-2), fdt::Error);
    CHECK_THROWS_WITH_AS(abm_solve(A, {PowerSum{}}, 0.5, {1.0}, 0.0, 1.0, 1e-9), "step-count overflow", fdt::Error);
    // h not dividing the interval: the step shrinks to fit
    const auto traj = abm_solve(A, {PowerSum{0.0, {{1.0, 0.0}}}}, 1.0, {0.0}, 0.0, 1.0 / 3.0, 1e-2);
    CHECK(traj.t.size() == 35);
    CHECK(traj.h <= 1e-2);
    CHECK(std::abs(traj.values[0].back() - 1.0 / 3.0) < 1e-14);
}
