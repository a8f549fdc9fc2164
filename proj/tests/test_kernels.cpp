#include "fdt/kernels.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

namespace k = fdt::kernels;

namespace {

std::vector<double> random_vector(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

} // namespace

TEST_CASE("serial convolve small cases") {
    const std::vector<double> a{1.0, 2.0}, b{3.0, 4.0, 5.0};
    std::vector<double> out(5);
    k::serial::convolve(a, b, out);
    CHECK(out == std::vector<double>{3.0, 10.0, 13.0, 10.0, 0.0});
    std::vector<double> empty_out(3, 9.0);
    k::serial::convolve({}, b, empty_out);
    CHECK(empty_out == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("parallel kernels agree with the serial reference") {
    std::mt19937_64 rng(42);
    for (std::size_t n : {1u, 7u, 600u, 2048u}) {
        const auto a = random_vector(n, rng), b = random_vector(n, rng);
        std::vector<double> s(n), p(n), d(n);
        k::serial::convolve(a, b, s);
        k::parallel::convolve(a, b, p);
        k::convolve(a, b, d);
        CHECK(s == p);  // same summation order per output index
        CHECK(s == d);
    }

    const auto coeff = random_vector(40, rng);
    std::vector<double> ts(1000);
    for (std::size_t i = 0; i < ts.size(); ++i) ts[i] = 0.25 + 0.001 * static_cast<double>(i);
    std::vector<double> s(ts.size()), p(ts.size());
    k::serial::evaluate_many(coeff, 0.5, 0.25, ts, s);
    k::parallel::evaluate_many(coeff, 0.5, 0.25, ts, p);
    CHECK(s == p);
    CHECK(s[0] == coeff[0]);

    const auto w = random_vector(20000, rng), f = random_vector(20000, rng);
    const double ds = k::serial::reversed_dot(w, f);
    const double dp = k::parallel::reversed_dot(w, f);
    CHECK(std::abs(ds - dp) <= 1e-12 * std::max(1.0, std::abs(ds)));
}

TEST_CASE("reversed_dot pairs the last weight with the first value") {
    const std::vector<double> w{1.0, 10.0, 100.0, 1000.0}, f{1.0, 2.0, 3.0};
    CHECK(k::serial::reversed_dot(w, f) == 100.0 * 1.0 + 10.0 * 2.0 + 1.0 * 3.0);
    CHECK(k::reversed_dot(w, {}) == 0.0);
}
