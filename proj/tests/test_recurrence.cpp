#include "fdt/error.hpp"
#include "fdt/recurrence.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using fdt::FracSeries;
using fdt::Polynomial;
using fdt::Rational;
using fdt::SeriesBasis;

namespace {

fdt::SegmentProblem zero_problem(const SeriesBasis& b, std::size_t n) {
    fdt::SegmentProblem p;
    p.basis = b;
    p.n = n;
    p.A0.assign(n * n, FracSeries(b));
    p.forcing.assign(n, FracSeries(b));
    p.x0.assign(n, 0.0);
    return p;
}

// Picard iteration x <- x0 + int_t0^t (A x + g), truncated to `degree`; its
// fixed point is the Taylor polynomial of the solution of x' = A x + g.
std::vector<Polynomial> picard(const std::vector<Polynomial>& A, const std::vector<Polynomial>& g,
                               const std::vector<double>& x0, std::size_t degree) {
    const std::size_t n = x0.size();
    std::vector<Polynomial> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = Polynomial::constant(x0[i]);
    for (std::size_t it = 0; it <= degree + 1; ++it) {
        std::vector<Polynomial> next(n);
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial rhs = g[i];
            for (std::size_t c = 0; c < n; ++c) rhs = rhs + A[i * n + c] * x[c];
            std::vector<double> integ(std::min(rhs.degree() + 2, degree + 1), 0.0);
            integ[0] = x0[i];
            for (std::size_t k = 0; k < rhs.coeffs().size() && k + 1 <= degree; ++k)
                integ[k + 1] = rhs[k] / static_cast<double>(k + 1);
            next[i] = Polynomial(integ);
        }
        x = next;
    }
    return x;
}

} // namespace

TEST_CASE("choose_alpha") {
    auto c = fdt::choose_alpha(Rational(1, 2));
    CHECK(c.alpha == Rational(1, 2));
    CHECK(c.p == 1);
    CHECK(c.q == 2);
    c = fdt::choose_alpha(Rational(2, 3));
    CHECK(c.alpha == Rational(1, 3));
    CHECK(c.k_nu() == 2);
    CHECK(c.k_one() == 3);
    CHECK(c.alpha * Rational(c.k_nu()) == Rational(2, 3));
    CHECK(c.alpha * Rational(c.k_one()) == Rational(1));
    c = fdt::choose_alpha(Rational(1));
    CHECK(c.alpha == Rational(1));
    CHECK(c.p == 1);
    CHECK(c.q == 1);
    CHECK_THROWS_AS(fdt::choose_alpha(Rational(3, 2)), fdt::Error);
    CHECK_THROWS_AS(fdt::choose_alpha(Rational(0)), fdt::Error);
}

TEST_CASE("transform_initial_state") {
    const auto seeds = fdt::transform_initial_state({0.0, 4.0 / 9.0}, fdt::choose_alpha(Rational(3, 4)));
    REQUIRE(seeds.size() == 2);
    CHECK(seeds[0] == std::vector<double>{0, 0, 0});
    CHECK(seeds[1] == std::vector<double>{4.0 / 9.0, 0, 0});
    const auto one = fdt::transform_initial_state({1.5, -2.0}, fdt::choose_alpha(Rational(1)));
    CHECK(one[0] == std::vector<double>{1.5});
    CHECK(one[1] == std::vector<double>{-2.0});
}

TEST_CASE("segment-1 recurrence of the two-delay example") {
    for (auto [p, q] : {std::pair{1, 2}, {2, 3}, {3, 4}, {1, 1}}) {
        const auto choice = fdt::choose_alpha(Rational(p, q));
        const SeriesBasis b{0.0, choice.alpha, 30};
        auto prob = zero_problem(b, 2);
        prob.forcing[1] = fdt::from_polynomial(Polynomial{1, 2}, b);
        const auto X = fdt::build_and_iterate(prob, choice);
        const double nu = static_cast<double>(p) / q;
        for (int k = 0; k <= b.K; ++k) {
            CHECK(X[0][k] == 0.0);
            double want = 0.0;
            if (k == p) want = 1.0 / std::tgamma(1.0 + nu);
            if (k == p + q) want = 2.0 / std::tgamma(2.0 + nu);
            CHECK(std::abs(X[1][k] - want) <= 1e-13 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("zero data gives the zero solution") {
    const auto choice = fdt::choose_alpha(Rational(2, 3));
    const auto X = fdt::build_and_iterate(zero_problem({0.0, choice.alpha, 12}, 3), choice);
    for (const auto& s : X)
        for (double c : s.coeff()) CHECK(c == 0.0);
}

TEST_CASE("basis checks") {
    const auto choice = fdt::choose_alpha(Rational(1, 2));
    auto prob = zero_problem({0.0, Rational(1, 3), 6}, 1);
    CHECK_THROWS_WITH_AS(fdt::build_and_iterate(prob, choice), "incompatible bases", fdt::Error);
    prob = zero_problem({0.0, choice.alpha, 6}, 1);
    prob.forcing[0] = FracSeries({0.25, choice.alpha, 6});
    CHECK_THROWS_WITH_AS(fdt::build_and_iterate(prob, choice), "incompatible bases", fdt::Error);
}

TEST_CASE("residual of the Caputo identity vanishes") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        const int q = 1 + trial % 4;
        const int p = 1 + (trial / 4) % q;
        const auto choice = fdt::choose_alpha(Rational(p, q));
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
        const SeriesBasis b{d(rng) + 1.0, choice.alpha, 24};
        auto prob = zero_problem(b, n);
        // Coupling kept small so coefficients stay O(1) and an absolute bound is meaningful.
        for (auto& a : prob.A0) a = fdt::from_polynomial(Polynomial{0.3 * d(rng), 0.3 * d(rng)}, b);
        for (auto& f : prob.forcing) f = fdt::from_polynomial(Polynomial{d(rng), d(rng), d(rng)}, b);
        for (auto& x : prob.x0) x = d(rng);

        const auto X = fdt::build_and_iterate(prob, choice);
        for (std::size_t i = 0; i < n; ++i) {
            FracSeries rhs = prob.forcing[i];
            for (std::size_t c = 0; c < n; ++c)
                rhs = fdt::linear_combine(1.0, rhs, 1.0, fdt::cauchy_product(prob.A0[i * n + c], X[c]));
            const auto lhs = fdt::caputo_transform(X[i], choice.nu());
            for (int k = 0; k <= lhs.reliable(); ++k) CHECK(std::abs(lhs[k] - rhs[k]) <= 1e-10);
            CHECK(X[i][0] == prob.x0[i]);
        }
    }
}

TEST_CASE("integer order matches a classical Taylor (Picard) solution") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    const auto choice = fdt::choose_alpha(Rational(1));
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
        const int K = 12;
        const SeriesBasis b{0.0, choice.alpha, K};
        std::vector<Polynomial> A(n * n), g(n);
        for (auto& a : A) a = Polynomial{d(rng), d(rng)};
        for (auto& f : g) f = Polynomial{d(rng), d(rng), d(rng)};
        std::vector<double> x0(n);
        for (auto& x : x0) x = d(rng);

        auto prob = zero_problem(b, n);
        for (std::size_t e = 0; e < n * n; ++e) prob.A0[e] = fdt::from_polynomial(A[e], b);
        for (std::size_t i = 0; i < n; ++i) prob.forcing[i] = fdt::from_polynomial(g[i], b);
        prob.x0 = x0;
        const auto X = fdt::build_and_iterate(prob, choice);
        const auto ref = picard(A, g, x0, static_cast<std::size_t>(K));
        for (std::size_t i = 0; i < n; ++i)
            for (int k = 0; k <= K; ++k) {
                const double want = ref[i][static_cast<std::size_t>(k)];
                CHECK(std::abs(X[i][k] - want) <= 1e-10 * std::max(std::abs(want), 1e-3));
            }
    }
}

TEST_CASE("higher-order forcing leaves lower coefficients unchanged") {
    const auto choice = fdt::choose_alpha(Rational(2, 5));
    const SeriesBasis b{0.0, choice.alpha, 30};
    auto prob = zero_problem(b, 2);
    prob.A0[1] = fdt::from_polynomial(Polynomial{0.5, 1.0}, b);
    prob.A0[2] = fdt::from_polynomial(Polynomial{-1.0}, b);
    prob.forcing[0] = fdt::from_polynomial(Polynomial{1.0}, b);
    prob.x0 = {0.3, -0.2};
    const auto base = fdt::build_and_iterate(prob, choice);

    const int j = 17;
    std::vector<double> extra(31, 0.0);
    extra[static_cast<std::size_t>(j)] = 5.0;
    prob.forcing[1] = fdt::linear_combine(1.0, prob.forcing[1], 1.0, FracSeries(b, extra));
    const auto more = fdt::build_and_iterate(prob, choice);
    for (int k = 0; k <= j + choice.p - 1; ++k) {
        CHECK(base[0][k] == more[0][k]);
        CHECK(base[1][k] == more[1][k]);
    }
    CHECK(base[1][j + choice.p] != more[1][j + choice.p]);
}
