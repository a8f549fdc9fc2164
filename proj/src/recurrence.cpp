#include "fdt/recurrence.hpp"

#include "fdt/error.hpp"
#include "fdt/gamma.hpp"

#include <algorithm>

namespace fdt {

AlphaChoice choose_alpha(const Rational& nu) {
    if (!(nu.is_positive() && nu <= Rational(1))) throw Error("ν out of (0,1]: nu = " + nu.str());
    AlphaChoice c;
    c.alpha = Rational(1, nu.den());
    c.p = static_cast<int>(nu.num());
    c.q = static_cast<int>(nu.den());
    return c;
}

std::vector<std::vector<double>> transform_initial_state(const std::vector<double>& x0, const AlphaChoice& choice) {
    std::vector<std::vector<double>> seeds(x0.size(), std::vector<double>(static_cast<std::size_t>(choice.p), 0.0));
    for (std::size_t i = 0; i < x0.size(); ++i) seeds[i][0] = x0[i];
    return seeds;
}

std::vector<FracSeries> build_and_iterate(const SegmentProblem& prob, const AlphaChoice& choice) {
    const std::size_t n = prob.n;
    const SeriesBasis& basis = prob.basis;
    if (basis.alpha != choice.alpha) throw Error("incompatible bases");
    if (prob.A0.size() != n * n || prob.forcing.size() != n || prob.x0.size() != n)
        throw Error("dimension mismatch");
    for (const auto& s : prob.A0)
        if (!(s.basis() == basis)) throw Error("incompatible bases");
    for (const auto& s : prob.forcing)
        if (!(s.basis() == basis)) throw Error("incompatible bases");

    const int K = basis.K;
    const int p = choice.p;
    const Rational nu = choice.nu();
    const auto len = static_cast<std::size_t>(K) + 1;

    std::vector<std::vector<double>> X(n, std::vector<double>(len, 0.0));
    const auto seeds = transform_initial_state(prob.x0, choice);
    for (std::size_t i = 0; i < n; ++i)
        for (int k = 0; k < std::min(p, K + 1); ++k) X[i][static_cast<std::size_t>(k)] = seeds[i][static_cast<std::size_t>(k)];

    // Skip structurally zero A0 entries; the convolution is then exact zero.
    std::vector<bool> a_nonzero(n * n);
    for (std::size_t e = 0; e < n * n; ++e)
        a_nonzero[e] = std::any_of(prob.A0[e].coeff().begin(), prob.A0[e].coeff().end(), [](double c) { return c != 0.0; });

    std::vector<double> rhs(n);
    for (int k = 0; k + p <= K; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        for (std::size_t i = 0; i < n; ++i) {
            double acc = prob.forcing[i].coeff()[uk];
            for (std::size_t c = 0; c < n; ++c) {
                if (!a_nonzero[i * n + c]) continue;
                const auto& a = prob.A0[i * n + c].coeff();
                for (std::size_t l = 0; l <= uk; ++l) acc += a[l] * X[c][uk - l];
            }
            rhs[i] = acc;
        }
        const double factor = 1.0 / gamma_ratio(choice.alpha, k, nu);
        for (std::size_t i = 0; i < n; ++i) X[i][uk + static_cast<std::size_t>(p)] = factor * rhs[i];
    }

    int reliable = K;
    for (const auto& s : prob.forcing) reliable = std::min(reliable, s.reliable() + p);
    for (const auto& s : prob.A0) reliable = std::min(reliable, s.reliable() + p);

    std::vector<FracSeries> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(FracSeries(basis, std::move(X[i])).with_reliable(reliable));
    return out;
}

} // namespace fdt
