#include "fdt/oracle.hpp"

#include "fdt/error.hpp"
#include "fdt/kernels.hpp"

#include <cmath>

namespace fdt::oracle {

double mittag_leffler(const MLParams& params, double z) {
    if (!(params.alpha > 0.0) || !(params.tol > 0.0)) throw Error("Mittag-Leffler parameters must be positive");
    if (z == 0.0) return 1.0;
    constexpr int kMaxTerms = 10'000;
    const double log_abs_z = std::log(std::abs(z));
    const double sign = z < 0.0 ? -1.0 : 1.0;

    auto log_term = [&](int k) { return k * log_abs_z - std::lgamma(params.alpha * k + 1.0); };

    double sum = 0.0;
    for (int k = 0; k < kMaxTerms; ++k) {
        const double lt = log_term(k);
        sum += (k % 2 == 1 ? sign : 1.0) * std::exp(lt);
        // Successive-term ratios decrease once Gamma dominates, so the tail
        // is bounded by a geometric series in the current ratio.
        const double ratio = std::exp(log_term(k + 1) - lt);
        if (ratio < 1.0 && k > 0) {
            const double tail = std::exp(log_term(k + 1)) / (1.0 - ratio);
            if (tail < params.tol) return sum;
        }
    }
    throw Error("Mittag-Leffler series did not converge");
}

double PowerSum::operator()(double t) const {
    const double s = t - center;
    double acc = 0.0;
    for (const auto& term : terms) acc += term.coeff * (term.exponent == 0.0 ? 1.0 : std::pow(s, term.exponent));
    return acc;
}

namespace {

// (1 + x)^e - 1 without cancellation for small x.
double pow1pm1(double x, double e) { return std::expm1(e * std::log1p(x)); }

} // namespace

Trajectory abm_solve(const PolyMatrix& A0, const std::vector<PowerSum>& forcing, double nu,
                     const std::vector<double>& x0, double t0, double t1, double h, int corrector_passes) {
    const std::size_t n = x0.size();
    if (!(nu > 0.0 && nu <= 1.0)) throw Error("ν out of (0,1]");
    if (A0.rows() != n || A0.cols() != n || forcing.size() != n) throw Error("dimension mismatch");
    if (!(h > 0.0) || !(t1 > t0)) throw Error("abm_solve needs h > 0 and t1 > t0");
    if (corrector_passes < 1) throw Error("abm_solve needs at least one corrector pass");
    const double steps = std::ceil((t1 - t0) / h * (1.0 - 1e-12));
    if (!(steps <= static_cast<double>(kMaxSteps))) throw Error("step-count overflow");
    const auto N = static_cast<std::size_t>(std::max(1.0, steps));
    const double step = (t1 - t0) / static_cast<double>(N);

    // Weights depend only on the lag d = n - j.
    std::vector<double> pred(N + 1), corr(N + 1);
    for (std::size_t d = 0; d <= N; ++d) {
        const double dd = static_cast<double>(d);
        pred[d] = d == 0 ? 1.0 : std::pow(dd, nu) * pow1pm1(1.0 / dd, nu);
        const double e = nu + 1.0;
        const double base = std::pow(dd + 1.0, e);
        const double x = 1.0 / (dd + 1.0);
        corr[d] = base * (pow1pm1(x, e) + pow1pm1(-x, e));  // (d+2)^e + d^e - 2(d+1)^e
    }
    const double pred_scale = std::pow(step, nu) / std::tgamma(nu + 1.0);
    const double corr_scale = std::pow(step, nu) / std::tgamma(nu + 2.0);

    Trajectory out;
    out.h = step;
    out.t.resize(N + 1);
    out.values.assign(n, std::vector<double>(N + 1, 0.0));
    std::vector<std::vector<double>> F(n, std::vector<double>(N + 1, 0.0));

    auto rhs = [&](double t, const std::vector<double>& y, std::vector<double>& f) {
        for (std::size_t i = 0; i < n; ++i) {
            double acc = forcing[i](t);
            for (std::size_t c = 0; c < n; ++c)
                if (!A0(i, c).is_zero()) acc += A0(i, c)(t) * y[c];
            f[i] = acc;
        }
    };

    std::vector<double> y(x0), f(n), yp(n), base_corr(n);
    out.t[0] = t0;
    rhs(t0, y, f);
    for (std::size_t i = 0; i < n; ++i) {
        out.values[i][0] = x0[i];
        F[i][0] = f[i];
    }

    for (std::size_t k = 0; k < N; ++k) {
        const double t_next = t0 + static_cast<double>(k + 1) * step;
        const double kd = static_cast<double>(k);
        const double a0 = std::pow(kd, nu + 1.0) - (kd - nu) * std::pow(kd + 1.0, nu);
        for (std::size_t i = 0; i < n; ++i) {
            const std::span<const double> hist(F[i].data(), k + 1);
            yp[i] = x0[i] + pred_scale * kernels::reversed_dot(pred, hist);
            base_corr[i] = a0 * F[i][0] + kernels::reversed_dot(corr, hist.subspan(1));
        }
        for (int pass = 0; pass < corrector_passes; ++pass) {
            rhs(t_next, yp, f);
            for (std::size_t i = 0; i < n; ++i) yp[i] = x0[i] + corr_scale * (f[i] + base_corr[i]);
        }
        rhs(t_next, yp, f);
        out.t[k + 1] = t_next;
        for (std::size_t i = 0; i < n; ++i) {
            out.values[i][k + 1] = yp[i];
            F[i][k + 1] = f[i];
        }
    }
    return out;
}

} // namespace fdt::oracle
