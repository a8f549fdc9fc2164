#include "fdt/steps.hpp"

#include "fdt/error.hpp"
#include "fdt/problem_io.hpp"

#include <algorithm>
#include <sstream>

namespace fdt {

std::vector<double> SegmentSolution::evaluate(double t) const {
    std::vector<double> out;
    out.reserve(components.size());
    for (const auto& s : components) out.push_back(fdt::evaluate(s, t));
    return out;
}

StepPlan commensurate_step(const std::vector<Rational>& delays) {
    if (delays.empty()) throw Error("commensurate_step needs at least one delay");
    const Rational& tau1 = delays.front();
    std::int64_t k_star = 1;
    for (const auto& tau : delays) k_star = lcm(k_star, (tau / tau1).den());
    StepPlan plan;
    plan.tau_star = tau1 / Rational(k_star);
    for (const auto& tau : delays) {
        const Rational m = tau / plan.tau_star;
        plan.multipliers.push_back(static_cast<long>(m.num()));  // integer by construction of k*
    }
    return plan;
}

StepPlan plan_for(const DelaySystem& sys) {
    StepPlan plan;
    if (sys.delays.empty())
        plan.tau_star = sys.horizon;
    else
        plan = commensurate_step(sys.delays);
    plan.num_segments = std::max<long>(1, static_cast<long>(ceil(sys.horizon / plan.tau_star)));
    return plan;
}

DelaySource resolve_delayed_term(long j, long multiplier) {
    if (j - multiplier >= 1) return {DelaySource::Kind::Segment, j - multiplier};
    return {DelaySource::Kind::InitialState, 0};
}

Rational segment_left(const StepPlan& plan, long j) { return Rational(j - 1) * plan.tau_star; }

Rational alignment_offset(const StepPlan& plan, long j, std::size_t delay_index) {
    const long m = plan.multipliers.at(delay_index);
    const Rational tau = Rational(m) * plan.tau_star;
    return (segment_left(plan, j) - tau) - segment_left(plan, j - m);
}

std::vector<FracSeries> recenter_delayed_series(const SegmentSolution& src, const SeriesBasis& target) {
    std::vector<FracSeries> out;
    out.reserve(src.components.size());
    for (const auto& s : src.components) out.push_back(s.rebased(target));
    return out;
}

namespace {

bool all_zero(const FracSeries& s) {
    return std::all_of(s.coeff().begin(), s.coeff().end(), [](double c) { return c == 0.0; });
}

} // namespace

SegmentProblem build_segment_problem(const DelaySystem& sys, const StepPlan& plan, const AlphaChoice& choice, int K,
                                     long j, const std::vector<SegmentSolution>& done) {
    const std::size_t n = sys.n;
    const Rational t_left = segment_left(plan, j);

    SegmentProblem prob;
    prob.n = n;
    prob.basis = SeriesBasis{t_left.to_double(), choice.alpha, K};
    const SeriesBasis& basis = prob.basis;

    for (const auto& a : sys.A[0].entries()) prob.A0.push_back(from_polynomial(a, basis));

    std::vector<FracSeries> forcing;
    for (std::size_t row = 0; row < n; ++row) {
        Polynomial bu;
        for (std::size_t c = 0; c < sys.m; ++c) bu = bu + sys.B(row, c) * sys.u[c];
        forcing.push_back(from_polynomial(bu, basis));
    }

    for (std::size_t i = 0; i < sys.r(); ++i) {
        const PolyMatrix& Ai = sys.A[i + 1];
        if (Ai.is_zero()) continue;
        const long m = plan.multipliers[i];
        const DelaySource src = resolve_delayed_term(j, m);

        std::vector<FracSeries> delayed;
        if (src.kind == DelaySource::Kind::Segment) {
            if (!alignment_offset(plan, j, i).is_zero()) throw Error("delayed term off the segment grid");
            delayed = recenter_delayed_series(done.at(static_cast<std::size_t>(src.segment - 1)), basis);
        } else {
            const double tau = sys.delays[i].to_double();
            for (const auto& phi : sys.phi) delayed.push_back(from_polynomial(phi.shifted(-tau), basis));
        }

        for (std::size_t row = 0; row < n; ++row)
            for (std::size_t c = 0; c < n; ++c) {
                if (Ai(row, c).is_zero() || all_zero(delayed[c])) continue;
                forcing[row] = linear_combine(1.0, forcing[row], 1.0,
                                              cauchy_product(from_polynomial(Ai(row, c), basis), delayed[c]));
            }
    }
    prob.forcing = std::move(forcing);

    if (j == 1) {
        for (const auto& phi : sys.phi) prob.x0.push_back(phi(0.0));
    } else {
        prob.x0 = done.at(static_cast<std::size_t>(j - 2)).evaluate(basis.t0);
    }
    return prob;
}

std::vector<SegmentSolution> solve(const DelaySystem& sys, const SolverConfig& cfg) {
    auto violations = validate(sys);
    for (auto& v : validate(cfg)) violations.push_back(std::move(v));
    if (!violations.empty()) throw ValidationError(std::move(violations));

    const AlphaChoice choice = choose_alpha(sys.nu);
    const StepPlan plan = plan_for(sys);

    std::vector<SegmentSolution> out;
    out.reserve(static_cast<std::size_t>(plan.num_segments));
    for (long j = 1; j <= plan.num_segments; ++j) {
        try {
            SegmentProblem prob = build_segment_problem(sys, plan, choice, cfg.K, j, out);
            SegmentSolution seg;
            seg.index = j;
            seg.t_left = segment_left(plan, j);
            seg.t_right = segment_left(plan, j + 1);
            seg.basis = prob.basis;
            seg.components = build_and_iterate(prob, choice);
            out.push_back(std::move(seg));
        } catch (const Error& e) {
            throw Error("segment " + std::to_string(j) + ": " + e.what());
        }
    }
    return out;
}

std::vector<std::string> sufficiency_warnings(const DelaySystem& sys, const SolverConfig& cfg) {
    std::size_t deg = 0;
    for (const auto& A : sys.A) deg = std::max(deg, A.max_degree());
    std::size_t bu = 0;
    for (const auto& u : sys.u) bu = std::max(bu, u.degree());
    deg = std::max(deg, sys.B.max_degree() + bu);
    for (const auto& phi : sys.phi) deg = std::max(deg, phi.degree());

    const AlphaChoice choice = choose_alpha(sys.nu);
    const StepPlan plan = plan_for(sys);
    const Rational reach = Rational(cfg.K, choice.q);
    const Rational need = Rational(static_cast<std::int64_t>(deg)) + sys.nu * Rational(plan.num_segments);

    std::vector<std::string> out;
    if (reach < need) {
        std::ostringstream os;
        os << "truncation K = " << cfg.K << " reaches power " << reach << " but data degree " << deg << " plus nu*"
           << plan.num_segments << " segments needs " << need << "; late segments may be truncated";
        out.push_back(os.str());
    }
    return out;
}

} // namespace fdt
