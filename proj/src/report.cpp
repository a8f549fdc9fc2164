#include "fdt/report.hpp"

#include "fdt/kernels.hpp"
#include "fdt/oracle.hpp"
#include "fdt/series.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace fdt {

std::vector<Rational> sample_times(const StepPlan& plan, const Rational& horizon, const Rational& step) {
    std::set<Rational> times;
    const auto count = floor(horizon / step);
    for (std::int64_t i = 0; i <= count; ++i) times.insert(Rational(i) * step);
    for (long j = 1; j <= plan.num_segments; ++j) {
        const Rational end = Rational(j) * plan.tau_star;
        if (end <= horizon) times.insert(end);
    }
    times.insert(horizon);
    return {times.begin(), times.end()};
}

long owning_segment(const StepPlan& plan, const Rational& t) {
    if (!t.is_positive()) return 1;
    return std::max<long>(1, static_cast<long>(ceil(t / plan.tau_star)));
}

std::vector<TrajectoryPoint> sample_trajectory(const std::vector<SegmentSolution>& segments, const StepPlan& plan,
                                               const Rational& horizon, const Rational& step) {
    const auto times = sample_times(plan, horizon, step);
    std::vector<TrajectoryPoint> out(times.size());
    if (segments.empty()) return out;
    const std::size_t n = segments.front().components.size();

    // Batch the times of each segment so each component is one kernel call.
    std::size_t begin = 0;
    while (begin < times.size()) {
        const long j = owning_segment(plan, times[begin]);
        std::size_t end = begin;
        std::vector<double> ts;
        while (end < times.size() && owning_segment(plan, times[end]) == j) ts.push_back(times[end++].to_double());
        const auto& seg = segments.at(static_cast<std::size_t>(j - 1));
        std::vector<double> vals(ts.size());
        for (std::size_t i = begin; i < end; ++i) {
            out[i].t = times[i];
            out[i].x.resize(n);
        }
        for (std::size_t c = 0; c < n; ++c) {
            const auto& s = seg.components[c];
            kernels::evaluate_many(s.coeff(), s.basis().alpha.to_double(), s.basis().t0, ts, vals);
            for (std::size_t i = begin; i < end; ++i) out[i].x[c] = vals[i - begin];
        }
        begin = end;
    }
    return out;
}

std::vector<OracleSegmentCheck> oracle_check(const DelaySystem& sys, const SolverConfig& cfg,
                                             const std::vector<SegmentSolution>& segments, double h) {
    const AlphaChoice choice = choose_alpha(sys.nu);
    const StepPlan plan = plan_for(sys);
    std::vector<OracleSegmentCheck> out;
    std::vector<SegmentSolution> done;
    for (const auto& seg : segments) {
        const SegmentProblem prob = build_segment_problem(sys, plan, choice, cfg.K, seg.index, done);
        std::vector<oracle::PowerSum> forcing;
        for (const auto& f : prob.forcing) {
            oracle::PowerSum ps{prob.basis.t0, {}};
            for (const auto& rec : nonzero_records(f)) ps.terms.push_back({rec.coeff, rec.exponent.to_double()});
            forcing.push_back(std::move(ps));
        }
        const auto traj = oracle::abm_solve(sys.A[0], forcing, sys.nu.to_double(), prob.x0, seg.t_left.to_double(),
                                            seg.t_right.to_double(), h);
        double err = 0.0;
        for (std::size_t c = 0; c < seg.components.size(); ++c) {
            const auto& s = seg.components[c];
            std::vector<double> vals(traj.t.size());
            kernels::evaluate_many(s.coeff(), s.basis().alpha.to_double(), s.basis().t0, traj.t, vals);
            for (std::size_t i = 0; i < vals.size(); ++i) err = std::max(err, std::abs(vals[i] - traj.values[c][i]));
        }
        out.push_back({seg.index, err, traj.t.size()});
        done.push_back(seg);
    }
    return out;
}

std::string trajectory_csv(const std::vector<TrajectoryPoint>& trajectory, std::size_t n) {
    std::ostringstream os;
    os << "t";
    for (std::size_t c = 1; c <= n; ++c) os << ",x" << c;
    os << "\n";
    for (const auto& p : trajectory) {
        os << format_real(p.t.to_double());
        for (double v : p.x) os << "," << format_real(v);
        os << "\n";
    }
    return os.str();
}

std::string coefficients_csv(const std::vector<SegmentSolution>& segments) {
    std::ostringstream os;
    os << "segment,component,k,exponent,coeff\n";
    for (const auto& seg : segments)
        for (std::size_t c = 0; c < seg.components.size(); ++c)
            for (const auto& rec : nonzero_records(seg.components[c]))
                os << seg.index << "," << c + 1 << "," << rec.k << "," << rec.exponent << "," << format_real(rec.coeff)
                   << "\n";
    return os.str();
}

namespace {

using nlohmann::ordered_json;

ordered_json trajectory_to_json(const std::vector<TrajectoryPoint>& trajectory) {
    auto arr = ordered_json::array();
    for (const auto& p : trajectory) arr.push_back({{"t", p.t.to_double()}, {"x", p.x}});
    return arr;
}

ordered_json segments_to_json(const std::vector<SegmentSolution>& segments) {
    auto arr = ordered_json::array();
    for (const auto& seg : segments) {
        auto comps = ordered_json::array();
        for (std::size_t c = 0; c < seg.components.size(); ++c) {
            auto recs = ordered_json::array();
            for (const auto& rec : nonzero_records(seg.components[c]))
                recs.push_back({{"k", rec.k}, {"exponent", rec.exponent.str()}, {"coeff", rec.coeff}});
            comps.push_back({{"component", c + 1},
                             {"reliable_index", seg.components[c].reliable()},
                             {"coefficients", std::move(recs)}});
        }
        arr.push_back({{"segment", seg.index},
                       {"t_left", seg.t_left.str()},
                       {"t_right", seg.t_right.str()},
                       {"components", std::move(comps)}});
    }
    return arr;
}

} // namespace

std::string trajectory_json(const std::vector<TrajectoryPoint>& trajectory) {
    return trajectory_to_json(trajectory).dump(2) + "\n";
}

std::string coefficients_json(const std::vector<SegmentSolution>& segments) {
    return segments_to_json(segments).dump(2) + "\n";
}

std::string run_report_json(const RunReport& report) {
    ordered_json plan = {{"nu", report.nu.str()},
                         {"alpha", report.alpha.str()},
                         {"tau_star", report.plan.tau_star.str()},
                         {"multipliers", report.plan.multipliers},
                         {"num_segments", report.plan.num_segments}};
    ordered_json out = {{"plan", std::move(plan)},
                        {"segments", segments_to_json(report.segments)},
                        {"trajectory", trajectory_to_json(report.trajectory)}};
    out["oracle_max_abs_error"] =
        report.oracle_max_abs_error ? ordered_json(*report.oracle_max_abs_error) : ordered_json(nullptr);
    return out.dump(2) + "\n";
}

} // namespace fdt
