#pragma once

#include "fdt/model.hpp"
#include "fdt/rational.hpp"
#include "fdt/steps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fdt {

struct TrajectoryPoint {
    Rational t;
    std::vector<double> x;
};

/// 0, step, 2*step, ... up to the horizon, merged with every segment
/// endpoint inside [0, horizon] and the horizon itself; strictly increasing.
std::vector<Rational> sample_times(const StepPlan& plan, const Rational& horizon, const Rational& step);

/// Segment owning time t: segment 1 for t = 0, otherwise the j with
/// t in ((j-1)tau*, j tau*].
long owning_segment(const StepPlan& plan, const Rational& t);

std::vector<TrajectoryPoint> sample_trajectory(const std::vector<SegmentSolution>& segments, const StepPlan& plan,
                                               const Rational& horizon, const Rational& step);

struct OracleSegmentCheck {
    long segment;
    double max_abs_error;
    std::size_t nodes;
};

/// Re-solves every delay-free segment problem with the ABM oracle (step <=
/// h) and records the largest deviation from the series at the oracle nodes.
std::vector<OracleSegmentCheck> oracle_check(const DelaySystem& sys, const SolverConfig& cfg,
                                             const std::vector<SegmentSolution>& segments, double h);

struct RunReport {
    Rational nu;
    Rational alpha;
    StepPlan plan;
    std::vector<SegmentSolution> segments;
    std::vector<TrajectoryPoint> trajectory;
    std::optional<double> oracle_max_abs_error;
};

/// `t,x1,...,xn` with 17 significant digits.
std::string trajectory_csv(const std::vector<TrajectoryPoint>& trajectory, std::size_t n);
/// `segment,component,k,exponent,coeff`, nonzero coefficients only.
std::string coefficients_csv(const std::vector<SegmentSolution>& segments);

std::string trajectory_json(const std::vector<TrajectoryPoint>& trajectory);
std::string coefficients_json(const std::vector<SegmentSolution>& segments);
std::string run_report_json(const RunReport& report);

} // namespace fdt
