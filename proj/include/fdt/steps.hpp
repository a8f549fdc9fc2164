#pragma once

#include "fdt/model.hpp"
#include "fdt/rational.hpp"
#include "fdt/recurrence.hpp"
#include "fdt/series.hpp"

#include <string>
#include <vector>

namespace fdt {

/// Uniform method-of-steps grid: tau_i = multipliers[i] * tau_star exactly.
struct StepPlan {
    Rational tau_star{1};
    std::vector<long> multipliers;
    long num_segments = 1;

    friend bool operator==(const StepPlan&, const StepPlan&) = default;
};

/// Solution on ((index-1)*tau*, index*tau*], expanded at t_left.
struct SegmentSolution {
    long index = 1;
    Rational t_left;
    Rational t_right;
    SeriesBasis basis;
    std::vector<FracSeries> components;

    /// State vector at t in [t_left, t_right].
    [[nodiscard]] std::vector<double> evaluate(double t) const;
};

/// Largest tau* dividing every delay: k_i = tau_i/tau_1, k* = lcm of the
/// denominators of k_i, tau* = tau_1/k*.
StepPlan commensurate_step(const std::vector<Rational>& delays);

/// Plan for a system over its horizon; with no delays the whole horizon is
/// one segment.
StepPlan plan_for(const DelaySystem& sys);

/// Where x(t - tau_i) comes from for t in segment j.
struct DelaySource {
    enum class Kind { InitialState, Segment };
    Kind kind = Kind::InitialState;
    long segment = 0;  ///< valid for Kind::Segment

    friend bool operator==(const DelaySource&, const DelaySource&) = default;
};

DelaySource resolve_delayed_term(long j, long multiplier);

/// Left endpoint of segment j: (j-1)*tau*.
Rational segment_left(const StepPlan& plan, long j);

/// (t0_j - tau_i) - t0_{j-m_i}; zero by construction. Exposed so the
/// alignment can be checked directly.
Rational alignment_offset(const StepPlan& plan, long j, std::size_t delay_index);

/// The delayed source segment re-read on the target segment's grid. Since
/// the source's expansion point is exactly t0_j - tau_i, the coefficients
/// carry over unchanged.
std::vector<FracSeries> recenter_delayed_series(const SegmentSolution& src, const SeriesBasis& target);

/// The delay-free problem for segment j given the segments already solved.
SegmentProblem build_segment_problem(const DelaySystem& sys, const StepPlan& plan, const AlphaChoice& choice, int K,
                                     long j, const std::vector<SegmentSolution>& done);

/// Method of steps over the whole horizon.
std::vector<SegmentSolution> solve(const DelaySystem& sys, const SolverConfig& cfg);

/// Truncation-order advice (non-fatal): K/q should cover the highest data
/// degree plus nu per segment.
std::vector<std::string> sufficiency_warnings(const DelaySystem& sys, const SolverConfig& cfg);

} // namespace fdt
