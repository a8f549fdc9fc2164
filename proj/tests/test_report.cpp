#include "fdt/problem_io.hpp"
#include "fdt/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

using fdt::Rational;

namespace {

fdt::Problem example(const Rational& nu) {
    std::ifstream in(std::string(FDT_DATA_DIR) + "/example6.frac");
    std::stringstream ss;
    ss << in.rdbuf();
    auto prob = fdt::parse_problem(ss.str());
    prob.system.nu = nu;
    return prob;
}

} // namespace

TEST_CASE("sample_times merges the grid, segment ends and the horizon") {
    fdt::StepPlan plan;
    plan.tau_star = Rational(1, 3);
    plan.num_segments = 3;
    const auto ts = fdt::sample_times(plan, Rational(3, 4), Rational(1, 4));
    const std::vector<Rational> want{Rational(0), Rational(1, 4), Rational(1, 3), Rational(1, 2),
                                     Rational(2, 3), Rational(3, 4)};
    CHECK(ts == want);
    for (std::size_t i = 1; i < ts.size(); ++i) CHECK(ts[i - 1] < ts[i]);
}

TEST_CASE("owning_segment uses half-open intervals") {
    fdt::StepPlan plan;
    plan.tau_star = Rational(1, 3);
    plan.num_segments = 2;
    CHECK(fdt::owning_segment(plan, Rational(0)) == 1);
    CHECK(fdt::owning_segment(plan, Rational(1, 6)) == 1);
    CHECK(fdt::owning_segment(plan, Rational(1, 3)) == 1);
    CHECK(fdt::owning_segment(plan, Rational(1, 3) + Rational(1, 1000000)) == 2);
    CHECK(fdt::owning_segment(plan, Rational(2, 3)) == 2);
}

TEST_CASE("trajectory at the horizon for integer order") {
    const auto prob = example(Rational(1));
    const auto plan = fdt::plan_for(prob.system);
    const auto segs = fdt::solve(prob.system, prob.config);
    const auto traj = fdt::sample_trajectory(segs, plan, prob.system.horizon, prob.config.sample_step);
    REQUIRE(traj.size() == 21);
    CHECK(traj.front().t == Rational(0));
    CHECK(traj.back().t == Rational(2, 3));
    const double t = 2.0 / 3.0;
    const double x22 = 5.0 / 486 + t + 7.0 / 9 * t * t + 2.0 / 9 * t * t * t + 0.5 * t * t * t * t;
    const double x12 = 7.0 / 162 - 2.0 / 9 * t + 1.0 / 6 * t * t + 1.0 / 3 * t * t * t;
    CHECK(std::abs(traj.back().x[1] - x22) < 1e-13);
    CHECK(std::abs(traj.back().x[0] - x12) < 1e-13);
    // boundary t = 1/3 appears once, from segment 1
    int count = 0;
    for (const auto& p : traj) count += p.t == Rational(1, 3);
    CHECK(count == 1);
    for (const auto& p : traj)
        if (p.t == Rational(1, 3)) CHECK(std::abs(p.x[1] - 4.0 / 9.0) < 1e-15);
}

TEST_CASE("CSV and JSON output") {
    const auto prob = example(Rational(1, 2));
    const auto plan = fdt::plan_for(prob.system);
    const auto segs = fdt::solve(prob.system, prob.config);
    const auto traj = fdt::sample_trajectory(segs, plan, prob.system.horizon, prob.config.sample_step);

    const std::string csv = fdt::trajectory_csv(traj, 2);
    CHECK(csv.rfind("t,x1,x2\n0,0,0\n", 0) == 0);
    CHECK(csv == fdt::trajectory_csv(fdt::sample_trajectory(fdt::solve(prob.system, prob.config), plan,
                                                            prob.system.horizon, prob.config.sample_step),
                                     2));

    const std::string coeffs = fdt::coefficients_csv(segs);
    CHECK(coeffs.rfind("segment,component,k,exponent,coeff\n1,2,1,1/2,1.128379167095", 0) == 0);
    CHECK(coeffs.find("\n2,1,2,1,") != std::string::npos);

    fdt::RunReport report{prob.system.nu, Rational(1, 2), plan, segs, traj, 3e-6};
    const auto j = nlohmann::json::parse(fdt::run_report_json(report));
    CHECK(j["plan"]["tau_star"] == "1/3");
    CHECK(j["plan"]["multipliers"] == nlohmann::json::array({1, 2}));
    CHECK(j["segments"].size() == 2);
    CHECK(j["segments"][1]["components"][1]["coefficients"].size() == 6);
    CHECK(j["trajectory"].size() == traj.size());
    CHECK(j["oracle_max_abs_error"].get<double>() == 3e-6);
    report.oracle_max_abs_error.reset();
    CHECK(nlohmann::json::parse(fdt::run_report_json(report))["oracle_max_abs_error"].is_null());
    CHECK(nlohmann::json::parse(fdt::trajectory_json(traj)).size() == traj.size());
    CHECK(nlohmann::json::parse(fdt::coefficients_json(segs)).size() == 2);
}

TEST_CASE("oracle_check on the two-delay example") {
    const auto prob = example(Rational(1, 2));
    const auto segs = fdt::solve(prob.system, prob.config);
    const auto checks = fdt::oracle_check(prob.system, prob.config, segs, 1e-3);
    REQUIRE(checks.size() == 2);
    CHECK(checks[0].max_abs_error < 1e-10);  // linear forcing: the product trapezoid is exact
    CHECK(checks[1].max_abs_error < 5e-4);
    CHECK(checks[1].nodes == 335);
}
