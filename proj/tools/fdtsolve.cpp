// fdtsolve: method-of-steps / fractional differential transform solver for
// linear Caputo systems with commensurate state delays.

#include "fdt/error.hpp"
#include "fdt/problem_io.hpp"
#include "fdt/report.hpp"
#include "fdt/steps.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

bool write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << body;
    return static_cast<bool>(out);
}

void print_summary(std::ostream& os, const fdt::RunReport& r) {
    os << "nu = " << r.nu << ", alpha = " << r.alpha << ", tau* = " << r.plan.tau_star
       << ", segments = " << r.plan.num_segments << "\n";
    for (const auto& seg : r.segments) {
        os << "segment " << seg.index << " (" << seg.t_left << ", " << seg.t_right << "]\n";
        for (std::size_t c = 0; c < seg.components.size(); ++c) {
            os << "  x" << c + 1 << ":";
            const auto recs = fdt::nonzero_records(seg.components[c]);
            if (recs.empty()) os << " 0";
            for (const auto& rec : recs) os << " [" << rec.k << "] " << fdt::format_real(rec.coeff);
            os << "\n";
        }
    }
    if (!r.trajectory.empty()) {
        const auto& last = r.trajectory.back();
        os << "x(" << last.t << ") =";
        for (double v : last.x) os << " " << fdt::format_real(v);
        os << "\n";
    }
    if (r.oracle_max_abs_error) os << "oracle_max_abs_error = " << fdt::format_real(*r.oracle_max_abs_error) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fractional differential transform solver for linear Caputo systems with state delays"};
    app.require_subcommand(1);

    std::string problem_path;
    std::string coeffs_path;
    std::string traj_path;
    std::string format = "csv";
    bool check_oracle = false;
    double oracle_step = 5e-5;

    auto* solve = app.add_subcommand("solve", "Solve a problem file");
    solve->add_option("file", problem_path, "Problem file")->required();
    solve->add_option("--out-coeffs", coeffs_path, "Write the per-segment coefficient table");
    solve->add_option("--out-traj", traj_path, "Write the sampled trajectory");
    solve->add_flag("--check-oracle", check_oracle, "Cross-check every segment against the ABM oracle");
    solve->add_option("--oracle-step", oracle_step, "Largest ABM step for --check-oracle")
        ->check(CLI::PositiveNumber);
    solve->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    std::ifstream in(problem_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << problem_path << "'\n";
        return kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    try {
        const fdt::Problem prob = fdt::parse_problem(buf.str());
        const auto& sys = prob.system;
        for (const auto& w : fdt::sufficiency_warnings(sys, prob.config)) std::cerr << "warning: " << w << "\n";

        fdt::RunReport report;
        report.nu = sys.nu;
        report.alpha = fdt::choose_alpha(sys.nu).alpha;
        report.plan = fdt::plan_for(sys);
        report.segments = fdt::solve(sys, prob.config);
        report.trajectory = fdt::sample_trajectory(report.segments, report.plan, sys.horizon, prob.config.sample_step);
        if (check_oracle) {
            double worst = 0.0;
            for (const auto& c : fdt::oracle_check(sys, prob.config, report.segments, oracle_step))
                worst = std::max(worst, c.max_abs_error);
            report.oracle_max_abs_error = worst;
        }

        const bool json = format == "json";
        if (!traj_path.empty()) {
            const auto body = json ? fdt::trajectory_json(report.trajectory) : fdt::trajectory_csv(report.trajectory, sys.n);
            if (!write_file(traj_path, body)) {
                std::cerr << "error: cannot write '" << traj_path << "'\n";
                return kExitUsage;
            }
        }
        if (!coeffs_path.empty()) {
            const auto body = json ? fdt::coefficients_json(report.segments) : fdt::coefficients_csv(report.segments);
            if (!write_file(coeffs_path, body)) {
                std::cerr << "error: cannot write '" << coeffs_path << "'\n";
                return kExitUsage;
            }
        }
        if (json)
            std::cout << fdt::run_report_json(report);
        else
            print_summary(std::cout, report);
    } catch (const fdt::ValidationError& e) {
        std::cerr << "error: invalid problem\n";
        for (const auto& v : e.violations()) std::cerr << "  " << v << "\n";
        return kExitInvalid;
    } catch (const fdt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}
