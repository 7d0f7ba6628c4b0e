// djc_main.cpp — command-line front end: simulate, optimize-tau, distance, breakdown-times

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "djc/run.hpp"

namespace {

struct CommonArgs {
    std::optional<std::string> config;
    std::optional<std::string> density;
    std::optional<double> eta, g2, omega0, tmax, horizon;
    std::optional<std::size_t> points;
    std::optional<std::string> methods, tau;
    std::string out_path;
    std::optional<std::string> save_config;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config, "scenario file (key = value lines)");
    cmd->add_option("--density", args.density, "impulse|ohmic|triangular");
    cmd->add_option("--eta", args.eta, "coupling eta (ohmic/triangular)");
    cmd->add_option("--g2", args.g2, "|g|^2/omega_c^2 (impulse)");
    cmd->add_option("--omega0", args.omega0, "qubit frequency Omega0/omega_c");
    cmd->add_option("--tmax", args.tmax, "trajectory end time omega_c*t");
    cmd->add_option("--points", args.points, "trajectory grid points");
    cmd->add_option("--methods", args.methods, "comma list of exact,cgle,rwale,tcl2,tcl4");
    cmd->add_option("--tau", args.tau, "coarse-graining time (omega_c*tau) or 'auto'");
    cmd->add_option("--horizon", args.horizon, "metric horizon omega_c*T (default 100)");
    cmd->add_option("--out", args.out_path, "output CSV path (default stdout)");
    cmd->add_option("--save-config", args.save_config, "write the resolved scenario to a file");
}

djc::cli::Scenario build_scenario(const CommonArgs& args) {
    djc::cli::Scenario sc;
    if (args.config) sc = djc::cli::parse_scenario_file(*args.config);
    if (args.density) djc::cli::scenario_set(sc, "density", *args.density);
    if (args.eta) djc::cli::scenario_set(sc, "eta", std::to_string(*args.eta));
    if (args.g2) djc::cli::scenario_set(sc, "g2", std::to_string(*args.g2));
    if (args.omega0) sc.omega0 = *args.omega0;
    if (args.tmax) sc.tmax = *args.tmax;
    if (args.points) sc.points = *args.points;
    if (args.methods) djc::cli::scenario_set(sc, "methods", *args.methods);
    if (args.tau) djc::cli::scenario_set(sc, "tau", *args.tau);
    if (args.horizon) sc.horizon = *args.horizon;
    sc.validate();
    if (args.save_config) {
        std::ofstream f(*args.save_config);
        if (!f) throw djc::ConfigError("cli", "cannot write scenario to " + *args.save_config);
        f << djc::cli::serialize_scenario(sc);
    }
    return sc;
}

template <typename Fn>
int with_output(const std::string& path, Fn&& fn) {
    if (path.empty()) {
        fn(std::cout);
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw djc::ConfigError("cli", "cannot open output file " + path);
    fn(f);
    return 0;
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"damped Jaynes-Cummings qubit: exact dynamics vs master equations"};
    app.require_subcommand(1);

    CommonArgs sim_args, opt_args, dist_args, brk_args;
    std::size_t n_max = 10;

    CLI::App* sim = app.add_subcommand("simulate", "trajectories for every requested method");
    add_common(sim, sim_args);
    CLI::App* opt = app.add_subcommand("optimize-tau", "optimize the coarse-graining time");
    add_common(opt, opt_args);
    CLI::App* dist = app.add_subcommand("distance", "per-time trace-norm distance to exact");
    add_common(dist, dist_args);
    CLI::App* brk = app.add_subcommand("breakdown-times", "impulse-density rate-divergence times");
    add_common(brk, brk_args);
    brk->add_option("--nmax", n_max, "largest breakdown index n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sim->parsed()) {
            const auto sc = build_scenario(sim_args);
            const auto result = djc::cli::run_simulate(sc);
            print_warnings(result.warnings);
            for (const auto& s : result.series)
                if (s.rwa_unsuitable) std::cerr << "note: " << s.note << "\n";
            if (result.tau_was_optimized)
                std::cerr << "tau* = " << result.tau_used << " (optimized, horizon "
                          << sc.horizon << ")\n";
            return with_output(sim_args.out_path,
                               [&](std::ostream& os) { djc::cli::write_trajectory_csv(result, os); });
        }
        if (opt->parsed()) {
            auto sc = build_scenario(opt_args);
            sc.tau_auto = true;
            const auto result = djc::cli::run_optimize(sc);
            print_warnings(result.warnings);
            std::printf("tau_star = %.6f\n", result.scan.tau_star);
            std::printf("D(tau_star) = %.6f\n", result.scan.d_star);
            if (result.d_rwa)
                std::printf("D_RWA = %.6f\n", *result.d_rwa);
            else
                std::printf("D_RWA = unsuitable (%s)\n", result.rwa_note.c_str());
            return with_output(opt_args.out_path,
                               [&](std::ostream& os) { djc::cli::write_scan_csv(result, os); });
        }
        if (dist->parsed()) {
            const auto sc = build_scenario(dist_args);
            const auto result = djc::cli::run_distance(sc);
            return with_output(dist_args.out_path,
                               [&](std::ostream& os) { djc::cli::write_distance_csv(result, os); });
        }
        if (brk->parsed()) {
            const auto sc = build_scenario(brk_args);
            const auto times = djc::cli::run_breakdown(sc, n_max);
            return with_output(brk_args.out_path,
                               [&](std::ostream& os) { djc::cli::write_breakdown_csv(times, os); });
        }
    } catch (const djc::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const djc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
