// run.hpp — the CLI subcommands as library calls, so tests can drive them in-process

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "djc/scenario.hpp"
#include "djc/types.hpp"

namespace djc::cli {

struct MethodSeries {
    Method method{Method::Exact};
    Trajectory traj;
    bool rwa_unsuitable{false};
    std::string note;
};

struct SimulateOutput {
    std::vector<double> t;
    std::vector<MethodSeries> series;  // exact always first when requested
    double tau_used{0.0};
    bool tau_was_optimized{false};
    std::vector<std::string> warnings;
};

struct OptimizeOutput {
    TauScan scan;
    std::optional<double> d_rwa;       // absent when RWA is unsuitable
    std::string rwa_note;
    std::vector<std::string> warnings;
};

struct DistanceOutput {
    std::vector<double> t;
    std::vector<std::pair<Method, std::vector<double>>> columns;
    double tau_used{0.0};
};

SimulateOutput run_simulate(const Scenario& sc);
OptimizeOutput run_optimize(const Scenario& sc);
DistanceOutput run_distance(const Scenario& sc);
std::vector<double> run_breakdown(const Scenario& sc, std::size_t n_max);

void write_trajectory_csv(const SimulateOutput& out, std::ostream& os);
void write_scan_csv(const OptimizeOutput& out, std::ostream& os);
void write_distance_csv(const DistanceOutput& out, std::ostream& os);
void write_breakdown_csv(const std::vector<double>& times, std::ostream& os);

}  // namespace djc::cli
