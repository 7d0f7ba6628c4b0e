#include "djc/run.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "djc/exact.hpp"
#include "djc/markov.hpp"
#include "djc/metrics.hpp"
#include "djc/tauopt.hpp"
#include "djc/tcl.hpp"

namespace djc::cli {

namespace {

std::string num(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double resolve_tau(const Scenario& sc, bool& optimized, std::vector<std::string>& warnings) {
    if (!sc.tau_auto) {
        optimized = false;
        return sc.tau;
    }
    optimized = true;
    tauopt::OptimizeOptions opts;
    opts.horizon = sc.horizon;
    const TauScan scan = tauopt::optimize_tau(sc.model(), opts);
    if (scan.validity_warning)
        warnings.push_back("coarse-graining validity omega_c*tau << 1 violated: tau = " +
                           num(scan.tau_star));
    if (scan.boundary)
        warnings.push_back("tau optimum sits on the scan boundary");
    return scan.tau_star;
}

Trajectory method_trajectory(const Scenario& sc, Method m, double tau,
                             const RwaResult& rwa) {
    const ModelParams params = sc.model();
    const QubitState rho0 = exact::reduced_state(params.c0, params.c1_0);
    switch (m) {
        case Method::Exact:
            return exact::exact_trajectory(params, sc.tmax, sc.points);
        case Method::Cgle: {
            const double gamma = markov::cg_gamma(params.density, params.omega_0, tau).gamma;
            return markov::markov_trajectory(0.0, gamma, rho0, sc.tmax, sc.points);
        }
        case Method::Rwale:
            return markov::markov_trajectory(rwa.S, rwa.gamma, rho0, sc.tmax, sc.points);
        case Method::Tcl2:
            return tcl::tcl_trajectory(2, params, sc.tmax, sc.points);
        case Method::Tcl4:
            return tcl::tcl_trajectory(4, params, sc.tmax, sc.points);
    }
    throw ConfigError("cli", "unknown method");
}

}  // namespace

SimulateOutput run_simulate(const Scenario& sc) {
    sc.validate();
    SimulateOutput out;
    const bool needs_tau = sc.has_method(Method::Cgle);
    out.tau_used = needs_tau ? resolve_tau(sc, out.tau_was_optimized, out.warnings) : 0.0;

    RwaResult rwa;
    if (sc.has_method(Method::Rwale)) rwa = markov::rwa_rates(sc.model().density, sc.omega0);

    // exact first, then the approximations in the canonical order
    const Method order[] = {Method::Exact, Method::Cgle, Method::Rwale, Method::Tcl2,
                            Method::Tcl4};
    for (const Method m : order) {
        if (!sc.has_method(m)) continue;
        MethodSeries series;
        series.method = m;
        if (m == Method::Rwale && !rwa.suitable) {
            series.rwa_unsuitable = true;
            series.note = rwa.caveat;
        } else {
            series.traj = method_trajectory(sc, m, out.tau_used, rwa);
            if (out.t.empty()) out.t = series.traj.t;
        }
        out.series.push_back(std::move(series));
    }
    if (out.t.empty()) {
        // every requested method was unsuitable; still emit the grid
        Trajectory grid = exact::exact_trajectory(sc.model(), sc.tmax, sc.points);
        out.t = grid.t;
    }
    return out;
}

OptimizeOutput run_optimize(const Scenario& sc) {
    sc.validate();
    if (!sc.tau_auto)
        throw ConfigError("cli", "optimize-tau needs tau = auto (an optimization horizon)");
    OptimizeOutput out;
    tauopt::OptimizeOptions opts;
    opts.horizon = sc.horizon;
    out.scan = tauopt::optimize_tau(sc.model(), opts);
    if (out.scan.validity_warning)
        out.warnings.push_back("coarse-graining validity omega_c*tau << 1 violated: tau = " +
                               num(out.scan.tau_star));
    if (out.scan.boundary) out.warnings.push_back("tau optimum sits on the scan boundary");
    const RwaResult rwa = markov::rwa_rates(sc.model().density, sc.omega0);
    if (rwa.suitable) {
        out.d_rwa = tauopt::rwa_distance(sc.model(), sc.horizon, opts.n_grid);
    } else {
        out.rwa_note = rwa.caveat;
    }
    return out;
}

DistanceOutput run_distance(const Scenario& sc) {
    sc.validate();
    if (!sc.has_method(Method::Exact))
        throw ConfigError("cli", "distance needs the exact method selected");
    bool any_approx = false;
    for (const Method m : sc.methods) any_approx |= (m != Method::Exact);
    if (!any_approx)
        throw ConfigError("cli", "distance needs at least one approximation selected");

    DistanceOutput out;
    bool optimized = false;
    std::vector<std::string> warnings;
    const bool needs_tau = sc.has_method(Method::Cgle);
    out.tau_used = needs_tau ? resolve_tau(sc, optimized, warnings) : 0.0;
    RwaResult rwa;
    if (sc.has_method(Method::Rwale)) rwa = markov::rwa_rates(sc.model().density, sc.omega0);

    const Trajectory exact_traj = method_trajectory(sc, Method::Exact, out.tau_used, rwa);
    out.t = exact_traj.t;
    const Method order[] = {Method::Cgle, Method::Rwale, Method::Tcl2, Method::Tcl4};
    for (const Method m : order) {
        if (!sc.has_method(m)) continue;
        if (m == Method::Rwale && !rwa.suitable) {
            out.columns.emplace_back(m, std::vector<double>());  // marked unsuitable
            continue;
        }
        const Trajectory traj = method_trajectory(sc, m, out.tau_used, rwa);
        std::vector<double> col(out.t.size());
        for (std::size_t i = 0; i < out.t.size(); ++i) {
            col[i] = metrics::trace_norm_diff({exact_traj.rho11[i], exact_traj.rho01[i]},
                                              {traj.rho11[i], traj.rho01[i]});
        }
        out.columns.emplace_back(m, std::move(col));
    }
    return out;
}

std::vector<double> run_breakdown(const Scenario& sc, std::size_t n_max) {
    sc.validate();
    if (sc.density != DensityKind::Impulse)
        throw ConfigError("cli", "breakdown-times applies to the impulse density");
    return tcl::breakdown_times_j1(sc.model(), n_max);
}

void write_trajectory_csv(const SimulateOutput& out, std::ostream& os) {
    os << "# schema=djc.trajectory.v1\n";
    os << "t";
    for (const MethodSeries& s : out.series) {
        const std::string p = to_string(s.method);
        os << "," << p << "_rho11," << p << "_re_rho01," << p << "_im_rho01," << p << "_gamma,"
           << p << "_S";
    }
    os << "\n";
    for (std::size_t i = 0; i < out.t.size(); ++i) {
        os << num(out.t[i]);
        for (const MethodSeries& s : out.series) {
            if (s.rwa_unsuitable) {
                os << ",unsuitable,unsuitable,unsuitable,unsuitable,unsuitable";
                continue;
            }
            const RateSample r = s.traj.rates[i];
            os << "," << num(s.traj.rho11[i]) << "," << num(s.traj.rho01[i].real()) << ","
               << num(s.traj.rho01[i].imag()) << ","
               << (r.valid ? num(r.gamma) : "nan") << "," << (r.valid ? num(r.S) : "nan");
        }
        os << "\n";
    }
}

void write_scan_csv(const OptimizeOutput& out, std::ostream& os) {
    os << "# schema=djc.tauscan.v1\n";
    os << "tau,distance\n";
    for (std::size_t i = 0; i < out.scan.tau.size(); ++i)
        os << num(out.scan.tau[i]) << "," << num(out.scan.distance[i]) << "\n";
}

void write_distance_csv(const DistanceOutput& out, std::ostream& os) {
    os << "# schema=djc.distance.v1\n";
    os << "t";
    for (const auto& [m, col] : out.columns) os << "," << to_string(m);
    os << "\n";
    for (std::size_t i = 0; i < out.t.size(); ++i) {
        os << num(out.t[i]);
        for (const auto& [m, col] : out.columns)
            os << "," << (col.empty() ? "unsuitable" : num(col[i]));
        os << "\n";
    }
}

void write_breakdown_csv(const std::vector<double>& times, std::ostream& os) {
    os << "# schema=djc.breakdown.v1\n";
    os << "n,t_n\n";
    for (std::size_t n = 0; n < times.size(); ++n)
        os << n << "," << num(times[n]) << "\n";
}

}  // namespace djc::cli
