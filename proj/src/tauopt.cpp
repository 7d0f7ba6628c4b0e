#include "djc/tauopt.hpp"

#include <algorithm>
#include <cmath>

#include "djc/detail/numerics.hpp"
#include "djc/exact.hpp"
#include "djc/markov.hpp"
#include "djc/metrics.hpp"

namespace djc::tauopt {

namespace {

// D against a constant-rate CG trajectory, sharing the precomputed exact grid.
double cg_distance(const Trajectory& exact_traj, const QubitState& rho0, double gamma,
                   double horizon) {
    double integral = 0.0;
    double prev = 0.0;
    for (std::size_t i = 0; i < exact_traj.t.size(); ++i) {
        const double t = exact_traj.t[i];
        const double r11 = rho0.rho11 * std::exp(-gamma * t);
        const Complex r01 = rho0.rho01 * std::exp(-0.5 * gamma * t);
        const double dp = exact_traj.rho11[i] - r11;
        const double d = 2.0 * std::sqrt(dp * dp + std::norm(exact_traj.rho01[i] - r01));
        if (i > 0) integral += 0.5 * (exact_traj.t[i] - exact_traj.t[i - 1]) * (d + prev);
        prev = d;
    }
    return integral / (2.0 * horizon);
}

}  // namespace

TauScan optimize_tau(const ModelParams& params, const OptimizeOptions& options) {
    params.validate();
    const double wc = params.density.omega_c;
    const double horizon = options.horizon > 0.0 ? options.horizon : 100.0 / wc;
    const double lo = options.scan_lo > 0.0 ? options.scan_lo : 1e-3 / wc;
    const double hi = options.scan_hi > 0.0
                          ? options.scan_hi
                          : (params.density.kind == DensityKind::Impulse ? 50.0 : 20.0) / wc;
    const double refine_tol = options.refine_tol > 0.0 ? options.refine_tol : 1e-6 / wc;
    if (!(lo > 0.0) || !(hi > lo) || options.n_scan < 8)
        throw DomainError("tauopt", "scan range must satisfy 0 < lo < hi with >= 8 points");

    const Trajectory exact_traj = exact::exact_trajectory(params, horizon, options.n_grid);
    const QubitState rho0 = exact::reduced_state(params.c0, params.c1_0);

    auto distance = [&](double tau) {
        const double gamma = markov::cg_gamma(params.density, params.omega_0, tau).gamma;
        return cg_distance(exact_traj, rho0, gamma, horizon);
    };

    TauScan scan;
    scan.tau.resize(options.n_scan);
    scan.distance.resize(options.n_scan);
    const double ratio = std::log(hi / lo);
    for (std::size_t i = 0; i < options.n_scan; ++i) {
        scan.tau[i] =
            lo * std::exp(ratio * static_cast<double>(i) / static_cast<double>(options.n_scan - 1));
    }
    detail::parallel_for(options.n_scan,
                         [&](std::size_t i) { scan.distance[i] = distance(scan.tau[i]); });

    std::size_t best = 0;
    for (std::size_t i = 1; i < options.n_scan; ++i)
        if (scan.distance[i] < scan.distance[best]) best = i;
    scan.boundary = (best == 0 || best == options.n_scan - 1);

    double a = scan.tau[best > 0 ? best - 1 : best];
    double b = scan.tau[best + 1 < options.n_scan ? best + 1 : best];
    if (a == b) {
        scan.tau_star = scan.tau[best];
        scan.d_star = scan.distance[best];
    } else {
        // golden-section refinement; each iteration keeps the incumbent interval
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = b - gr * (b - a);
        double x2 = a + gr * (b - a);
        double f1 = distance(x1);
        double f2 = distance(x2);
        while (b - a > refine_tol) {
            if (f1 < f2) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - gr * (b - a);
                f1 = distance(x1);
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + gr * (b - a);
                f2 = distance(x2);
            }
        }
        scan.tau_star = 0.5 * (a + b);
        scan.d_star = distance(scan.tau_star);
        if (scan.distance[best] < scan.d_star) {
            scan.tau_star = scan.tau[best];
            scan.d_star = scan.distance[best];
        }
    }
    scan.validity_warning = wc * scan.tau_star > 1.0;
    return scan;
}

double rwa_distance(const ModelParams& params, double horizon, std::size_t n_grid) {
    params.validate();
    const RwaResult rates = markov::rwa_rates(params.density, params.omega_0);
    if (!rates.suitable) throw DomainError("tauopt", rates.caveat);
    const Trajectory exact_traj = exact::exact_trajectory(params, horizon, n_grid);
    const QubitState rho0 = exact::reduced_state(params.c0, params.c1_0);
    const Trajectory rwa =
        markov::markov_trajectory(rates.S, rates.gamma, rho0, horizon, n_grid);
    return metrics::integrated_distance(exact_traj, rwa, horizon).integrated;
}

}  // namespace djc::tauopt
