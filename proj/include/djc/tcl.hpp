// tcl.hpp — time-convolutionless rates at second and fourth order, trajectories,
// the triangular asymptote, and the impulse-density breakdown times

#pragma once

#include <cstddef>

#include "djc/types.hpp"

namespace djc::tcl {

// Triangular formulas are rejected inside this window around omega_0 == omega_c
// instead of regularized (they genuinely diverge there).
inline constexpr double kTriangularWindow = 1e-6;

struct Tcl4Options {
    std::size_t n_base{600};  // product-trapezoid panels at the largest time
    double tol{1e-3};         // ceiling on the step-halving error estimate
};

struct Tcl4Result {
    RateSample rate;          // fourth-order correction (S4, gamma4)
    double error_estimate{0.0};
};

// Shifted kernel integral Z(t, t') = int_0^t f(t' - t1) dt1.
Complex z_kernel(const SpectralDensity& density, double omega_0, double t, double t_prime);

// Closed-form second-order (Redfield) pair (S2, gamma2).
RateSample tcl2_rates(const SpectralDensity& density, double omega_0, double t);

// Fourth-order correction. Impulse uses the closed form; Ohmic/triangular the
// product-trapezoid double quadrature with Richardson step-halving.
Tcl4Result tcl4_correction(const SpectralDensity& density, double omega_0, double t,
                           const Tcl4Options& options = {});

// The double quadrature itself, available for every density (the impulse case
// cross-checks the closed form).
Tcl4Result tcl4_numeric(const SpectralDensity& density, double omega_0, double t,
                        const Tcl4Options& options = {});

// Rates at the requested order (2 or 4): TCL4 = TCL2 + correction.
RateSample tcl_rates(int order, const SpectralDensity& density, double omega_0, double t,
                     const Tcl4Options& options = {});

// rho from cumulative composite-Simpson integration of a rate series on a
// uniform grid; both TCL orders route through this one integrator.
Trajectory trajectory_from_rates(const std::vector<double>& t_grid,
                                 const std::vector<RateSample>& rates, const QubitState& rho0);

// Rates on the grid plus trajectory_from_rates; order 2 or 4.
Trajectory tcl_trajectory(int order, const ModelParams& params, double t_max,
                          std::size_t n_points, const Tcl4Options& options = {});

// int_0^inf gamma2 = 2 eta (omega_c/(Omega0 - omega_c) + ln((Omega0 - omega_c)/Omega0)),
// triangular with Omega0 > omega_c strictly.
double tcl2_asymptote_j3(const SpectralDensity& density, double omega_0);

// t_n = (2/delta)(arctan(delta/|Omega0 - omega_c|) + n pi), n = 0..n_max;
// resonance resolves arctan to pi/2. Impulse density only.
std::vector<double> breakdown_times_j1(const ModelParams& params, std::size_t n_max);

}  // namespace djc::tcl
