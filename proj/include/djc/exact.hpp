// exact.hpp — exact reduced dynamics: J1 closed form, Volterra and inverse-Laplace backends

#pragma once

#include <cstddef>

#include "djc/types.hpp"

namespace djc::exact {

// Amplitude below this is flagged as a rate breakdown instead of extrapolated.
inline constexpr double kBreakdownThreshold = 1e-8;

struct VolterraOptions {
    bool richardson{true};  // combine h and h/2 passes (endpoint error ~h^4)
    double verify_tol{0.0}; // >0: error out if the h vs h/2 endpoints differ by more
};

struct IltOptions {
    int euler_terms{15};    // M; uses 2M+1 transform evaluations per point and contour
    double check_tol{0.0};  // >0: re-run with M+3 terms and fail on disagreement
};

// c1(t) for the impulse density from the closed form; any ascending grid.
AmplitudeSeries solve_exact_j1(const ModelParams& params, const std::vector<double>& t_grid);

// Product-integration trapezoidal solution of c1'(t) = -int_0^t f(t-u) c1(u) du
// on the uniform grid {0, h, ..., n_steps*h}, h = t_max/n_steps. The kernel is
// integrated exactly against the piecewise-linear amplitude (per-panel
// Gauss-Legendre moments); c1_dot is the evaluated convolution, not a
// finite difference. Works for every density.
AmplitudeSeries solve_volterra(const ModelParams& params, double t_max, std::size_t n_steps,
                               const VolterraOptions& options = {});

// Bromwich inversion of c1(0)/(s + fhat(s)) by the Fourier-series method with
// Euler-transform acceleration, evaluated per point; Ohmic/Triangular only,
// strictly positive times.
AmplitudeSeries solve_ilt(const ModelParams& params, const std::vector<double>& t_points,
                          const IltOptions& options = {});

// S = -2 Im(c1'/c1), gamma = -2 Re(c1'/c1); flagged invalid below the threshold.
std::vector<RateSample> rates_from_amplitude(const AmplitudeSeries& series);

QubitState reduced_state(Complex c0, Complex c1);

// Exact trajectory on a uniform grid: closed form for J1, Volterra otherwise.
Trajectory exact_trajectory(const ModelParams& params, double t_max, std::size_t n_points,
                            const VolterraOptions& options = {});

}  // namespace djc::exact
