// markov.hpp — CG-LE/C-LE coarse-grained rates, RWA-LE rates, exponential trajectories

#pragma once

#include <cstddef>

#include "djc/types.hpp"

namespace djc::markov {

// Coarse-grained decay rate gamma(tau) = int_0^inf J(w) tau sinc^2((Omega0-w)tau/2) dw,
// evaluated in closed form per density. The C-LE reduces to the same expression.
// Triangular rejects Omega0 == omega_c (logarithmic singularity).
CoarseGrainedRate cg_gamma(const SpectralDensity& density, double omega_0, double tau);

// Constant RWA-LE pair (S, gamma) = (2 Im, 2 Re) Gamma_{+-}(Omega0); the impulse
// density returns an unsuitable result (the rate is zero or singular there).
RwaResult rwa_rates(const SpectralDensity& density, double omega_0);

// rho11(t) = rho11(0) e^{-gamma t}, rho01(t) = rho01(0) e^{(iS - gamma) t / 2}
// on a uniform grid. CG-LE passes S = 0.
Trajectory markov_trajectory(double S, double gamma, const QubitState& rho0, double t_max,
                             std::size_t n_points);

// Markov truncation error bound for the Ohmic density:
// (pi/2 - arctan(omega_c t)) * eta * omega_c.
double rwa_truncation_bound(const SpectralDensity& density, double t);

}  // namespace djc::markov
