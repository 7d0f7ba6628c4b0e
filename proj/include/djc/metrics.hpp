// metrics.hpp — trace-norm distance and its time average over a horizon

#pragma once

#include "djc/types.hpp"

namespace djc::metrics {

// ||rho_a - rho_b||_1 = 2 sqrt((rho11a - rho11b)^2 + |rho01a - rho01b|^2).
double trace_norm_diff(const QubitState& a, const QubitState& b);

// D_[0,T] = (1/2T) int_0^T ||rho_a(t) - rho_b(t)||_1 dt, trapezoidal on the
// common grid; both trajectories must share the grid and cover [0, T].
DistanceReport integrated_distance(const Trajectory& a, const Trajectory& b, double horizon);

}  // namespace djc::metrics
