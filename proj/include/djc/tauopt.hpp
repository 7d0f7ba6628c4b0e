// tauopt.hpp — coarse-graining time optimization against the exact solution

#pragma once

#include <cstddef>

#include "djc/types.hpp"

namespace djc::tauopt {

struct OptimizeOptions {
    double horizon{0.0};       // metric horizon T; 0 -> 100/omega_c
    std::size_t n_grid{10001}; // trajectory grid points on [0, T]
    double scan_lo{0.0};       // 0 -> 1e-3/omega_c
    double scan_hi{0.0};       // 0 -> 20/omega_c (50/omega_c for the impulse density)
    std::size_t n_scan{200};   // log-spaced coarse scan points
    double refine_tol{0.0};    // golden-section bracket width; 0 -> 1e-6/omega_c
};

// Minimize D_[0,T](exact, CG-LE(tau)) by a global log-spaced scan followed by
// golden-section refinement. D(tau) is oscillatory with local minima, so the
// scan must precede any local search. Deterministic for identical inputs.
TauScan optimize_tau(const ModelParams& params, const OptimizeOptions& options = {});

// D_[0,T](exact, RWA-LE) on the same grid, for the CLI comparison; the exact
// trajectory is recomputed internally.
double rwa_distance(const ModelParams& params, double horizon, std::size_t n_grid);

}  // namespace djc::tauopt
