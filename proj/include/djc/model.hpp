// model.hpp — spectral densities, memory kernels, Laplace transforms, bath correlation

#pragma once

#include "djc/types.hpp"

namespace djc::model {

// Pointwise density sample. The impulse density is an atomic measure, never a
// finite density value: callers integrating against it must apply the
// delta-sifting rule with the returned weight at omega = omega_c.
struct SpectralSample {
    bool is_atom{false};
    double value{0.0};
};

SpectralSample spectral_j(const SpectralDensity& density, double omega);

// Memory kernel f(t) = int_0^inf J(w) e^{i(Omega0 - w)t} dw, closed forms per density.
Complex kernel_f(const ModelParams& params, double t);

// Laplace transform fhat(s) of the kernel, Re s > 0.
Complex kernel_laplace(const ModelParams& params, Complex s);

// Stationary bath correlation B(tau) = int_0^inf J(w) e^{-i w tau} dw = f(tau) e^{-i Omega0 tau}.
Complex bath_correlation(const ModelParams& params, double tau);

// Antiderivative G of the kernel with G(0) = 0, so that the shifted kernel
// integral Z(t, t') = int_0^{t'} f(t - x) dx equals G(t) - G(t - t').
Complex kernel_antiderivative(const ModelParams& params, double t);

}  // namespace djc::model
