// types.hpp — value types and errors shared across the library

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace djc {

using Complex = std::complex<double>;

inline constexpr double kNormSlack = 1e-12;

// Every failure carries the name of the module it came from; the CLI maps
// ConfigError to exit code 2 and everything else to 3.
class Error : public std::runtime_error {
public:
    Error(std::string module, const std::string& what)
        : std::runtime_error(module + ": " + what), module_(std::move(module)) {}
    const std::string& module() const noexcept { return module_; }

private:
    std::string module_;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class SingularParameterError : public Error {
public:
    using Error::Error;
};

class SolverError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

enum class DensityKind { Impulse, Ohmic, Triangular };

std::string to_string(DensityKind kind);

// Bath spectral density: impulse |g|^2 delta(w - wc), Ohmic eta*w*exp(-w/wc),
// triangular eta*w*Theta(wc - w). coupling is |g|^2 for Impulse (energy^2)
// and the dimensionless eta otherwise. hbar = 1 throughout.
struct SpectralDensity {
    DensityKind kind{DensityKind::Ohmic};
    double coupling{1.0};
    double omega_c{1.0};

    static SpectralDensity impulse(double g2, double omega_c = 1.0) {
        return validated({DensityKind::Impulse, g2, omega_c});
    }
    static SpectralDensity ohmic(double eta, double omega_c = 1.0) {
        return validated({DensityKind::Ohmic, eta, omega_c});
    }
    static SpectralDensity triangular(double eta, double omega_c = 1.0) {
        return validated({DensityKind::Triangular, eta, omega_c});
    }

    void validate() const {
        if (!(coupling > 0.0) || !std::isfinite(coupling))
            throw DomainError("model", "spectral density coupling must be positive");
        if (!(omega_c > 0.0) || !std::isfinite(omega_c))
            throw DomainError("model", "cutoff frequency omega_c must be positive");
    }

private:
    static SpectralDensity validated(SpectralDensity d) {
        d.validate();
        return d;
    }
};

// Qubit frequency, bath, and the single-excitation initial amplitudes
// (vacuum bath, so |c0|^2 + |c1(0)|^2 <= 1).
struct ModelParams {
    double omega_0{1.0};
    SpectralDensity density{};
    Complex c0{1.0 / std::sqrt(2.0), 0.0};
    Complex c1_0{1.0 / std::sqrt(2.0), 0.0};

    void validate() const {
        density.validate();
        if (!(omega_0 > 0.0) || !std::isfinite(omega_0))
            throw DomainError("model", "qubit frequency omega_0 must be positive");
        if (std::norm(c0) + std::norm(c1_0) > 1.0 + kNormSlack)
            throw DomainError("model", "initial amplitudes violate |c0|^2 + |c1|^2 <= 1");
    }
};

// Reduced qubit state stored as (rho11, rho01); rho00 = 1 - rho11.
struct QubitState {
    double rho11{0.0};
    Complex rho01{0.0, 0.0};
};

// Time-local Lamb shift S(t) and decay rate gamma(t). valid=false marks
// breakdown points where |c1| fell below the inversion threshold.
struct RateSample {
    double S{0.0};
    double gamma{0.0};
    bool valid{true};
};

// Excited amplitude and its derivative on an ascending time grid.
struct AmplitudeSeries {
    std::vector<double> t;
    std::vector<Complex> c1;
    std::vector<Complex> c1_dot;
};

// Time grid plus the per-method series; c1 is populated for the exact method only.
struct Trajectory {
    std::vector<double> t;
    std::vector<double> rho11;
    std::vector<Complex> rho01;
    std::vector<RateSample> rates;
    std::vector<Complex> c1;
};

struct DistanceReport {
    std::vector<double> pointwise;
    double integrated{0.0};
    double horizon{0.0};
};

// RWA-LE rates; unsuitable (with a caveat message) for the impulse density,
// whose RWA rate is zero or singular instead of a number.
struct RwaResult {
    bool suitable{false};
    double S{0.0};
    double gamma{0.0};
    std::string caveat;
};

struct CoarseGrainedRate {
    double tau{0.0};
    double gamma{0.0};
};

struct TauScan {
    std::vector<double> tau;
    std::vector<double> distance;
    double tau_star{0.0};
    double d_star{0.0};
    bool boundary{false};         // best scan point sat on the scan edge
    bool validity_warning{false}; // omega_c * tau_star > 1
};

}  // namespace djc
