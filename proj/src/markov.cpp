#include "djc/markov.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

#include "djc/detail/numerics.hpp"
#include "djc/model.hpp"
#include "djc/specfun.hpp"

namespace djc::markov {

namespace {

constexpr double kPi = std::numbers::pi;

double cg_gamma_impulse(double g2, double omega_0, double omega_c, double tau) {
    const double s = specfun::sinc(0.5 * (omega_0 - omega_c) * tau);
    return g2 * tau * s * s;
}

double cg_gamma_ohmic(double eta, double omega_0, double omega_c, double tau) {
    const double a = omega_0 / omega_c;
    const Complex z = a * Complex(1.0, omega_c * tau);
    const Complex term = (Complex(1.0 - a, -omega_0 * tau)) * specfun::expint_ei(z);
    const double bracket = 2.0 * term.real() + 2.0 * (a - 1.0) * specfun::expint_ei_real(a);
    return (eta / tau) * std::exp(-a) * bracket -
           (2.0 * eta / tau) * (1.0 - std::cos(omega_0 * tau));
}

double cg_gamma_triangular(double eta, double omega_0, double omega_c, double tau) {
    const double d = omega_c - omega_0;
    const specfun::SiCi sa = specfun::si_ci(omega_0 * tau);
    const specfun::SiCi sd = specfun::si_ci(std::abs(d) * tau);
    const double sgn = d > 0.0 ? 1.0 : -1.0;
    double out = (2.0 * eta / tau) *
                 (std::log(std::abs(omega_c / omega_0 - 1.0)) + sa.ci - sd.ci +
                  omega_c * (std::cos(d * tau) - 1.0) / d - std::cos(d * tau) +
                  std::cos(omega_0 * tau));
    out += 2.0 * eta * omega_0 * (sgn * sd.si + sa.si);
    return out;
}

// One-time sanity check of the Omega0 > omega_c branch (the closed form needs
// the |.| conventions for Ci and the log there); compares against direct
// quadrature of the defining integral and refuses to continue on mismatch.
void check_triangular_above_cutoff(double omega_0, double omega_c) {
    static std::once_flag flag;
    std::call_once(flag, [&] {
        const double tau = 1.7 / omega_c;
        auto integrand = [&](double w) {
            const double s = specfun::sinc(0.5 * (omega_0 - w) * tau);
            return w * tau * s * s;
        };
        const double quad = detail::adaptive_simpson(integrand, 0.0, omega_c, 1e-12);
        const double closed = cg_gamma_triangular(1.0, omega_0, omega_c, tau);
        if (std::abs(closed - quad) > 1e-7 * std::abs(quad)) {
            std::ostringstream msg;
            msg << "triangular coarse-grained rate defect above the cutoff: closed form "
                << closed << " vs quadrature " << quad;
            throw Error("markov", msg.str());
        }
    });
}

}  // namespace

CoarseGrainedRate cg_gamma(const SpectralDensity& density, double omega_0, double tau) {
    density.validate();
    if (!(tau > 0.0) || !std::isfinite(tau))
        throw DomainError("markov", "coarse-graining time must be positive");
    if (!(omega_0 > 0.0)) throw DomainError("markov", "omega_0 must be positive");
    switch (density.kind) {
        case DensityKind::Impulse:
            return {tau, cg_gamma_impulse(density.coupling, omega_0, density.omega_c, tau)};
        case DensityKind::Ohmic:
            return {tau, cg_gamma_ohmic(density.coupling, omega_0, density.omega_c, tau)};
        case DensityKind::Triangular: {
            if (std::abs(omega_0 - density.omega_c) < 1e-6 * density.omega_c)
                throw SingularParameterError(
                    "markov", "triangular coarse-grained rate is singular at omega_0 == omega_c");
            if (omega_0 > density.omega_c)
                check_triangular_above_cutoff(omega_0, density.omega_c);
            return {tau, cg_gamma_triangular(density.coupling, omega_0, density.omega_c, tau)};
        }
    }
    throw DomainError("markov", "unknown density kind");
}

RwaResult rwa_rates(const SpectralDensity& density, double omega_0) {
    density.validate();
    if (!(omega_0 > 0.0)) throw DomainError("markov", "omega_0 must be positive");
    const double eta = density.coupling;
    const double wc = density.omega_c;
    switch (density.kind) {
        case DensityKind::Impulse: {
            RwaResult r;
            r.suitable = false;
            r.caveat = "RWA-LE is unsuitable for the impulse density: the decay rate is zero "
                       "away from resonance and singular at omega_0 == omega_c";
            return r;
        }
        case DensityKind::Ohmic: {
            const double a = omega_0 / wc;
            const double j = eta * omega_0 * std::exp(-a);
            return {true, 2.0 * j * specfun::expint_ei_real(a) - 2.0 * eta * wc, 2.0 * kPi * j, ""};
        }
        case DensityKind::Triangular: {
            if (std::abs(omega_0 - wc) < 1e-6 * wc)
                throw SingularParameterError("markov",
                                             "RWA-LE Lamb shift is singular at omega_0 == omega_c");
            const double S = -2.0 * eta * omega_0 * std::log(std::abs(wc / omega_0 - 1.0)) -
                             2.0 * eta * wc;
            const double gamma = omega_0 < wc ? 2.0 * kPi * eta * omega_0 : 0.0;
            return {true, S, gamma, ""};
        }
    }
    throw DomainError("markov", "unknown density kind");
}

Trajectory markov_trajectory(double S, double gamma, const QubitState& rho0, double t_max,
                             std::size_t n_points) {
    if (gamma < 0.0) throw DomainError("markov", "markov trajectory needs gamma >= 0");
    if (n_points < 2 || !(t_max > 0.0))
        throw DomainError("markov", "trajectory needs t_max > 0 and at least 2 grid points");
    Trajectory traj;
    traj.t.resize(n_points);
    traj.rho11.resize(n_points);
    traj.rho01.resize(n_points);
    traj.rates.assign(n_points, RateSample{S, gamma, true});
    for (std::size_t i = 0; i < n_points; ++i) {
        const double t = t_max * static_cast<double>(i) / static_cast<double>(n_points - 1);
        traj.t[i] = t;
        traj.rho11[i] = rho0.rho11 * std::exp(-gamma * t);
        traj.rho01[i] = rho0.rho01 * std::exp(Complex(-0.5 * gamma * t, 0.5 * S * t));
    }
    return traj;
}

double rwa_truncation_bound(const SpectralDensity& density, double t) {
    density.validate();
    if (density.kind != DensityKind::Ohmic)
        throw DomainError("markov", "truncation bound is derived for the Ohmic density only");
    if (t < 0.0) throw DomainError("markov", "truncation bound needs t >= 0");
    return (kPi / 2.0 - std::atan(density.omega_c * t)) * density.coupling * density.omega_c;
}

}  // namespace djc::markov
