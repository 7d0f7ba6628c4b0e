#include "djc/tcl.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

#include "djc/detail/numerics.hpp"
#include "djc/model.hpp"
#include "djc/specfun.hpp"

namespace djc::tcl {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

ModelParams kernel_params(const SpectralDensity& density, double omega_0) {
    ModelParams p;
    p.omega_0 = omega_0;
    p.density = density;
    p.c0 = {1.0, 0.0};
    p.c1_0 = {0.0, 0.0};
    return p;
}

// Antiderivative extended to negative arguments via f(-u) = conj(f(u)).
Complex anti(const ModelParams& p, double u) {
    if (u >= 0.0) return model::kernel_antiderivative(p, u);
    return -std::conj(model::kernel_antiderivative(p, -u));
}

void require_triangular_off_resonance(const SpectralDensity& density, double omega_0) {
    if (density.kind == DensityKind::Triangular &&
        std::abs(omega_0 - density.omega_c) < kTriangularWindow * density.omega_c)
        throw SingularParameterError("tcl",
                                     "triangular TCL formulas diverge at omega_0 == omega_c");
}

RateSample tcl2_impulse(double g2, double omega_0, double omega_c, double t) {
    const double dd = omega_0 - omega_c;
    const double gamma2 = 2.0 * g2 * t * specfun::sinc(dd * t);
    double S2 = 0.0;
    if (dd != 0.0) {
        const double sh = std::sin(0.5 * dd * t);
        S2 = 4.0 * g2 * sh * sh / dd;
    }
    return {S2, gamma2, true};
}

RateSample tcl2_ohmic(double eta, double omega_0, double omega_c, double t) {
    if (t == 0.0) return {0.0, 0.0, true};
    const double a = omega_0 / omega_c;
    const double x = omega_c * t;
    const double j = eta * omega_0 * std::exp(-a);
    const Complex ei = specfun::expint_ei(a * Complex(1.0, x));
    const double ei0 = specfun::expint_ei_real(a);
    const double den = 1.0 + x * x;
    const double gamma2 = 2.0 * eta * omega_c * (x * std::cos(omega_0 * t) - std::sin(omega_0 * t)) / den +
                          2.0 * j * ei.imag();
    const double S2 = -2.0 * eta * omega_c +
                      2.0 * eta * omega_c * (std::cos(omega_0 * t) + x * std::sin(omega_0 * t)) / den -
                      2.0 * j * (ei.real() - ei0);
    return {S2, gamma2, true};
}

RateSample tcl2_triangular(double eta, double omega_0, double omega_c, double t) {
    if (t == 0.0) return {0.0, 0.0, true};
    const double dd = omega_0 - omega_c;          // can be negative
    const double mid = omega_0 - 0.5 * omega_c;   // (Omega0 + delta)/2
    const double half = 0.5 * omega_c * t;
    const specfun::SiCi sa = specfun::si_ci(omega_0 * t);
    const specfun::SiCi sd = specfun::si_ci(std::abs(dd) * t);
    const double sgn = dd > 0.0 ? 1.0 : -1.0;
    const double gamma2 =
        2.0 * eta * (-omega_c * std::sin(mid * t) * specfun::sinc(half) +
                     omega_0 * (sa.si - sgn * sd.si));
    const double S2 =
        2.0 * eta * (omega_c * (std::cos(mid * t) * specfun::sinc(half) - 1.0) +
                     omega_0 * (sd.ci - sa.ci - std::log(std::abs(dd) / omega_0)));
    return {S2, gamma2, true};
}

struct J1Closed {
    double S4;
    double gamma4;
};

J1Closed tcl4_impulse_closed(double g2, double omega_0, double omega_c, double t) {
    const double dd = omega_0 - omega_c;
    const double u = dd * t;
    if (std::abs(u) < 1e-2) {
        const double g4 = (2.0 / 3.0) * g2 * g2 * t * t * t * (1.0 - 11.0 * u * u / 20.0);
        const double s4 = (2.0 / 3.0) * g2 * g2 * t * t * t * t * dd * (1.0 - 13.0 * u * u / 60.0);
        return {s4, g4};
    }
    const double d3 = dd * dd * dd;
    const double s4 = 4.0 * g2 * g2 * (-std::sin(u) * std::sin(u) + u * std::sin(u)) / d3;
    const double g4 = 2.0 * g2 * g2 * (2.0 * u * std::cos(u) - std::sin(2.0 * u)) / d3;
    return {s4, g4};
}

// gamma4 + i S4 at one evaluation time by the Z-form product-trapezoid rule.
Complex tcl4_pass(const ModelParams& p, double t, std::size_t n) {
    const double h = t / static_cast<double>(n);
    std::vector<Complex> f(n + 1), g(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const double u = h * static_cast<double>(k);
        f[k] = model::kernel_f(p, u);
        g[k] = model::kernel_antiderivative(p, u);
    }
    const Complex gt = g[n];
    Complex total{0.0, 0.0};
    for (std::size_t i = 1; i <= n; ++i) {
        // integrand H(t1, t2) = f(t - t2) Z(t1, t2) + f(t1 - t2) Z(t, t2),
        // Z(a, b) = G(a) - G(a - b); row-trapezoid over t2 in [0, t1]
        Complex row{0.0, 0.0};
        for (std::size_t j = 0; j <= i; ++j) {
            const Complex hij = f[n - j] * (g[i] - g[i - j]) + f[i - j] * (gt - g[n - j]);
            row += (j == 0 || j == i) ? 0.5 * hij : hij;
        }
        row *= h;
        total += (i == n) ? 0.5 * row : row;
    }
    return 2.0 * h * total;
}

}  // namespace

Complex z_kernel(const SpectralDensity& density, double omega_0, double t, double t_prime) {
    density.validate();
    require_triangular_off_resonance(density, omega_0);
    if (t < 0.0) throw DomainError("tcl", "z_kernel needs t >= 0");
    const ModelParams p = kernel_params(density, omega_0);
    // int_0^t f(t' - t1) dt1 = G(t') - G(t' - t)
    return anti(p, t_prime) - anti(p, t_prime - t);
}

RateSample tcl2_rates(const SpectralDensity& density, double omega_0, double t) {
    density.validate();
    if (!(omega_0 > 0.0)) throw DomainError("tcl", "omega_0 must be positive");
    if (t < 0.0) throw DomainError("tcl", "tcl2_rates needs t >= 0");
    switch (density.kind) {
        case DensityKind::Impulse:
            return tcl2_impulse(density.coupling, omega_0, density.omega_c, t);
        case DensityKind::Ohmic:
            return tcl2_ohmic(density.coupling, omega_0, density.omega_c, t);
        case DensityKind::Triangular:
            require_triangular_off_resonance(density, omega_0);
            return tcl2_triangular(density.coupling, omega_0, density.omega_c, t);
    }
    throw DomainError("tcl", "unknown density kind");
}

Tcl4Result tcl4_numeric(const SpectralDensity& density, double omega_0, double t,
                        const Tcl4Options& options) {
    density.validate();
    require_triangular_off_resonance(density, omega_0);
    if (t < 0.0) throw DomainError("tcl", "tcl4 rates need t >= 0");
    if (t == 0.0) return {{0.0, 0.0, true}, 0.0};
    const ModelParams p = kernel_params(density, omega_0);
    const std::size_t n = std::max<std::size_t>(16, options.n_base);
    const Complex coarse = tcl4_pass(p, t, n / 2);
    const Complex fine = tcl4_pass(p, t, n);
    const double estimate = std::abs(fine - coarse) / 3.0;
    if (estimate > options.tol) {
        std::ostringstream msg;
        msg << "tcl4 quadrature did not converge at t = " << t
            << " (error estimate " << estimate << ")";
        throw SolverError("tcl", msg.str());
    }
    const Complex value = fine + (fine - coarse) / 3.0;
    return {{value.imag(), value.real(), true}, estimate};
}

Tcl4Result tcl4_correction(const SpectralDensity& density, double omega_0, double t,
                           const Tcl4Options& options) {
    if (density.kind == DensityKind::Impulse) {
        density.validate();
        if (t < 0.0) throw DomainError("tcl", "tcl4 rates need t >= 0");
        const J1Closed c = tcl4_impulse_closed(density.coupling, omega_0, density.omega_c, t);
        return {{c.S4, c.gamma4, true}, 0.0};
    }
    return tcl4_numeric(density, omega_0, t, options);
}

RateSample tcl_rates(int order, const SpectralDensity& density, double omega_0, double t,
                     const Tcl4Options& options) {
    if (order != 2 && order != 4)
        throw DomainError("tcl", "TCL order must be 2 or 4");
    RateSample rate = tcl2_rates(density, omega_0, t);
    if (order == 4) {
        const Tcl4Result corr = tcl4_correction(density, omega_0, t, options);
        rate.S += corr.rate.S;
        rate.gamma += corr.rate.gamma;
    }
    return rate;
}

Trajectory trajectory_from_rates(const std::vector<double>& t_grid,
                                 const std::vector<RateSample>& rates, const QubitState& rho0) {
    const std::size_t n = t_grid.size();
    if (n < 3 || rates.size() != n)
        throw DomainError("tcl", "rate integration needs a matching grid with >= 3 points");
    const double h = t_grid[1] - t_grid[0];

    // cumulative quadratic (composite-Simpson style) integrals of gamma and S
    std::vector<double> ig(n, 0.0), is(n, 0.0);
    auto step = [&](auto&& value, std::vector<double>& out) {
        out[1] = h * (5.0 * value(0) + 8.0 * value(1) - value(2)) / 12.0;
        for (std::size_t k = 2; k < n; ++k)
            out[k] = out[k - 1] + h * (5.0 * value(k) + 8.0 * value(k - 1) - value(k - 2)) / 12.0;
    };
    step([&](std::size_t i) { return rates[i].gamma; }, ig);
    step([&](std::size_t i) { return rates[i].S; }, is);

    Trajectory traj;
    traj.t = t_grid;
    traj.rates = rates;
    traj.rho11.resize(n);
    traj.rho01.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        traj.rho11[i] = rho0.rho11 * std::exp(-ig[i]);
        traj.rho01[i] = rho0.rho01 * std::exp(Complex(-0.5 * ig[i], 0.5 * is[i]));
    }
    return traj;
}

Trajectory tcl_trajectory(int order, const ModelParams& params, double t_max,
                          std::size_t n_points, const Tcl4Options& options) {
    params.validate();
    if (order != 2 && order != 4)
        throw DomainError("tcl", "TCL order must be 2 or 4");
    if (n_points < 3 || !(t_max > 0.0))
        throw DomainError("tcl", "trajectory needs t_max > 0 and at least 3 grid points");
    const double h = t_max / static_cast<double>(n_points - 1);
    std::vector<double> t_grid(n_points);
    for (std::size_t i = 0; i < n_points; ++i) t_grid[i] = h * static_cast<double>(i);
    std::vector<RateSample> rates(n_points);

    if (order == 2 || params.density.kind == DensityKind::Impulse) {
        for (std::size_t i = 0; i < n_points; ++i)
            rates[i] = tcl_rates(order, params.density, params.omega_0, t_grid[i], options);
    } else {
        // the double quadrature per grid point is the expensive part; panels
        // scale with t so the step stays uniform across evaluation times
        std::exception_ptr failure;
        std::mutex guard;
        detail::parallel_for(n_points, [&](std::size_t i) {
            try {
                Tcl4Options local = options;
                local.n_base = std::max<std::size_t>(
                    16, static_cast<std::size_t>(
                            std::ceil(static_cast<double>(options.n_base) * t_grid[i] / t_max)));
                rates[i] = tcl_rates(order, params.density, params.omega_0, t_grid[i], local);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(guard);
                if (!failure) failure = std::current_exception();
            }
        });
        if (failure) std::rethrow_exception(failure);
    }

    const QubitState rho0 = {std::norm(params.c1_0), params.c0 * std::conj(params.c1_0)};
    return trajectory_from_rates(t_grid, rates, rho0);
}

double tcl2_asymptote_j3(const SpectralDensity& density, double omega_0) {
    density.validate();
    if (density.kind != DensityKind::Triangular)
        throw DomainError("tcl", "the TCL2 asymptote is a triangular-density result");
    const double dd = omega_0 - density.omega_c;
    if (!(dd > 0.0))
        throw DomainError("tcl", "the TCL2 asymptote needs omega_0 > omega_c");
    return 2.0 * density.coupling * (density.omega_c / dd + std::log(dd / omega_0));
}

std::vector<double> breakdown_times_j1(const ModelParams& params, std::size_t n_max) {
    params.validate();
    if (params.density.kind != DensityKind::Impulse)
        throw DomainError("tcl", "breakdown times are an impulse-density result");
    const double g2 = params.density.coupling;
    const double dd = std::abs(params.omega_0 - params.density.omega_c);
    const double delta = std::sqrt(dd * dd + 4.0 * g2);
    const double base = dd == 0.0 ? kPi / 2.0 : std::atan(delta / dd);
    std::vector<double> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n)
        out.push_back((2.0 / delta) * (base + kPi * static_cast<double>(n)));
    return out;
}

}  // namespace djc::tcl
