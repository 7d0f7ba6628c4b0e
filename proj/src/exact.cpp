#include "djc/exact.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "djc/model.hpp"

namespace djc::exact {

namespace {

constexpr Complex kI{0.0, 1.0};

// 5-point Gauss-Legendre nodes/weights on [-1, 1]
constexpr std::array<double, 5> kGlx = {-0.906179845938664, -0.538469310105683, 0.0,
                                        0.538469310105683, 0.906179845938664};
constexpr std::array<double, 5> kGlw = {0.236926885056189, 0.478628670499366, 0.568888888888889,
                                        0.478628670499366, 0.236926885056189};

struct VolterraRun {
    std::vector<Complex> c1;
    std::vector<Complex> c1_dot;
};

// One pass of the product-integration trapezoid scheme at n uniform steps.
VolterraRun volterra_pass(const ModelParams& params, double t_max, std::size_t n) {
    const double h = t_max / static_cast<double>(n);
    // Panel moments of the kernel against the linear hat weights; the
    // convolution at step k is sum_j c_j*M1[k-j] + c_{j+1}*M0[k-j].
    std::vector<Complex> m0(n + 1), m1(n + 1);
    for (std::size_t m = 1; m <= n; ++m) {
        const double lo = (static_cast<double>(m) - 1.0) * h;
        Complex a0{0.0, 0.0}, a1{0.0, 0.0};
        for (int g = 0; g < 5; ++g) {
            const double u = lo + 0.5 * h * (1.0 + kGlx[g]);
            const Complex fw = model::kernel_f(params, u) * (0.5 * h * kGlw[g]);
            a0 += fw * ((static_cast<double>(m) * h - u) / h);
            a1 += fw * ((u - lo) / h);
        }
        m0[m] = a0;
        m1[m] = a1;
    }
    VolterraRun run;
    run.c1.assign(n + 1, Complex{0.0, 0.0});
    run.c1_dot.assign(n + 1, Complex{0.0, 0.0});
    run.c1[0] = params.c1_0;
    for (std::size_t k = 1; k <= n; ++k) {
        Complex known{0.0, 0.0};
        const Complex* c = run.c1.data();
        for (std::size_t j = 0; j < k; ++j) known += c[j] * m1[k - j];
        for (std::size_t j = 1; j < k; ++j) known += c[j] * m0[k - j + 1];
        const Complex ck = (run.c1[k - 1] + 0.5 * h * run.c1_dot[k - 1] - 0.5 * h * known) /
                           (1.0 + 0.5 * h * m0[1]);
        run.c1[k] = ck;
        run.c1_dot[k] = -(known + ck * m0[1]);
    }
    return run;
}

std::vector<double> uniform_grid(double t_max, std::size_t n_steps) {
    std::vector<double> t(n_steps + 1);
    for (std::size_t i = 0; i <= n_steps; ++i)
        t[i] = t_max * static_cast<double>(i) / static_cast<double>(n_steps);
    return t;
}

// Euler-transform weights (-1)^k eta_k for the accelerated Fourier series.
std::vector<double> euler_weights(int m) {
    std::vector<double> eta(2 * m + 1, 1.0);
    eta[0] = 0.5;
    eta[2 * m] = std::pow(2.0, -m);
    double binom = 1.0;  // C(m, 0)
    for (int k = 1; k < m; ++k) {
        binom *= static_cast<double>(m - k + 1) / static_cast<double>(k);
        eta[2 * m - k] = eta[2 * m - k + 1] + std::pow(2.0, -m) * binom;
    }
    for (int k = 1; k <= 2 * m; k += 2) eta[k] = -eta[k];
    return eta;
}

struct IltPoint {
    Complex c1;
    Complex c1_dot;
};

IltPoint ilt_point(const ModelParams& params, double t, const std::vector<double>& w, int m) {
    const double A = static_cast<double>(m) * std::numbers::ln10 / 3.0;
    Complex uc{0.0, 0.0}, vc{0.0, 0.0}, ud{0.0, 0.0}, vd{0.0, 0.0};
    for (int k = 0; k <= 2 * m; ++k) {
        const Complex s{A / t, std::numbers::pi * k / t};
        // the transform of a complex-valued function needs both contour halves
        for (const Complex sk : {s, std::conj(s)}) {
            const Complex chat = params.c1_0 / (sk + model::kernel_laplace(params, sk));
            const Complex dhat = sk * chat - params.c1_0;
            uc += 0.5 * w[k] * chat.real();
            vc += 0.5 * w[k] * chat.imag();
            ud += 0.5 * w[k] * dhat.real();
            vd += 0.5 * w[k] * dhat.imag();
        }
    }
    const double scale = std::pow(10.0, static_cast<double>(m) / 3.0) / t;
    return {(uc + kI * vc) * scale, (ud + kI * vd) * scale};
}

}  // namespace

AmplitudeSeries solve_exact_j1(const ModelParams& params, const std::vector<double>& t_grid) {
    params.validate();
    if (params.density.kind != DensityKind::Impulse)
        throw DomainError("exact", "closed-form solver requires the impulse density");
    const double g2 = params.density.coupling;
    const double dd = params.omega_0 - params.density.omega_c;
    const double delta = std::sqrt(dd * dd + 4.0 * g2);
    AmplitudeSeries out;
    out.t = t_grid;
    out.c1.reserve(t_grid.size());
    out.c1_dot.reserve(t_grid.size());
    for (const double t : t_grid) {
        const Complex phase = std::exp(kI * (0.5 * dd * t));
        const double c = std::cos(0.5 * delta * t);
        const double s = std::sin(0.5 * delta * t);
        out.c1.push_back(params.c1_0 * phase * (c - kI * (dd / delta) * s));
        out.c1_dot.push_back(-params.c1_0 * (2.0 * g2 / delta) * phase * s);
    }
    return out;
}

AmplitudeSeries solve_volterra(const ModelParams& params, double t_max, std::size_t n_steps,
                               const VolterraOptions& options) {
    params.validate();
    if (!(t_max > 0.0) || n_steps < 2)
        throw DomainError("exact", "volterra solver needs t_max > 0 and at least 2 steps");
    VolterraRun fine = volterra_pass(params, t_max, options.richardson ? 2 * n_steps : n_steps);
    AmplitudeSeries out;
    out.t = uniform_grid(t_max, n_steps);
    if (options.richardson) {
        VolterraRun base = volterra_pass(params, t_max, n_steps);
        if (options.verify_tol > 0.0) {
            const double gap = std::abs(base.c1.back() - fine.c1.back());
            if (gap > options.verify_tol) {
                std::ostringstream msg;
                msg << "step too large: halving the step moves the endpoint by " << gap;
                throw SolverError("exact", msg.str());
            }
        }
        out.c1.resize(n_steps + 1);
        out.c1_dot.resize(n_steps + 1);
        for (std::size_t i = 0; i <= n_steps; ++i) {
            out.c1[i] = (4.0 * fine.c1[2 * i] - base.c1[i]) / 3.0;
            out.c1_dot[i] = (4.0 * fine.c1_dot[2 * i] - base.c1_dot[i]) / 3.0;
        }
    } else {
        if (options.verify_tol > 0.0) {
            VolterraRun half = volterra_pass(params, t_max, 2 * n_steps);
            const double gap = std::abs(half.c1.back() - fine.c1.back());
            if (gap > options.verify_tol) {
                std::ostringstream msg;
                msg << "step too large: halving the step moves the endpoint by " << gap;
                throw SolverError("exact", msg.str());
            }
        }
        out.c1 = std::move(fine.c1);
        out.c1_dot = std::move(fine.c1_dot);
    }
    return out;
}

AmplitudeSeries solve_ilt(const ModelParams& params, const std::vector<double>& t_points,
                          const IltOptions& options) {
    params.validate();
    if (params.density.kind == DensityKind::Impulse)
        throw DomainError("exact", "inverse-Laplace backend covers the Ohmic and triangular densities");
    for (const double t : t_points)
        if (!(t > 0.0)) throw DomainError("exact", "inverse Laplace transform needs t > 0");
    const int m = options.euler_terms;
    const std::vector<double> w = euler_weights(m);
    AmplitudeSeries out;
    out.t = t_points;
    out.c1.resize(t_points.size());
    out.c1_dot.resize(t_points.size());
    std::vector<std::size_t> failed;
    std::vector<double> wchk;
    if (options.check_tol > 0.0) wchk = euler_weights(m + 3);
    for (std::size_t i = 0; i < t_points.size(); ++i) {
        const IltPoint p = ilt_point(params, t_points[i], w, m);
        out.c1[i] = p.c1;
        out.c1_dot[i] = p.c1_dot;
        if (options.check_tol > 0.0) {
            const IltPoint q = ilt_point(params, t_points[i], wchk, m + 3);
            if (std::abs(q.c1 - p.c1) > options.check_tol) failed.push_back(i);
        }
    }
    if (!failed.empty()) {
        std::ostringstream msg;
        msg << "inversion accelerator did not converge at " << failed.size()
            << " point(s), first at t = " << t_points[failed.front()];
        throw SolverError("exact", msg.str());
    }
    return out;
}

std::vector<RateSample> rates_from_amplitude(const AmplitudeSeries& series) {
    std::vector<RateSample> rates(series.c1.size());
    for (std::size_t i = 0; i < series.c1.size(); ++i) {
        if (std::abs(series.c1[i]) < kBreakdownThreshold) {
            rates[i] = {0.0, 0.0, false};
            continue;
        }
        const Complex ratio = series.c1_dot[i] / series.c1[i];
        rates[i] = {-2.0 * ratio.imag(), -2.0 * ratio.real(), true};
    }
    return rates;
}

QubitState reduced_state(Complex c0, Complex c1) {
    if (std::norm(c0) + std::norm(c1) > 1.0 + kNormSlack)
        throw DomainError("exact", "amplitudes violate |c0|^2 + |c1|^2 <= 1");
    return {std::norm(c1), c0 * std::conj(c1)};
}

Trajectory exact_trajectory(const ModelParams& params, double t_max, std::size_t n_points,
                            const VolterraOptions& options) {
    if (n_points < 2) throw DomainError("exact", "trajectory needs at least 2 grid points");
    AmplitudeSeries series;
    if (params.density.kind == DensityKind::Impulse) {
        series = solve_exact_j1(params, uniform_grid(t_max, n_points - 1));
    } else {
        series = solve_volterra(params, t_max, n_points - 1, options);
    }
    Trajectory traj;
    traj.t = std::move(series.t);
    traj.rates = rates_from_amplitude(series);
    traj.rho11.reserve(n_points);
    traj.rho01.reserve(n_points);
    for (const Complex c1 : series.c1) {
        const QubitState st = reduced_state(params.c0, c1);
        traj.rho11.push_back(st.rho11);
        traj.rho01.push_back(st.rho01);
    }
    traj.c1 = std::move(series.c1);
    return traj;
}

}  // namespace djc::exact
