#include "djc/model.hpp"

#include <cmath>
#include <numbers>

#include "djc/specfun.hpp"

namespace djc {

std::string to_string(DensityKind kind) {
    switch (kind) {
        case DensityKind::Impulse: return "impulse";
        case DensityKind::Ohmic: return "ohmic";
        case DensityKind::Triangular: return "triangular";
    }
    return "unknown";
}

}  // namespace djc

namespace djc::model {

namespace {

constexpr Complex kI{0.0, 1.0};

// e^{ix} - 1 without cancellation: (-2 sin^2(x/2), sin x).
Complex cis_m1(double x) {
    const double s = std::sin(0.5 * x);
    return {-2.0 * s * s, std::sin(x)};
}

// x - sin x, series below |x| < 0.5
double x_minus_sin(double x) {
    if (std::abs(x) < 0.5) {
        const double x2 = x * x;
        return x * x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 * (1.0 - x2 / 72.0)));
    }
    return x - std::sin(x);
}

// (1 - e^{iu} + iu)/u^2 with the removable u -> 0 singularity filled.
Complex triangular_shape(double u) {
    if (std::abs(u) < 1e-3) {
        // 4th-order Taylor form
        return {0.5 - u * u / 24.0, u / 6.0 - u * u * u / 120.0};
    }
    const double s = std::sin(0.5 * u);
    return Complex(2.0 * s * s, x_minus_sin(u)) / (u * u);
}

// (e^{-iu}(1+iu) - 1)/u^2 with the removable singularity filled.
Complex bath_shape(double u) {
    if (std::abs(u) < 1e-3) {
        return {0.5 - u * u / 8.0, -u / 3.0 + u * u * u / 30.0};
    }
    const Complex num = std::exp(Complex(0.0, -u)) * Complex(1.0, u) - 1.0;
    return num / (u * u);
}

}  // namespace

SpectralSample spectral_j(const SpectralDensity& density, double omega) {
    density.validate();
    if (omega < 0.0 || !std::isfinite(omega))
        throw DomainError("model", "spectral density evaluated at omega < 0");
    switch (density.kind) {
        case DensityKind::Impulse:
            return {true, density.coupling};
        case DensityKind::Ohmic:
            return {false, density.coupling * omega * std::exp(-omega / density.omega_c)};
        case DensityKind::Triangular:
            return {false, omega <= density.omega_c ? density.coupling * omega : 0.0};
    }
    throw DomainError("model", "unknown density kind");
}

Complex kernel_f(const ModelParams& params, double t) {
    const double wc = params.density.omega_c;
    const double cpl = params.density.coupling;
    const double delta = params.omega_0 - wc;
    switch (params.density.kind) {
        case DensityKind::Impulse:
            return cpl * std::exp(kI * (delta * t));
        case DensityKind::Ohmic: {
            const Complex den = Complex(1.0, wc * t);
            return cpl * wc * wc * std::exp(kI * (params.omega_0 * t)) / (den * den);
        }
        case DensityKind::Triangular:
            return cpl * wc * wc * std::exp(kI * (delta * t)) * triangular_shape(wc * t);
    }
    throw DomainError("model", "unknown density kind");
}

Complex kernel_laplace(const ModelParams& params, Complex s) {
    if (!(s.real() > 0.0))
        throw DomainError("model", "kernel Laplace transform requires Re s > 0");
    const double wc = params.density.omega_c;
    const double cpl = params.density.coupling;
    const Complex w = s - kI * params.omega_0;
    switch (params.density.kind) {
        case DensityKind::Impulse:
            return cpl / (s - kI * (params.omega_0 - wc));
        case DensityKind::Ohmic:
            // eta [ (s - i Omega0) e^{-(Omega0 + i s)/wc} E1(-i w/wc) - i wc ];
            // the prefactor e^{-(Omega0 + i s)/wc} = e^{-i w/wc} folds into the
            // scaled E1, which keeps the contour evaluations finite.
            return cpl * (w * specfun::expint_e1_scaled(-kI * w / wc) - kI * wc);
        case DensityKind::Triangular:
            return -kI * cpl * wc - cpl * w * std::log(w / (w + kI * wc));
    }
    throw DomainError("model", "unknown density kind");
}

Complex bath_correlation(const ModelParams& params, double tau) {
    const double wc = params.density.omega_c;
    const double cpl = params.density.coupling;
    switch (params.density.kind) {
        case DensityKind::Impulse:
            return cpl * std::exp(-kI * (wc * tau));
        case DensityKind::Ohmic: {
            const Complex den = Complex(1.0, wc * tau);
            return cpl * wc * wc / (den * den);
        }
        case DensityKind::Triangular:
            return cpl * wc * wc * bath_shape(wc * tau);
    }
    throw DomainError("model", "unknown density kind");
}

Complex kernel_antiderivative(const ModelParams& params, double t) {
    const double wc = params.density.omega_c;
    const double cpl = params.density.coupling;
    const double w0 = params.omega_0;
    const double delta = w0 - wc;
    switch (params.density.kind) {
        case DensityKind::Impulse: {
            if (delta == 0.0) return {cpl * t, 0.0};
            // (e^{i delta t} - 1)/(i delta), cancellation-free
            const double x = delta * t;
            const double sh = std::sin(0.5 * x);
            return Complex(std::sin(x), 2.0 * sh * sh) / delta * cpl;
        }
        case DensityKind::Ohmic: {
            if (t == 0.0) return {0.0, 0.0};
            const double a = w0 / wc;
            const double jw0 = cpl * w0 * std::exp(-a);
            const Complex zt = a * Complex(1.0, wc * t);
            const Complex at_t = kI * cpl * wc * std::exp(kI * (w0 * t)) / Complex(1.0, wc * t)
                                 - kI * jw0 * specfun::expint_ei(zt);
            const Complex at_0 = kI * cpl * wc - kI * jw0 * specfun::expint_ei(Complex(a, 0.0));
            return at_t - at_0;
        }
        case DensityKind::Triangular: {
            if (std::abs(delta) < 1e-6 * wc)
                throw SingularParameterError(
                    "model", "triangular kernel antiderivative is singular at omega_0 == omega_c");
            if (t == 0.0) return {0.0, 0.0};
            const double scale = std::max(std::abs(delta), w0);
            // (e^{i w0 t} - e^{i delta t})/t - i wc
            Complex phi;
            if (std::abs(t) * scale < 1e-4) {
                phi = Complex(-(w0 * w0 - delta * delta) * t / 2.0,
                              -(w0 * w0 * w0 - delta * delta * delta) * t * t / 6.0);
            } else {
                phi = (cis_m1(w0 * t) - cis_m1(delta * t)) / t - kI * wc;
            }
            // Ei(i delta t) - Ei(i w0 t) minus its t -> 0 limit
            Complex eidiff;
            if (std::abs(t) * scale < 0.5) {
                Complex pd{0.0, 0.0};
                Complex term_d{1.0, 0.0}, term_a{1.0, 0.0};
                const Complex zd = kI * (delta * t), za = kI * (w0 * t);
                for (int k = 1; k < 40; ++k) {
                    term_d *= zd / static_cast<double>(k);
                    term_a *= za / static_cast<double>(k);
                    pd += (term_d - term_a) / static_cast<double>(k);
                    if (std::abs(term_d) + std::abs(term_a) < 1e-18) break;
                }
                eidiff = pd;
            } else {
                const Complex lim0 = delta > 0.0
                                         ? Complex(std::log(delta / w0), 0.0)
                                         : Complex(std::log(-delta / w0), -std::numbers::pi);
                eidiff = specfun::expint_ei_imag(delta * t) - specfun::expint_ei_imag(w0 * t) - lim0;
            }
            return cpl * (phi + kI * w0 * eidiff);
        }
    }
    throw DomainError("model", "unknown density kind");
}

}  // namespace djc::model
