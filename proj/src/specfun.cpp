#include "djc/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace djc::specfun {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
using CL = std::complex<long double>;

// Power series of the entire part, compensated in long double:
// E1(z) = -gamma - ln z + sum_{k>=1} (-1)^{k+1} z^k / (k k!).
Complex e1_series(Complex z) {
    const CL zl(z.real(), z.imag());
    CL sum = 0.0L;
    CL comp = 0.0L;
    CL term = 1.0L;
    for (int k = 1; k < 160; ++k) {
        term *= -zl / static_cast<long double>(k);
        const CL add = -term / static_cast<long double>(k);
        const CL y = add - comp;
        const CL t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::abs(add) < 1e-20L * (1.0L + std::abs(sum))) break;
    }
    const CL val = sum - static_cast<long double>(kEulerGamma) - std::log(zl);
    return {static_cast<double>(val.real()), static_cast<double>(val.imag())};
}

// Ei power series near the positive real axis (terms do not alternate there).
Complex ei_series(Complex y) {
    const CL yl(y.real(), y.imag());
    CL sum = 0.0L;
    CL comp = 0.0L;
    CL term = 1.0L;
    for (int k = 1; k < 800; ++k) {
        term *= yl / static_cast<long double>(k);
        const CL add = term / static_cast<long double>(k);
        const CL t0 = add - comp;
        const CL t1 = sum + t0;
        comp = (t1 - sum) - t0;
        sum = t1;
        if (std::abs(add) < 1e-20L * (1.0L + std::abs(sum))) break;
    }
    const CL val = sum + static_cast<long double>(kEulerGamma) + std::log(yl);
    return {static_cast<double>(val.real()), static_cast<double>(val.imag())};
}

// Modified Lentz continued fraction for e^z E1(z) = 1/(z+1-) 1/(z+3-) 4/(z+5-) ...
Complex e1_scaled_lentz(Complex z) {
    constexpr double tiny = 1e-300;
    Complex b = z + 1.0;
    Complex C = 1.0 / tiny;
    Complex D = 1.0 / b;
    Complex h = D;
    for (int i = 1; i < 2000; ++i) {
        const double a = -static_cast<double>(i) * static_cast<double>(i);
        b += 2.0;
        D = 1.0 / (b + a * D);
        C = b + a / C;
        const Complex delta = C * D;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) return h;
    }
    throw SolverError("specfun", "continued fraction for E1 did not converge");
}

// Asymptotic sum S(z) = sum_k (-1)^k k!/z^k with term-growth detection;
// e^z E1(z) = S(z)/z for |z| > 44 (the cut jump is below double precision).
Complex e1_scaled_asymptotic(Complex z) {
    Complex sum = 1.0;
    Complex term = 1.0;
    for (int k = 1; k < 80; ++k) {
        const Complex next = term * (-static_cast<double>(k) / z);
        if (std::abs(next) >= std::abs(term)) break;
        term = next;
        sum += term;
    }
    return sum / z;
}

bool near_cut(Complex z) { return z.real() < 0.0 && std::abs(z) - std::abs(z.real()) <= 12.0; }

// Values exactly on the cut resolve to the limit from above.
Complex off_cut(Complex z) {
    if (z.imag() == 0.0) return {z.real(), +0.0};
    return z;
}

}  // namespace

double sinc(double x) {
    if (std::abs(x) < 1e-3) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
    }
    return std::sin(x) / x;
}

SiCi si_ci(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError("specfun", "si_ci requires x > 0");
    if (x <= 4.0) {
        // direct series for both integrals
        long double si = 0.0L, ci = 0.0L;
        long double term = x;  // x^(2k+1)/(2k+1)! at k=0
        const long double x2 = static_cast<long double>(x) * x;
        for (int k = 0; k < 40; ++k) {
            const int n = 2 * k + 1;
            si += term / n;
            term *= -x2 / ((n + 1) * (n + 2));
            if (std::abs(static_cast<double>(term)) < 1e-20) break;
        }
        long double cterm = -x2 / 2.0L;  // (-1)^k x^(2k)/(2k)! at k=1
        for (int k = 1; k < 40; ++k) {
            const int n = 2 * k;
            ci += cterm / n;
            cterm *= -x2 / ((n + 1) * (n + 2));
            if (std::abs(static_cast<double>(cterm)) < 1e-20) break;
        }
        ci += kEulerGamma + std::log(static_cast<long double>(x));
        return {static_cast<double>(si), static_cast<double>(ci)};
    }
    // E1(ix) = -Ci(x) + i(Si(x) - pi/2)
    const Complex e1 = std::exp(Complex(0.0, -x)) * e1_scaled_lentz(Complex(0.0, x));
    return {std::numbers::pi / 2 + e1.imag(), -e1.real()};
}

double expint_ei_real(double x) {
    if (x == 0.0 || !std::isfinite(x))
        throw DomainError("specfun", "Ei diverges at x = 0");
    if (x > 0.0) {
        if (x <= 40.0) return ei_series(Complex(x, 0.0)).real();
        return -(std::exp(x) * e1_scaled_asymptotic(Complex(-x, 0.0))).real();
    }
    // x < 0: Ei(x) = -E1(-x), real
    const double y = -x;
    if (y <= 6.0) return -e1_series(Complex(y, 0.0)).real();
    return -(std::exp(-y) * e1_scaled_lentz(Complex(y, 0.0))).real();
}

Complex expint_e1_scaled(Complex z) {
    if (z == Complex(0.0, 0.0))
        throw DomainError("specfun", "E1 diverges at z = 0");
    z = off_cut(z);
    const double az = std::abs(z);
    if (az <= 6.0) return std::exp(z) * e1_series(z);
    if (az > 44.0) return e1_scaled_asymptotic(z);
    if (near_cut(z)) {
        // E1(z) = -Ei(-z) - i pi sign(Im z); -z sits near the positive axis
        const Complex ei = ei_series(-z);
        const double sgn = (z.imag() > 0.0 || (z.imag() == 0.0)) ? 1.0 : -1.0;
        return std::exp(z) * (-ei - Complex(0.0, sgn * std::numbers::pi));
    }
    return e1_scaled_lentz(z);
}

Complex expint_e1(Complex z) {
    z = off_cut(z);
    return std::exp(-z) * expint_e1_scaled(z);
}

Complex expint_ei(Complex z) {
    if (z == Complex(0.0, 0.0))
        throw DomainError("specfun", "Ei diverges at z = 0");
    z = off_cut(z);
    if (z.imag() == 0.0 && z.real() < 0.0) {
        // cut value, limit from above: real PV plus i pi
        return {expint_ei_real(z.real()), std::numbers::pi};
    }
    if (z.imag() == 0.0) return {expint_ei_real(z.real()), 0.0};
    const double az = std::abs(z);
    if (az <= 6.0 || (az - z.real() <= 12.0 && az <= 44.0)) return ei_series(z);
    // Ei(z) = -E1(-z) + i pi sign(Im z)
    const double sgn = z.imag() > 0.0 ? 1.0 : -1.0;
    const Complex e1 = std::exp(-(-z)) * expint_e1_scaled(-z);
    return -e1 + Complex(0.0, sgn * std::numbers::pi);
}

Complex expint_ei_imag(double y) {
    if (y == 0.0) throw DomainError("specfun", "Ei diverges at z = 0");
    const SiCi sc = si_ci(std::abs(y));
    const double sgn = y > 0.0 ? 1.0 : -1.0;
    return {sc.ci, sgn * (sc.si + std::numbers::pi / 2)};
}

}  // namespace djc::specfun
