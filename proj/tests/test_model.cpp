#include <doctest.h>

#include <cmath>
#include <random>

#include "djc/model.hpp"
#include "oracles.hpp"

using djc::Complex;
using djc::DensityKind;
using djc::ModelParams;
using djc::SpectralDensity;
namespace model = djc::model;

namespace {

ModelParams make(DensityKind kind, double coupling, double omega0, double omega_c = 1.0) {
    ModelParams p;
    p.omega_0 = omega0;
    p.density = SpectralDensity{kind, coupling, omega_c};
    return p;
}

}  // namespace

TEST_CASE("spectral density values and the impulse atom") {
    CHECK(model::spectral_j(SpectralDensity::triangular(1.0), 2.0).value == 0.0);
    CHECK(model::spectral_j(SpectralDensity::ohmic(1.0), 1.0).value ==
          doctest::Approx(std::exp(-1.0)));
    CHECK(model::spectral_j(SpectralDensity::triangular(1.0), 0.5).value == doctest::Approx(0.5));
    const auto atom = model::spectral_j(SpectralDensity::impulse(2.5), 0.7);
    CHECK(atom.is_atom);
    CHECK(atom.value == 2.5);
    CHECK_THROWS_AS(model::spectral_j(SpectralDensity::ohmic(1.0), -0.1), djc::DomainError);
    CHECK_THROWS_AS(SpectralDensity::ohmic(-1.0), djc::DomainError);
    CHECK_THROWS_AS(SpectralDensity::ohmic(1.0, 0.0), djc::DomainError);
}

TEST_CASE("memory kernels: values and singularity fills") {
    // impulse: unit-modulus phase
    const ModelParams j1 = make(DensityKind::Impulse, 1.3, 0.7);
    for (double t : {0.0, 0.4, 3.3, 18.0})
        CHECK(std::abs(model::kernel_f(j1, t)) == doctest::Approx(1.3).epsilon(1e-14));
    // ohmic at t = 0
    const ModelParams j2 = make(DensityKind::Ohmic, 0.8, 1.0);
    CHECK(model::kernel_f(j2, 0.0) == Complex(0.8, 0.0));
    // triangular t -> 0 limit eta wc^2 / 2 and continuity across the Taylor switch
    const ModelParams j3 = make(DensityKind::Triangular, 1.0, 1.8);
    CHECK(model::kernel_f(j3, 0.0).real() == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(model::kernel_f(j3, 0.0).imag() == doctest::Approx(0.0));
    // both sides of the Taylor switch agree with a long-double reference
    auto shape_ref = [](double u) {
        const long double ul = u;
        return Complex(static_cast<double>((1.0L - std::cos(ul)) / (ul * ul)),
                       static_cast<double>((ul - std::sin(ul)) / (ul * ul)));
    };
    for (double u : {0.5e-3, 0.9999995e-3, 1.0000005e-3, 2e-3}) {
        const Complex ref = std::exp(Complex(0.0, 0.8 * u)) * shape_ref(u);
        CHECK(std::abs(model::kernel_f(j3, u) - ref) < 5e-13);
    }
}

TEST_CASE("kernel equals bath correlation times the qubit phase") {
    for (auto kind : {DensityKind::Impulse, DensityKind::Ohmic, DensityKind::Triangular}) {
        const ModelParams p = make(kind, 0.9, 1.4);
        for (double t : {0.0, 1e-4, 0.2, 1.0, 6.7, 19.0}) {
            const Complex lhs = model::kernel_f(p, t) * std::exp(Complex(0.0, -p.omega_0 * t));
            const Complex rhs = model::bath_correlation(p, t);
            CHECK(std::abs(lhs - rhs) < 1e-12);
        }
        // conjugate symmetry in tau
        CHECK(std::abs(model::bath_correlation(p, -2.1) -
                       std::conj(model::bath_correlation(p, 2.1))) < 1e-14);
    }
}

TEST_CASE("bath correlation closed values") {
    const ModelParams j2 = make(DensityKind::Ohmic, 1.0, 1.0);
    CHECK(model::bath_correlation(j2, 0.0) == Complex(1.0, 0.0));
    CHECK(std::abs(model::bath_correlation(j2, 1.0) - Complex(0.0, -0.5)) < 1e-14);
    const ModelParams j3 = make(DensityKind::Triangular, 1.0, 0.5);
    CHECK(model::bath_correlation(j3, 1e-9).real() == doctest::Approx(0.5).epsilon(1e-12));
    // |B| non-increasing in |tau| for the Ohmic density
    double prev = 1e300;
    for (double tau = 0.0; tau < 10.0; tau += 0.37) {
        const double mag = std::abs(model::bath_correlation(j2, tau));
        CHECK(mag <= prev + 1e-15);
        prev = mag;
    }
}

TEST_CASE("kernel Laplace transform against truncated quadrature") {
    // impulse pole expression reduces to g^2/s at resonance
    const ModelParams j1 = make(DensityKind::Impulse, 2.0, 1.0);
    CHECK(std::abs(model::kernel_laplace(j1, Complex(1.0, 0.0)) - Complex(2.0, 0.0)) < 1e-14);
    // initial-value theorem for the Ohmic transform
    const ModelParams j2 = make(DensityKind::Ohmic, 1.0, 1.0);
    const Complex big = model::kernel_laplace(j2, Complex(1e7, 0.0)) * 1e7;
    CHECK(std::abs(big - model::kernel_f(j2, 0.0)) < 1e-5);

    std::mt19937 rng(7177);
    std::uniform_real_distribution<double> re(0.2, 5.0), im(-5.0, 5.0);
    for (auto kind : {DensityKind::Ohmic, DensityKind::Triangular}) {
        const ModelParams p = make(kind, 1.0, kind == DensityKind::Ohmic ? 1.0 : 0.5);
        for (int i = 0; i < 10; ++i) {
            const Complex s{re(rng), im(rng)};
            auto integrand = [&](double t) { return model::kernel_f(p, t) * std::exp(-s * t); };
            const Complex ref =
                oracles::simpson_split_c(integrand, {0.0, 1.0, 5.0, 20.0, 80.0, 200.0}, 1e-13);
            const Complex got = model::kernel_laplace(p, s);
            CHECK(std::abs(got - ref) <= 1e-6 * std::abs(got));
        }
    }
    // spot value: J3 at s = wc(1+i), Omega0 = wc/2
    const ModelParams j3 = make(DensityKind::Triangular, 1.0, 0.5);
    const Complex s{1.0, 1.0};
    const Complex ref = oracles::simpson_split_c(
        [&](double t) { return model::kernel_f(j3, t) * std::exp(-s * t); },
        {0.0, 1.0, 5.0, 20.0, 80.0, 200.0}, 1e-13);
    CHECK(std::abs(model::kernel_laplace(j3, s) - ref) < 1e-9);

    CHECK_THROWS_AS(model::kernel_laplace(j2, Complex(0.0, 1.0)), djc::DomainError);
    CHECK_THROWS_AS(model::kernel_laplace(j2, Complex(-0.5, 0.0)), djc::DomainError);
}

TEST_CASE("kernel antiderivative against quadrature of the kernel") {
    for (auto [kind, w0] : {std::pair{DensityKind::Impulse, 0.5},
                            {DensityKind::Ohmic, 1.0},
                            {DensityKind::Ohmic, 4.0},
                            {DensityKind::Triangular, 1.8},
                            {DensityKind::Triangular, 0.5}}) {
        const ModelParams p = make(kind, 1.0, w0);
        for (double t : {1e-5, 1e-3, 0.3, 2.0, 11.0}) {
            const Complex ref =
                oracles::simpson_c([&](double u) { return model::kernel_f(p, u); }, 0.0, t, 1e-14);
            const Complex got = model::kernel_antiderivative(p, t);
            CHECK(std::abs(got - ref) < 1e-11 * (1.0 + std::abs(ref)));
        }
        CHECK(std::abs(model::kernel_antiderivative(p, 0.0)) == 0.0);
    }
    CHECK_THROWS_AS(model::kernel_antiderivative(make(DensityKind::Triangular, 1.0, 1.0), 1.0),
                    djc::SingularParameterError);
}

TEST_CASE("omega_c scaling is exact") {
    // f(t; W0, wc) = wc^2 f(wc t; W0/wc, 1) for the dimensionless shape
    for (auto kind : {DensityKind::Ohmic, DensityKind::Triangular}) {
        const double wc = 2.7;
        const ModelParams scaled = make(kind, 0.6, 1.3 * wc, wc);
        const ModelParams unit = make(kind, 0.6, 1.3, 1.0);
        for (double x : {0.1, 1.0, 4.4}) {
            const Complex lhs = model::kernel_f(scaled, x / wc);
            const Complex rhs = wc * wc * model::kernel_f(unit, x);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
        }
    }
}
