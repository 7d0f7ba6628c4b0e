#include <doctest.h>

#include <cmath>
#include <random>

#include "djc/exact.hpp"
#include "djc/markov.hpp"
#include "djc/metrics.hpp"

using djc::Complex;
using djc::QubitState;
using djc::Trajectory;
namespace metrics = djc::metrics;

TEST_CASE("trace norm difference") {
    const QubitState a{0.3, Complex(0.1, -0.2)};
    CHECK(metrics::trace_norm_diff(a, a) == 0.0);
    const QubitState b{0.4, Complex(0.1, -0.2)};
    CHECK(metrics::trace_norm_diff(a, b) == doctest::Approx(0.2).epsilon(1e-15));
    const QubitState ground{0.0, Complex(0.0, 0.0)};
    const QubitState excited{1.0, Complex(0.0, 0.0)};
    CHECK(metrics::trace_norm_diff(ground, excited) == 2.0);

    std::mt19937 rng(31415);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto random_state = [&] {
        const double p = u(rng);
        const double r = std::sqrt(p * (1.0 - p)) * u(rng);
        const double phi = 6.28 * u(rng);
        return QubitState{p, std::polar(r, phi)};
    };
    for (int i = 0; i < 300; ++i) {
        const QubitState x = random_state(), y = random_state(), z = random_state();
        const double dxy = metrics::trace_norm_diff(x, y);
        CHECK(dxy == metrics::trace_norm_diff(y, x));
        CHECK(dxy >= 0.0);
        CHECK(dxy <= 2.0 + 1e-12);
        CHECK(dxy <= metrics::trace_norm_diff(x, z) + metrics::trace_norm_diff(z, y) + 1e-12);
    }
}

namespace {

Trajectory constant_traj(double rho11, Complex rho01, double tmax, std::size_t n) {
    Trajectory t;
    t.t.resize(n);
    t.rho11.assign(n, rho11);
    t.rho01.assign(n, rho01);
    t.rates.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) t.t[i] = tmax * double(i) / double(n - 1);
    return t;
}

}  // namespace

TEST_CASE("integrated distance") {
    const auto a = constant_traj(0.5, Complex(0.2, 0.0), 10.0, 101);
    CHECK(metrics::integrated_distance(a, a, 10.0).integrated == 0.0);
    // constant population offset d with equal coherences integrates to d
    const auto b = constant_traj(0.4, Complex(0.2, 0.0), 10.0, 101);
    const auto rep = metrics::integrated_distance(a, b, 10.0);
    CHECK(rep.integrated == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(rep.pointwise.front() == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(rep.horizon == 10.0);

    auto c = b;
    c.t[3] += 1e-6;
    CHECK_THROWS_AS(metrics::integrated_distance(a, c, 10.0), djc::DomainError);
    CHECK_THROWS_AS(metrics::integrated_distance(a, b, 11.0), djc::DomainError);
}

TEST_CASE("integrated distance is stable under grid refinement") {
    djc::ModelParams p;
    p.omega_0 = 1.0;
    p.density = djc::SpectralDensity::ohmic(1.0);
    const QubitState rho0{0.5, Complex(0.5, 0.0)};
    double previous = -1.0;
    for (std::size_t n : {2001u, 4001u, 8001u}) {
        const auto exact_traj = djc::exact::exact_trajectory(p, 20.0, n);
        const auto cg = djc::markov::markov_trajectory(0.0, 1.457, rho0, 20.0, n);
        const double d = metrics::integrated_distance(exact_traj, cg, 20.0).integrated;
        if (previous >= 0.0) CHECK(std::abs(d - previous) < 1e-4);
        previous = d;
    }
}
