// djc_module.cpp — pybind11 bindings for the main operations

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "djc/exact.hpp"
#include "djc/markov.hpp"
#include "djc/metrics.hpp"
#include "djc/model.hpp"
#include "djc/specfun.hpp"
#include "djc/tauopt.hpp"
#include "djc/tcl.hpp"

namespace py = pybind11;
using namespace djc;

namespace {

SpectralDensity density_from(const std::string& kind, double coupling, double omega_c) {
    if (kind == "impulse") return SpectralDensity::impulse(coupling, omega_c);
    if (kind == "ohmic") return SpectralDensity::ohmic(coupling, omega_c);
    if (kind == "triangular") return SpectralDensity::triangular(coupling, omega_c);
    throw DomainError("model", "unknown density kind '" + kind + "'");
}

ModelParams params_from(const std::string& kind, double coupling, double omega0, double omega_c,
                        Complex c0, Complex c1) {
    ModelParams p;
    p.omega_0 = omega0;
    p.density = density_from(kind, coupling, omega_c);
    p.c0 = c0;
    p.c1_0 = c1;
    p.validate();
    return p;
}

py::dict traj_dict(const Trajectory& t) {
    py::dict d;
    d["t"] = t.t;
    d["rho11"] = t.rho11;
    d["rho01"] = t.rho01;
    std::vector<double> gamma(t.rates.size()), S(t.rates.size());
    std::vector<bool> valid(t.rates.size());
    for (std::size_t i = 0; i < t.rates.size(); ++i) {
        gamma[i] = t.rates[i].gamma;
        S[i] = t.rates[i].S;
        valid[i] = t.rates[i].valid;
    }
    d["gamma"] = gamma;
    d["S"] = S;
    d["rate_valid"] = valid;
    if (!t.c1.empty()) d["c1"] = t.c1;
    return d;
}

constexpr double kRoot2Inv = 0.70710678118654752440;

}  // namespace

PYBIND11_MODULE(pydjc, m) {
    m.doc() = "Damped Jaynes-Cummings qubit: exact dynamics and master-equation rates";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<Error>(m, "DjcError", PyExc_RuntimeError);

    // special functions
    m.def("sinc", &specfun::sinc, py::arg("x"));
    m.def("si_ci", [](double x) {
        const auto v = specfun::si_ci(x);
        return py::make_tuple(v.si, v.ci);
    }, py::arg("x"));
    m.def("expint_ei", [](double x) { return specfun::expint_ei_real(x); }, py::arg("x"));
    m.def("expint_ei_complex", [](Complex z) { return specfun::expint_ei(z); }, py::arg("z"));
    m.def("expint_e1", [](Complex z) { return specfun::expint_e1(z); }, py::arg("z"));

    // model
    m.def("spectral_j",
          [](const std::string& kind, double coupling, double omega, double omega_c) {
              const auto s = model::spectral_j(density_from(kind, coupling, omega_c), omega);
              return py::make_tuple(s.is_atom, s.value);
          },
          py::arg("kind"), py::arg("coupling"), py::arg("omega"), py::arg("omega_c") = 1.0);
    m.def("kernel_f",
          [](const std::string& kind, double coupling, double omega0, double t, double omega_c) {
              return model::kernel_f(params_from(kind, coupling, omega0, omega_c, {1, 0}, {0, 0}),
                                     t);
          },
          py::arg("kind"), py::arg("coupling"), py::arg("omega0"), py::arg("t"),
          py::arg("omega_c") = 1.0);
    m.def("kernel_laplace",
          [](const std::string& kind, double coupling, double omega0, Complex s, double omega_c) {
              return model::kernel_laplace(
                  params_from(kind, coupling, omega0, omega_c, {1, 0}, {0, 0}), s);
          },
          py::arg("kind"), py::arg("coupling"), py::arg("omega0"), py::arg("s"),
          py::arg("omega_c") = 1.0);
    m.def("bath_correlation",
          [](const std::string& kind, double coupling, double tau, double omega_c) {
              return model::bath_correlation(
                  params_from(kind, coupling, 1.0, omega_c, {1, 0}, {0, 0}), tau);
          },
          py::arg("kind"), py::arg("coupling"), py::arg("tau"), py::arg("omega_c") = 1.0);

    // exact dynamics (|+> x vacuum initial state by default)
    m.def("exact_trajectory",
          [](const std::string& kind, double coupling, double omega0, double tmax,
             std::size_t points) {
              return traj_dict(exact::exact_trajectory(
                  params_from(kind, coupling, omega0, 1.0, {kRoot2Inv, 0}, {kRoot2Inv, 0}), tmax,
                  points));
          },
          py::arg("kind"), py::arg("coupling"), py::arg("omega0"), py::arg("tmax") = 20.0,
          py::arg("points") = 4000);
    m.def("solve_ilt",
          [](const std::string& kind, double coupling, double omega0,
             const std::vector<double>& t) {
              const auto s = exact::solve_ilt(
                  params_from(kind, coupling, omega0, 1.0, {kRoot2Inv, 0}, {kRoot2Inv, 0}), t);
              return py::make_tuple(s.c1, s.c1_dot);
          },
          py::arg("kind"), py::arg("coupling"), py::arg("omega0"), py::arg("t"));

    // master-equation rates and trajectories
    m.def("cg_gamma",
          [](const std::string& kind, double coupling, double omega0, double tau,
             double omega_c) {
              return markov::cg_gamma(density_from(kind, coupling, omega_c), omega0, tau).gamma;
          },
          py::arg("kind"), py::arg("coupling"), py::arg("omega0"), py::arg("tau"),
          py::arg("omega_c") = 1.0);
    m.def("rwa_rates",
          [](const std::string& kind, double coupling, double omega0, double omega_c) {
              const auto r = markov::rwa_rates(density_from(kind, coupling, omega_c), omega0);
              py::dict d;
              d["suitable"] = r.suitable;
              if (r.suitable) {
                  d["S"] = r.S;
                  d["gamma"] = r.gamma;
              } else {
                  d["caveat"] = r.caveat;
              }
              return d;
          },
          py::arg("kind"), py::arg("coupling"), py::arg("omega0"), py::arg("omega_c") = 1.0);
    m.def("tcl_rates",
          [](int order, const std::string& kind, double coupling, double omega0, double t) {
              const auto r = tcl::tcl_rates(order, density_from(kind, coupling, 1.0), omega0, t);
              return py::make_tuple(r.S, r.gamma);
          },
          py::arg("order"), py::arg("kind"), py::arg("coupling"), py::arg("omega0"),
          py::arg("t"));
    m.def("tcl_trajectory",
          [](int order, const std::string& kind, double coupling, double omega0, double tmax,
             std::size_t points) {
              return traj_dict(tcl::tcl_trajectory(
                  order, params_from(kind, coupling, omega0, 1.0, {kRoot2Inv, 0}, {kRoot2Inv, 0}),
                  tmax, points));
          },
          py::arg("order"), py::arg("kind"), py::arg("coupling"), py::arg("omega0"),
          py::arg("tmax") = 20.0, py::arg("points") = 2000);
    m.def("tcl2_asymptote_j3",
          [](double eta, double omega0) {
              return tcl::tcl2_asymptote_j3(SpectralDensity::triangular(eta), omega0);
          },
          py::arg("eta"), py::arg("omega0"));
    m.def("breakdown_times",
          [](double g2, double omega0, std::size_t n_max) {
              ModelParams p = params_from("impulse", g2, omega0, 1.0, {1, 0}, {0, 0});
              return tcl::breakdown_times_j1(p, n_max);
          },
          py::arg("g2"), py::arg("omega0"), py::arg("n_max") = 10);

    // metric and tau optimization
    m.def("trace_norm_diff",
          [](double rho11_a, Complex rho01_a, double rho11_b, Complex rho01_b) {
              return metrics::trace_norm_diff({rho11_a, rho01_a}, {rho11_b, rho01_b});
          });
    m.def("optimize_tau",
          [](const std::string& kind, double coupling, double omega0, double horizon,
             std::size_t n_grid) {
              tauopt::OptimizeOptions opts;
              opts.horizon = horizon;
              opts.n_grid = n_grid;
              const auto scan = tauopt::optimize_tau(
                  params_from(kind, coupling, omega0, 1.0, {kRoot2Inv, 0}, {kRoot2Inv, 0}), opts);
              py::dict d;
              d["tau_star"] = scan.tau_star;
              d["d_star"] = scan.d_star;
              d["tau"] = scan.tau;
              d["distance"] = scan.distance;
              d["boundary"] = scan.boundary;
              d["validity_warning"] = scan.validity_warning;
              return d;
          },
          py::arg("kind"), py::arg("coupling"), py::arg("omega0"), py::arg("horizon") = 100.0,
          py::arg("n_grid") = 10001);
}
