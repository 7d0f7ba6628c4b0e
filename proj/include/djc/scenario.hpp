// scenario.hpp — batch-run configuration: flat key=value files plus flag overrides

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "djc/types.hpp"

namespace djc::cli {

enum class Method { Exact, Cgle, Rwale, Tcl2, Tcl4 };

std::string to_string(Method m);
Method method_from_string(const std::string& name);

// All interface quantities are dimensionless: frequencies in units of omega_c,
// times in units of 1/omega_c. The initial state is |+> with a vacuum bath.
struct Scenario {
    DensityKind density{DensityKind::Ohmic};
    double eta{1.0};     // coupling for ohmic/triangular
    double g2{1.0};      // |g|^2/omega_c^2 for impulse
    double omega0{1.0};  // Omega0/omega_c
    double tmax{20.0};   // omega_c * t_max
    std::size_t points{4000};
    std::vector<Method> methods{Method::Exact, Method::Cgle, Method::Rwale, Method::Tcl2,
                                Method::Tcl4};
    bool tau_auto{true};
    double tau{0.5};        // omega_c * tau when fixed
    double horizon{100.0};  // omega_c * T for the integrated metric

    bool has_method(Method m) const;
    void validate() const;
    ModelParams model() const;
};

// Apply one key=value pair; throws ConfigError on unknown keys or bad values.
void scenario_set(Scenario& sc, const std::string& key, const std::string& value);

Scenario parse_scenario_file(const std::string& path);
Scenario parse_scenario(std::istream& in);

// Canonical key=value form; parse(serialize(sc)) reproduces sc exactly.
std::string serialize_scenario(const Scenario& sc);

}  // namespace djc::cli
