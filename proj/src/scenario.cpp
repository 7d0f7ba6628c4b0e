#include "djc/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace djc::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double out = std::stod(value, &used);
        if (used != value.size() || !std::isfinite(out))
            throw std::invalid_argument(value);
        return out;
    } catch (const std::exception&) {
        throw ConfigError("cli", "invalid number for '" + key + "': " + value);
    }
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string to_string(Method m) {
    switch (m) {
        case Method::Exact: return "exact";
        case Method::Cgle: return "cgle";
        case Method::Rwale: return "rwale";
        case Method::Tcl2: return "tcl2";
        case Method::Tcl4: return "tcl4";
    }
    return "unknown";
}

Method method_from_string(const std::string& name) {
    if (name == "exact") return Method::Exact;
    if (name == "cgle") return Method::Cgle;
    if (name == "rwale") return Method::Rwale;
    if (name == "tcl2") return Method::Tcl2;
    if (name == "tcl4") return Method::Tcl4;
    throw ConfigError("cli", "unknown method '" + name + "'");
}

bool Scenario::has_method(Method m) const {
    return std::find(methods.begin(), methods.end(), m) != methods.end();
}

void Scenario::validate() const {
    if (points < 2) throw ConfigError("cli", "points must be >= 2");
    if (!(tmax > 0.0)) throw ConfigError("cli", "tmax must be positive");
    if (!(omega0 > 0.0)) throw ConfigError("cli", "omega0 must be positive");
    if (!(horizon > 0.0)) throw ConfigError("cli", "horizon must be positive");
    if (!tau_auto && !(tau > 0.0)) throw ConfigError("cli", "tau must be positive");
    if (density == DensityKind::Impulse) {
        if (!(g2 > 0.0)) throw ConfigError("cli", "g2 must be positive");
    } else if (!(eta > 0.0)) {
        throw ConfigError("cli", "eta must be positive");
    }
    if (methods.empty()) throw ConfigError("cli", "at least one method is required");
}

ModelParams Scenario::model() const {
    ModelParams p;
    p.omega_0 = omega0;
    switch (density) {
        case DensityKind::Impulse: p.density = SpectralDensity::impulse(g2); break;
        case DensityKind::Ohmic: p.density = SpectralDensity::ohmic(eta); break;
        case DensityKind::Triangular: p.density = SpectralDensity::triangular(eta); break;
    }
    p.c0 = {1.0 / std::sqrt(2.0), 0.0};
    p.c1_0 = {1.0 / std::sqrt(2.0), 0.0};
    return p;
}

void scenario_set(Scenario& sc, const std::string& key, const std::string& value) {
    if (key == "density") {
        if (value == "impulse") sc.density = DensityKind::Impulse;
        else if (value == "ohmic") sc.density = DensityKind::Ohmic;
        else if (value == "triangular") sc.density = DensityKind::Triangular;
        else throw ConfigError("cli", "unknown density '" + value + "'");
    } else if (key == "eta") {
        sc.eta = parse_double(key, value);
    } else if (key == "g2") {
        sc.g2 = parse_double(key, value);
    } else if (key == "omega0") {
        sc.omega0 = parse_double(key, value);
    } else if (key == "tmax") {
        sc.tmax = parse_double(key, value);
    } else if (key == "points") {
        const double v = parse_double(key, value);
        if (v < 2 || v != std::floor(v)) throw ConfigError("cli", "points must be an integer >= 2");
        sc.points = static_cast<std::size_t>(v);
    } else if (key == "methods") {
        sc.methods.clear();
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (!item.empty()) sc.methods.push_back(method_from_string(item));
        }
        if (sc.methods.empty()) throw ConfigError("cli", "methods list is empty");
    } else if (key == "tau") {
        if (value == "auto") {
            sc.tau_auto = true;
        } else {
            sc.tau_auto = false;
            sc.tau = parse_double(key, value);
        }
    } else if (key == "horizon") {
        sc.horizon = parse_double(key, value);
    } else {
        throw ConfigError("cli", "unknown configuration key '" + key + "'");
    }
}

Scenario parse_scenario(std::istream& in) {
    Scenario sc;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("cli", "line " + std::to_string(lineno) + ": expected key = value");
        scenario_set(sc, trim(s.substr(0, eq)), trim(s.substr(eq + 1)));
    }
    sc.validate();
    return sc;
}

Scenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cli", "cannot open scenario file '" + path + "'");
    return parse_scenario(in);
}

std::string serialize_scenario(const Scenario& sc) {
    std::ostringstream out;
    out << "density = " << djc::to_string(sc.density) << "\n";
    if (sc.density == DensityKind::Impulse)
        out << "g2 = " << format_double(sc.g2) << "\n";
    else
        out << "eta = " << format_double(sc.eta) << "\n";
    out << "omega0 = " << format_double(sc.omega0) << "\n";
    out << "tmax = " << format_double(sc.tmax) << "\n";
    out << "points = " << sc.points << "\n";
    out << "methods = ";
    for (std::size_t i = 0; i < sc.methods.size(); ++i)
        out << (i ? "," : "") << to_string(sc.methods[i]);
    out << "\n";
    if (sc.tau_auto)
        out << "tau = auto\n";
    else
        out << "tau = " << format_double(sc.tau) << "\n";
    out << "horizon = " << format_double(sc.horizon) << "\n";
    return out.str();
}

}  // namespace djc::cli
