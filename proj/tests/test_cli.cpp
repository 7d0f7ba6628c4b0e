#include <doctest.h>

#include <sstream>

#include "djc/run.hpp"
#include "djc/scenario.hpp"

using djc::cli::Method;
using djc::cli::Scenario;

TEST_CASE("scenario round-trips through its serialized form") {
    Scenario sc;
    sc.density = djc::DensityKind::Triangular;
    sc.eta = 0.5;
    sc.omega0 = 1.8;
    sc.tmax = 12.5;
    sc.points = 1234;
    sc.methods = {Method::Exact, Method::Tcl2};
    sc.tau_auto = false;
    sc.tau = 1.8629886;
    sc.horizon = 77.0;

    const std::string text = djc::cli::serialize_scenario(sc);
    std::istringstream in(text);
    const Scenario back = djc::cli::parse_scenario(in);
    CHECK(djc::cli::serialize_scenario(back) == text);
    CHECK(back.tau == sc.tau);
    CHECK(back.points == sc.points);
    CHECK(back.methods == sc.methods);

    Scenario imp;
    imp.density = djc::DensityKind::Impulse;
    imp.g2 = 2.25;
    const std::string t2 = djc::cli::serialize_scenario(imp);
    std::istringstream in2(t2);
    CHECK(djc::cli::serialize_scenario(djc::cli::parse_scenario(in2)) == t2);
}

TEST_CASE("scenario parsing rejects bad input") {
    Scenario sc;
    CHECK_THROWS_AS(djc::cli::scenario_set(sc, "density", "lorentzian"), djc::ConfigError);
    CHECK_THROWS_AS(djc::cli::scenario_set(sc, "bogus", "1"), djc::ConfigError);
    CHECK_THROWS_AS(djc::cli::scenario_set(sc, "eta", "abc"), djc::ConfigError);
    CHECK_THROWS_AS(djc::cli::scenario_set(sc, "points", "1.5"), djc::ConfigError);
    CHECK_THROWS_AS(djc::cli::scenario_set(sc, "methods", "exact,warp"), djc::ConfigError);
    std::istringstream in("density ohmic\n");
    CHECK_THROWS_AS(djc::cli::parse_scenario(in), djc::ConfigError);
    sc.points = 1;
    CHECK_THROWS_AS(sc.validate(), djc::ConfigError);
}

TEST_CASE("simulate emits the schema-tagged CSV with exact columns first") {
    Scenario sc;
    sc.density = djc::DensityKind::Ohmic;
    sc.tmax = 1.0;
    sc.points = 11;
    sc.methods = {Method::Tcl2, Method::Exact};  // order in the file is canonical
    const auto result = djc::cli::run_simulate(sc);
    REQUIRE(result.series.size() == 2);
    CHECK(result.series[0].method == Method::Exact);
    CHECK(result.t.size() == 11);

    std::ostringstream os;
    djc::cli::write_trajectory_csv(result, os);
    const std::string text = os.str();
    CHECK(text.rfind("# schema=djc.trajectory.v1\n", 0) == 0);
    CHECK(text.find("t,exact_rho11,exact_re_rho01,exact_im_rho01,exact_gamma,exact_S,"
                    "tcl2_rho11") != std::string::npos);
    CHECK(text.find('\r') == std::string::npos);
    // 11 data rows + comment + header
    std::size_t lines = 0;
    for (char c : text) lines += (c == '\n');
    CHECK(lines == 13);
    // 17-significant-digit round trip: the first data value is rho11(0) = 1/2
    // up to amplitude roundoff; parse it back and compare bitwise
    std::istringstream is(text);
    std::string line;
    std::getline(is, line);
    std::getline(is, line);
    std::getline(is, line);
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const double parsed = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    CHECK(parsed == result.series[0].traj.rho11[0]);
}

TEST_CASE("impulse with RWA requested still succeeds, with a sentinel") {
    Scenario sc;
    sc.density = djc::DensityKind::Impulse;
    sc.g2 = 1.0;
    sc.omega0 = 0.5;
    sc.tmax = 1.0;
    sc.points = 5;
    sc.methods = {Method::Exact, Method::Rwale};
    const auto result = djc::cli::run_simulate(sc);
    REQUIRE(result.series.size() == 2);
    CHECK(result.series[1].rwa_unsuitable);
    std::ostringstream os;
    djc::cli::write_trajectory_csv(result, os);
    CHECK(os.str().find("unsuitable") != std::string::npos);
}

TEST_CASE("distance subcommand") {
    Scenario sc;
    sc.density = djc::DensityKind::Ohmic;
    sc.tmax = 1.0;
    sc.points = 21;
    sc.methods = {Method::Exact, Method::Cgle};
    sc.tau_auto = false;
    sc.tau = 0.5;
    const auto result = djc::cli::run_distance(sc);
    REQUIRE(result.columns.size() == 1);
    CHECK(result.columns[0].first == Method::Cgle);
    CHECK(result.columns[0].second.front() == 0.0);  // identical states at t = 0
    for (double v : result.columns[0].second) CHECK(v >= 0.0);

    std::ostringstream os;
    djc::cli::write_distance_csv(result, os);
    CHECK(os.str().rfind("# schema=djc.distance.v1\n", 0) == 0);

    Scenario no_exact = sc;
    no_exact.methods = {Method::Cgle};
    CHECK_THROWS_AS(djc::cli::run_distance(no_exact), djc::ConfigError);
    Scenario only_exact = sc;
    only_exact.methods = {Method::Exact};
    CHECK_THROWS_AS(djc::cli::run_distance(only_exact), djc::ConfigError);
}

TEST_CASE("optimize-tau requires an auto policy and writes a monotone scan") {
    Scenario sc;
    sc.density = djc::DensityKind::Triangular;
    sc.omega0 = 0.5;
    sc.tau_auto = false;
    sc.tau = 1.0;
    CHECK_THROWS_AS(djc::cli::run_optimize(sc), djc::ConfigError);
}

TEST_CASE("breakdown-times subcommand") {
    Scenario sc;
    sc.density = djc::DensityKind::Impulse;
    sc.g2 = 1.0;
    sc.omega0 = 1.0;
    const auto times = djc::cli::run_breakdown(sc, 4);
    CHECK(times.size() == 5);
    std::ostringstream os;
    djc::cli::write_breakdown_csv(times, os);
    CHECK(os.str().rfind("# schema=djc.breakdown.v1\n", 0) == 0);
    Scenario bad = sc;
    bad.density = djc::DensityKind::Ohmic;
    CHECK_THROWS_AS(djc::cli::run_breakdown(bad, 4), djc::ConfigError);
}
