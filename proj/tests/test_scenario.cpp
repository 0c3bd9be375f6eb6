#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "holab/scenario.hpp"

using namespace holab;
using nlohmann::json;

TEST_CASE("catalog contains the advertised scenarios") {
    auto names = catalog_names();
    CHECK_FALSE(names.empty());
    for (const char* want :
         {"euclidean-plane", "euclidean-3space", "hyperbolic-plane", "hyperbolic-3space",
          "de-sitter-slice", "einstein-de-sitter", "fischler-susskind", "cor35-plane-violation",
          "euclidean-plane-recurrence"}) {
        CHECK(std::find(names.begin(), names.end(), want) != names.end());
    }
    CHECK_THROWS_AS(catalog_scenario("no-such-thing"), ConfigError);
}

TEST_CASE("every catalog scenario parses and validates") {
    for (const std::string& name : catalog_names()) {
        CAPTURE(name);
        CHECK_NOTHROW(scenario_from_json(catalog_scenario(name)));
    }
}

TEST_CASE("explain covers every analysis and rejects unknown names") {
    for (const std::string& a : known_analyses()) CHECK_FALSE(explain_analysis(a).empty());
    CHECK(explain_analysis("thm31").find("Ricci") != std::string::npos);
    CHECK(explain_analysis("thm31").find("sigma0") != std::string::npos);
    CHECK(explain_analysis("thm31").find("Transient") != std::string::npos);
    CHECK(explain_analysis("prop44").find("(f'/f)^2") != std::string::npos);
    CHECK(explain_analysis("prop44").find("parabolic") != std::string::npos);
    CHECK_THROWS_AS(explain_analysis("bogus"), ConfigError);
}

TEST_CASE("schema violations carry the field path") {
    json j = catalog_scenario("fischler-susskind");
    j["manifold"]["sigma"] = "exp(";
    try {
        scenario_from_json(j);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("manifold.sigma") != std::string::npos);
    }

    j = catalog_scenario("fischler-susskind");
    j["analyses"].push_back("frobnicate");
    CHECK_THROWS_AS(scenario_from_json(j), ConfigError);

    j = catalog_scenario("fischler-susskind");
    j["analyses"] = json::array({"simulate"}); // missing sim settings
    CHECK_THROWS_AS(scenario_from_json(j), ConfigError);

    j = catalog_scenario("fischler-susskind");
    j.erase("entropy");
    CHECK_THROWS_AS(scenario_from_json(j), ConfigError);
}

TEST_CASE("fischler-susskind bundle carries the violation radius") {
    Scenario sc = scenario_from_json(catalog_scenario("fischler-susskind"));
    json bundle = run_scenario(sc);
    CHECK_FALSE(bundle_has_errors(bundle));
    const json& r = bundle.at("results");
    CHECK(r.at("entropy").at("bound").at("first_violation").get<double>() ==
          doctest::Approx(0.75).epsilon(1e-9));
    CHECK(r.at("thm31").at("conclusion") == "ViolationDetected");
    CHECK(bundle.at("seed").get<std::uint64_t>() == 20177);
}

TEST_CASE("round trip: same seed, byte-identical bundles modulo wall time") {
    for (const char* name : {"fischler-susskind", "cor35-plane-violation", "hyperbolic-plane"}) {
        CAPTURE(name);
        Scenario sc = scenario_from_json(catalog_scenario(name));
        json a = run_scenario(sc);
        json b = run_scenario(sc);
        a.erase("wall_time_ms");
        b.erase("wall_time_ms");
        CHECK(a.dump() == b.dump());
    }
}

TEST_CASE("round trip with simulation, reduced paths") {
    json j = catalog_scenario("euclidean-plane-recurrence");
    j["sim"]["paths"] = 2000;
    Scenario sc = scenario_from_json(j);
    json a = run_scenario(sc);
    json b = run_scenario(sc);
    a.erase("wall_time_ms");
    b.erase("wall_time_ms");
    CHECK(a.dump() == b.dump());
    // seed override changes the bundle but stays deterministic
    json c = run_scenario(sc, 777);
    CHECK(c.at("seed").get<std::uint64_t>() == 777);

    const json& trend = a.at("results").at("recurrence-trend");
    CHECK(trend.at("capacity").at("kind") == "Parabolic");
    CHECK(trend.at("verdict") == "recurrent");
    CHECK(trend.at("agrees_with_oracle").get<bool>());
}

TEST_CASE("numeric failures are embedded per analysis") {
    json j = catalog_scenario("euclidean-3space");
    j["sim"]["paths"] = 500;
    j["sim"]["max_steps"] = 10; // guarantees censoring
    j["analyses"] = json::array({"simulate"});
    Scenario sc = scenario_from_json(j);
    json bundle = run_scenario(sc);
    CHECK(bundle_has_errors(bundle));
    const json& err = bundle.at("results").at("simulate").at("error");
    CHECK(err.at("type") == "censoring");
}

TEST_CASE("csv side tables") {
    Scenario sc = scenario_from_json(catalog_scenario("fischler-susskind"));
    json bundle = run_scenario(sc);
    std::string dir = (std::filesystem::temp_directory_path() / "holab_csv_test").string();
    auto files = write_bundle_csv(bundle, dir);
    REQUIRE(files.size() == 1);
    std::ifstream f(files[0]);
    std::string header;
    std::getline(f, header);
    CHECK(header == "R,S,area_quarter,margin");
    std::string first_row;
    std::getline(f, first_row);
    CHECK_FALSE(first_row.empty());
    std::filesystem::remove_all(dir);
}

TEST_CASE("tabulated profile through the scenario schema") {
    json j;
    j["name"] = "tabulated";
    json table = json::array();
    // Dense knots near the pole so the interpolant meets the strict
    // sigma'(0) = 1 construction gate, coarser beyond.
    for (int i = 0; i <= 40; ++i) table.push_back({2.5e-4 * i, std::sinh(2.5e-4 * i)});
    for (int i = 1; i <= 79; ++i) {
        double r = 0.01 + 0.1 * i;
        table.push_back({r, std::sinh(r)});
    }
    j["manifold"] = {{"dim", 2}, {"sigma", {{"table", table}}}, {"r_max", 7.9}};
    j["probe"] = {{"r_start", 0.5}, {"window_doublings", 4}};
    j["analyses"] = json::array({"geometry"});
    Scenario sc = scenario_from_json(j);
    REQUIRE(sc.manifold.has_value());
    CHECK(sc.manifold->sigma().interpolated());
    json bundle = run_scenario(sc);
    CHECK_FALSE(bundle_has_errors(bundle));
    // interpolated sinh: areas within interpolation error of the closed form
    for (const auto& row : bundle.at("results").at("geometry").at("manifold").at("balls")) {
        double R = row.at("R").get<double>();
        CHECK(row.at("area").get<double>() ==
              doctest::Approx(2.0 * 3.14159265358979323846 * std::sinh(R)).epsilon(1e-5));
    }
}

TEST_CASE("de-sitter slice scenario produces the explicit radius") {
    Scenario sc = scenario_from_json(catalog_scenario("de-sitter-slice"));
    json bundle = run_scenario(sc);
    const json& p = bundle.at("results").at("prop44");
    CHECK(p.at("conclusion") == "ViolationDetected");
    CHECK(p.at("violation_radius").get<double>() == doctest::Approx(0.5).epsilon(1e-8));
}
