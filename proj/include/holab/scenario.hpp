#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "holab/brownian_sim.hpp"
#include "holab/entropy_bound.hpp"
#include "holab/grw.hpp"
#include "holab/model_manifold.hpp"
#include "holab/parabolicity.hpp"

namespace holab {

inline constexpr const char* kToolName = "holab";
inline constexpr const char* kToolVersion = "0.1.0";

/// A fully parsed scenario file: inputs plus the list of requested analyses.
/// Parsing validates that every requested analysis has the inputs it needs.
struct Scenario {
    std::string name;
    nlohmann::json raw; // echoed into the result bundle

    std::optional<ModelManifold> manifold;
    std::optional<GRWSpacetime> spacetime;
    std::vector<HypersurfacePointData> samples;
    std::optional<EntropySpec> entropy;
    TailProbe probe;
    std::optional<std::pair<double, double>> bound_range;
    std::optional<double> ricci_c1;
    std::optional<double> volume_c2;
    std::optional<bool> ricci_nonneg_evidence;

    struct SimSettings {
        double inner = 1.0;
        double r0 = 2.0;
        double outer = 3.0;
        double dt = 1e-4;
        std::uint64_t paths = 100000;
        std::uint64_t max_steps = 10000000;
        Stepping stepping = Stepping::Fixed;
        int threads = 0;
    };
    std::optional<SimSettings> sim;
    std::vector<double> trend_outers;

    std::vector<std::string> analyses;
    std::uint64_t seed = 0;
};

/// Parses and validates a scenario. Throws ConfigError with a field path on
/// schema problems (unknown analysis, missing inputs, bad expressions).
Scenario scenario_from_json(const nlohmann::json& j);

/// Executes every requested analysis in dependency order and assembles the
/// result bundle. Analyses that fail numerically are embedded as structured
/// errors; the bundle is produced either way.
nlohmann::json run_scenario(const Scenario& sc,
                            std::optional<std::uint64_t> seed_override = std::nullopt);

/// True when at least one analysis in the bundle carries an embedded error.
bool bundle_has_errors(const nlohmann::json& bundle);

/// Writes the CSV side tables for a bundle: the (R, S, Area/4, margin)
/// entropy table and the (b, p_inner) trend table, when present.
/// Returns the files written.
std::vector<std::string> write_bundle_csv(const nlohmann::json& bundle,
                                          const std::string& dir);

/// Names of the built-in scenarios.
std::vector<std::string> catalog_names();

/// The JSON text of a built-in scenario. Throws ConfigError for unknown names.
nlohmann::json catalog_scenario(const std::string& name);

/// Human-readable description of an analysis: hypotheses checked and what the
/// conclusions mean. Throws ConfigError for unknown analysis names.
std::string explain_analysis(const std::string& name);

const std::vector<std::string>& known_analyses();

// Serialization helpers shared with tests.
nlohmann::json to_json(const ConvergenceVerdict& v);
nlohmann::json to_json(const CriterionReport& r);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const HitStats& s);
nlohmann::json to_json(const TrendReport& t);
nlohmann::json to_json(const CapacityResult& c);

} // namespace holab
