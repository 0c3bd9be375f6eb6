#include "holab/scenario.hpp"

namespace holab {

namespace {

// Built-in scenarios, one JSON document each. Simulation path counts are kept
// moderate so every scenario finishes well under a minute at defaults; the
// seeds make repeated runs byte-identical.
const std::pair<const char*, const char*> kCatalog[] = {
    {"euclidean-plane", R"json({
  "name": "euclidean-plane",
  "manifold": {"dim": 2, "sigma": "r"},
  "entropy": {"sigma0": 1.0},
  "bound_range": [0.05, 4.0],
  "analyses": ["geometry", "entropy"],
  "seed": 20177
})json"},
    {"euclidean-3space", R"json({
  "name": "euclidean-3space",
  "manifold": {"dim": 3, "sigma": "r"},
  "entropy": {"sigma0": 1.0},
  "bound_range": [0.1, 2.0],
  "sim": {"inner": 1.0, "r0": 2.0, "outer": 3.0, "dt": 1e-4, "paths": 20000},
  "analyses": ["geometry", "entropy", "thm31", "thm33", "simulate"],
  "seed": 20177
})json"},
    {"euclidean-plane-recurrence", R"json({
  "name": "euclidean-plane-recurrence",
  "manifold": {"dim": 2, "sigma": "r"},
  "sim": {"inner": 1.0, "r0": 2.0, "outer": 4.0, "dt": 1e-4, "paths": 20000,
          "stepping": "boundary-adaptive"},
  "trend_outers": [4.0, 16.0, 256.0],
  "analyses": ["geometry", "recurrence-trend"],
  "seed": 20177
})json"},
    {"euclidean-3space-transience", R"json({
  "name": "euclidean-3space-transience",
  "manifold": {"dim": 3, "sigma": "r"},
  "sim": {"inner": 1.0, "r0": 2.0, "outer": 4.0, "dt": 1e-4, "paths": 20000,
          "stepping": "boundary-adaptive"},
  "trend_outers": [4.0, 8.0, 16.0],
  "analyses": ["geometry", "recurrence-trend"],
  "seed": 20177
})json"},
    {"hyperbolic-plane", R"json({
  "name": "hyperbolic-plane",
  "manifold": {"dim": 2, "sigma": "sinh(r)"},
  "entropy": {"S": "(pi/2)*sinh(R)"},
  "analyses": ["geometry", "thm33"],
  "seed": 20177
})json"},
    {"hyperbolic-3space", R"json({
  "name": "hyperbolic-3space",
  "manifold": {"dim": 3, "sigma": "sinh(r)"},
  "entropy": {"S": "pi*sinh(R)^2"},
  "ricci_c1": 1.0,
  "volume_c2": 100.0,
  "analyses": ["geometry", "thm32", "thm33"],
  "seed": 20177
})json"},
    {"saturating-euclidean-3space", R"json({
  "name": "saturating-euclidean-3space",
  "manifold": {"dim": 3, "sigma": "r"},
  "entropy": {"S": "pi*R^2"},
  "ricci_c1": 1.0,
  "volume_c2": 100.0,
  "analyses": ["thm32", "thm33"],
  "seed": 20177
})json"},
    {"exp-growth-3space", R"json({
  "name": "exp-growth-3space",
  "manifold": {"dim": 3, "sigma": "sinh(2.5*r)/2.5"},
  "entropy": {"sigma0": 1.0},
  "ricci_nonneg_evidence": true,
  "analyses": ["geometry", "entropy", "thm31"],
  "seed": 20177
})json"},
    {"fischler-susskind", R"json({
  "name": "fischler-susskind",
  "manifold": {"dim": 3, "sigma": "r"},
  "entropy": {"sigma0": 1.0},
  "bound_range": [0.1, 2.0],
  "analyses": ["entropy", "thm31"],
  "seed": 20177
})json"},
    {"cor35-plane-violation", R"json({
  "name": "cor35-plane-violation",
  "manifold": {"dim": 2, "sigma": "r"},
  "entropy": {"sigma0": 1.0},
  "analyses": ["cor35"],
  "seed": 20177
})json"},
    {"de-sitter-slice", R"json({
  "name": "de-sitter-slice",
  "spacetime": {"f": "exp(t)", "dim": 2, "fiber_sec_floor": 0.0, "interval": [null, null]},
  "hypersurface": {"slice_tau": 0.0},
  "manifold": {"dim": 2, "sigma": "r"},
  "entropy": {"sigma0": 1.0},
  "analyses": ["geometry", "prop44"],
  "seed": 20177
})json"},
    {"einstein-de-sitter", R"json({
  "name": "einstein-de-sitter",
  "spacetime": {"f": "t^(2/3)", "dim": 3, "fiber_sec_floor": 0.0, "interval": [0.0, null]},
  "hypersurface": {"samples": [{"tau": 1.0, "H": 0.0, "grad_tau_sq": 0.0, "umbilic_lambda": 0.0}]},
  "manifold": {"dim": 3, "sigma": "r"},
  "entropy": {"sigma0": 0.002},
  "analyses": ["geometry", "thm43"],
  "seed": 20177
})json"},
};

} // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& [name, text] : kCatalog) names.push_back(name);
    return names;
}

nlohmann::json catalog_scenario(const std::string& name) {
    for (const auto& [n, text] : kCatalog)
        if (name == n) return nlohmann::json::parse(text);
    throw ConfigError("unknown catalog scenario '" + name + "'");
}

} // namespace holab
