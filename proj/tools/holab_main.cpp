// Command-line front end: scenario execution, built-in catalog, analysis help.
//
// Exit codes: 0 on completed runs (scientific "violation" findings are
// successful results), 2 on configuration/schema errors, 3 when an analysis
// failed numerically (the bundle still carries the structured error).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "holab/scenario.hpp"

namespace {

int cmd_run(const std::string& target, const std::string& out_path,
            std::optional<std::uint64_t> seed, const std::string& csv_dir) {
    nlohmann::json doc;
    if (std::filesystem::exists(target)) {
        std::ifstream f(target);
        try {
            f >> doc;
        } catch (const nlohmann::json::exception& e) {
            std::cerr << "error: " << target << " is not valid JSON: " << e.what() << "\n";
            return 2;
        }
    } else {
        try {
            doc = holab::catalog_scenario(target);
        } catch (const holab::ConfigError&) {
            std::cerr << "error: '" << target
                      << "' is neither a file nor a catalog scenario (see `holab catalog`)\n";
            return 2;
        }
    }

    holab::Scenario sc;
    try {
        sc = holab::scenario_from_json(doc);
    } catch (const holab::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    nlohmann::json bundle = holab::run_scenario(sc, seed);
    std::string text = bundle.dump(2);
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        f << text << "\n";
        std::cerr << "wrote " << out_path << "\n";
    }
    if (!csv_dir.empty()) {
        for (const std::string& p : holab::write_bundle_csv(bundle, csv_dir))
            std::cerr << "wrote " << p << "\n";
    }
    return holab::bundle_has_errors(bundle) ? 3 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for parabolicity, entropy area bounds and radial "
                 "Brownian motion on model manifolds and warped-product hypersurfaces"};
    app.require_subcommand(1);

    std::string run_target, run_out, run_csv;
    std::optional<std::uint64_t> run_seed;
    auto* run = app.add_subcommand("run", "execute a scenario file or catalog scenario");
    run->add_option("scenario", run_target, "scenario JSON file or catalog name")->required();
    run->add_option("--out", run_out, "write the result bundle to this path (default: stdout)");
    std::uint64_t seed_value = 0;
    auto* seed_opt = run->add_option("--seed", seed_value, "override the scenario seed");
    run->add_option("--csv", run_csv, "also emit CSV side tables into this directory");

    auto* cat = app.add_subcommand("catalog", "list built-in scenarios");
    std::string dump_name;
    cat->add_option("--dump", dump_name, "print the JSON of one built-in scenario");

    auto* expl = app.add_subcommand("explain", "describe an analysis and its hypotheses");
    std::string explain_name;
    expl->add_option("analysis", explain_name, "analysis name")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            if (seed_opt->count()) run_seed = seed_value;
            return cmd_run(run_target, run_out, run_seed, run_csv);
        }
        if (cat->parsed()) {
            if (!dump_name.empty()) {
                std::cout << holab::catalog_scenario(dump_name).dump(2) << "\n";
            } else {
                for (const std::string& n : holab::catalog_names()) std::cout << n << "\n";
            }
            return 0;
        }
        if (expl->parsed()) {
            std::cout << holab::explain_analysis(explain_name) << "\n";
            return 0;
        }
    } catch (const holab::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const holab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
