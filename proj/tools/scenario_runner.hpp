#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "svg_plot.hpp"

namespace ionmirror::cli {

struct RunOptions {
    std::string scenario;
    std::string config_path; // empty: run on the built-in defaults
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed; // overrides any configured probe seed
    bool emit_plots = false;
};

struct ScenarioOutcome {
    nlohmann::json config; // effective config: defaults, file, CLI overrides
    nlohmann::json results;
    nlohmann::json thresholds;
    bool passed = false;
    std::string report_name;
    std::string series_name; // empty: no series configured
    std::string series_csv;
    std::vector<PlotPanel> panels; // empty: nothing worth plotting
};

const std::vector<std::string>& scenario_names();

const char* scenario_description(const std::string& name);

/// Built-in default config for a scenario; also the schema the user file is
/// checked against (unknown keys are rejected with their full path).
nlohmann::json default_config(const std::string& scenario);

/// Validate the user config, merge it over the defaults, run the scenario,
/// and judge every configured threshold. ConfigError covers both schema
/// violations and configured values the model rejects.
ScenarioOutcome run_scenario(const RunOptions& opt, const nlohmann::json& user_config);

} // namespace ionmirror::cli
