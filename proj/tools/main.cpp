// Scenario runner: one subcommand per experiment, JSON report per run.
// Exit codes: 0 all configured thresholds pass, 1 a threshold failed,
// 2 invalid config or arguments, 3 I/O failure.
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ionmirror/errors.hpp"
#include "report_io.hpp"
#include "scenario_runner.hpp"
#include "svg_plot.hpp"

namespace fs = std::filesystem;
using namespace ionmirror;
using namespace ionmirror::cli;

namespace {

int run(const RunOptions& opt)
{
    nlohmann::json user = nlohmann::json::object();
    if (!opt.config_path.empty()) user = load_json_file(opt.config_path);

    const auto start = std::chrono::steady_clock::now();
    ScenarioOutcome out = run_scenario(opt, user);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::error_code ec;
    fs::create_directories(opt.out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + opt.out_dir);

    const fs::path report_path = fs::path(opt.out_dir) / out.report_name;
    const nlohmann::json envelope = report_envelope(
        opt.scenario, out.config, out.results, out.thresholds, out.passed, elapsed);
    atomic_write_text(report_path, envelope.dump(2) + "\n");

    std::string artifacts = report_path.string();
    if (!out.series_name.empty() && !out.series_csv.empty()) {
        const fs::path series_path = fs::path(opt.out_dir) / out.series_name;
        atomic_write_text(series_path, out.series_csv);
        artifacts += ", " + series_path.string();
    }
    if (opt.emit_plots && !out.panels.empty()) {
        const fs::path plot_path = fs::path(opt.out_dir) / (opt.scenario + ".svg");
        atomic_write_text(plot_path, render_svg(out.panels));
        artifacts += ", " + plot_path.string();
    }

    std::printf("%s: %s (%s)\n", opt.scenario.c_str(), out.passed ? "PASS" : "FAIL",
                artifacts.c_str());
    return out.passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"trapped-ion reflection-gate scenario runner"};
    app.require_subcommand(1);

    RunOptions opt;
    for (const auto& name : scenario_names()) {
        auto* sub = app.add_subcommand(name, scenario_description(name));
        sub->add_option("--config", opt.config_path,
                        "JSON config; omitted keys fall back to built-in defaults");
        sub->add_option("--out", opt.out_dir, "output directory")
            ->capture_default_str();
        sub->add_option("--seed", opt.seed, "override the probe-suite seed");
        sub->add_flag("--emit-plots", opt.emit_plots, "write a static SVG plot");
        sub->callback([&opt, name] { opt.scenario = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return run(opt);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 3;
    } catch (const SimulationError& e) {
        // Model preconditions broken by configured values read as bad config.
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
