// End-to-end runs of the scenario tool: exit codes, report schema, frozen
// regression values, and byte-level determinism. The binary path and the
// shipped config directory come in as compile definitions.
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "golden_values.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string tool = IONMIRROR_CLI_PATH;
const fs::path config_dir = IONMIRROR_CONFIG_DIR;

fs::path fresh_dir(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "ionmirror_cli_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

int run_tool(const std::string& args)
{
    const std::string cmd = "\"" + tool + "\" " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

json load(const fs::path& path)
{
    std::ifstream in(path);
    REQUIRE(bool(in));
    return json::parse(in);
}

void write(const fs::path& path, const std::string& text)
{
    std::ofstream out(path);
    out << text;
}

} // namespace

TEST_CASE("design run reports the headline numbers and exits 0")
{
    const auto dir = fresh_dir("design");
    const int code = run_tool("design --config \"" + (config_dir / "design.json").string()
                              + "\" --out \"" + dir.string() + "\"");
    CHECK(code == 0);

    const json rep = load(dir / "design.json");
    CHECK(rep.at("schema_version") == 1);
    CHECK(rep.at("scenario") == "design");
    CHECK(rep.at("passed") == true);
    CHECK(rep.at("results").at("g_parity") == "150 kHz");
    CHECK(rep.at("results").at("pulse_time_us").get<double>()
          == doctest::Approx(golden::pulse_time).epsilon(1e-12));
    CHECK(rep.at("results").at("elimination_ratio").get<double>()
          == doctest::Approx(4000.0).epsilon(1e-12));
}

TEST_CASE("parity-ideal runs on built-in defaults with an exact gate")
{
    const auto dir = fresh_dir("ideal");
    CHECK(run_tool("parity-ideal --out \"" + dir.string() + "\"") == 0);

    const json rep = load(dir / "parity-ideal.json");
    CHECK(rep.at("results").at("worst_fidelity").get<double>() >= 1.0 - 1e-10);
    CHECK(rep.at("results").at("min_purity").get<double>() >= 1.0 - 1e-10);
    // every threshold that decided the exit status is in the report
    CHECK(rep.at("thresholds").contains("worst_fidelity_min"));
}

TEST_CASE("parity-two-beam reproduces the frozen worst infidelity")
{
    const auto dir = fresh_dir("two_beam");
    const int code =
        run_tool("parity-two-beam --config \""
                 + (config_dir / "parity-two-beam.json").string() + "\" --out \""
                 + dir.string() + "\"");
    CHECK(code == 0);

    const json rep = load(dir / "parity-two-beam.json");
    const double infidelity = rep.at("results").at("worst_infidelity").get<double>();
    CHECK(std::abs(infidelity - golden::two_beam_worst_infidelity[3]) <= 1e-6);
    CHECK(rep.at("results").at("calibration").at("pulse_time_us").get<double>()
          == doctest::Approx(golden::pulse_time).epsilon(1e-12));
    // the probe table rides along as a csv artifact
    CHECK(fs::exists(dir / "parity-two-beam-probes.csv"));
}

TEST_CASE("reruns are byte-identical once metadata is dropped")
{
    const auto dir1 = fresh_dir("det1");
    const auto dir2 = fresh_dir("det2");
    CHECK(run_tool("parity-ideal --out \"" + dir1.string() + "\"") == 0);
    CHECK(run_tool("parity-ideal --out \"" + dir2.string() + "\"") == 0);

    json a = load(dir1 / "parity-ideal.json");
    json b = load(dir2 / "parity-ideal.json");
    a.erase("metadata");
    b.erase("metadata");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("--seed overrides the probe seed and is echoed in the report")
{
    const auto dir = fresh_dir("seed");
    CHECK(run_tool("parity-ideal --seed 123 --out \"" + dir.string() + "\"") == 0);
    const json rep = load(dir / "parity-ideal.json");
    CHECK(rep.at("config").at("run").at("seed").get<std::uint64_t>() == 123);
    CHECK(rep.at("config").at("run").at("probes").at("seed").get<std::uint64_t>() == 123);
}

TEST_CASE("config problems exit 2, missing files exit 3")
{
    const auto dir = fresh_dir("errors");
    write(dir / "unknown.json", R"({"parameters": {"gg": 1}})");
    CHECK(run_tool("parity-ideal --config \"" + (dir / "unknown.json").string() + "\"")
          == 2);

    write(dir / "unit.json", R"({"parameters": {"g": "3 bananas"}})");
    CHECK(run_tool("parity-ideal --config \"" + (dir / "unit.json").string() + "\"")
          == 2);

    write(dir / "syntax.json", "{not json");
    CHECK(run_tool("parity-ideal --config \"" + (dir / "syntax.json").string() + "\"")
          == 2);

    write(dir / "mismatch.json", R"({"scenario": "design"})");
    CHECK(run_tool("not-gate --config \"" + (dir / "mismatch.json").string() + "\"")
          == 2);

    CHECK(run_tool("parity-ideal --config \"" + (dir / "absent.json").string() + "\"")
          == 3);
}

TEST_CASE("a failed threshold exits 1 and the report says why")
{
    const auto dir = fresh_dir("threshold");
    write(dir / "strict.json",
          R"({"thresholds": {"worst_fidelity_min": 2.0}})");
    CHECK(run_tool("parity-ideal --config \"" + (dir / "strict.json").string()
                   + "\" --out \"" + dir.string() + "\"")
          == 1);

    const json rep = load(dir / "parity-ideal.json");
    CHECK(rep.at("passed") == false);
    CHECK(rep.at("thresholds").at("worst_fidelity_min").get<double>() == 2.0);
}

TEST_CASE("--emit-plots writes a static svg next to the report")
{
    const auto dir = fresh_dir("plots");
    CHECK(run_tool("not-gate --out \"" + dir.string() + "\"") == 0);
    CHECK(!fs::exists(dir / "not-gate.svg")); // nothing worth plotting here

    CHECK(run_tool("parity-ideal --emit-plots --out \"" + dir.string() + "\"") == 0);
    std::ifstream svg(dir / "parity-ideal.svg");
    REQUIRE(bool(svg));
    std::string head;
    std::getline(svg, head);
    CHECK(head.rfind("<svg", 0) == 0);
}

TEST_CASE("time-reversal and the adiabatic comparison pass their shipped configs")
{
    const auto dir = fresh_dir("shipped");
    CHECK(run_tool("time-reversal --config \""
                   + (config_dir / "time-reversal.json").string() + "\" --out \""
                   + dir.string() + "\"")
          == 0);
    const json tr = load(dir / "time-reversal.json");
    CHECK(tr.at("results").at("counterexample_rejected") == true);

    CHECK(run_tool("adiabatic-compare --config \""
                   + (config_dir / "adiabatic-compare-ratio4000.json").string()
                   + "\" --out \"" + dir.string() + "\"")
          == 0);
    const json ad = load(dir / "adiabatic-compare-ratio4000.json");
    CHECK(ad.at("results").at("max_aux_population").get<double>() <= 1e-6);
    CHECK(std::abs(ad.at("results").at("max_aux_population").get<double>()
                   - golden::adiabatic_max_aux_ratio4000)
          <= 1e-9);
}
