#include "report_io.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>

#include "ionmirror/errors.hpp"

namespace ionmirror::cli {

nlohmann::json load_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

void atomic_write_text(const std::filesystem::path& path, const std::string& text)
{
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out << text;
        out.flush();
        if (!out) throw IoError("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move report into place at " + path.string());
    }
}

std::string timestamp_utc()
{
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

nlohmann::json report_envelope(const std::string& scenario,
                               const nlohmann::json& effective_config,
                               const nlohmann::json& results,
                               const nlohmann::json& thresholds, bool passed,
                               double elapsed_s)
{
    return nlohmann::json{{"schema_version", 1},
                          {"scenario", scenario},
                          {"config", effective_config},
                          {"results", results},
                          {"thresholds", thresholds},
                          {"passed", passed},
                          {"metadata",
                           {{"generated_at", timestamp_utc()}, {"elapsed_s", elapsed_s}}}};
}

} // namespace ionmirror::cli
