#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

namespace ionmirror::cli {

/// Load and parse a JSON file. Unreadable file: IoError; bad syntax:
/// ConfigError naming the file.
nlohmann::json load_json_file(const std::filesystem::path& path);

/// Write through a sibling temp file and rename, so a crash or full disk
/// never leaves a truncated artifact under the final name. Throws IoError.
void atomic_write_text(const std::filesystem::path& path, const std::string& text);

/// Wall-clock stamp for the metadata block, e.g. "2026-08-16T12:00:00Z".
std::string timestamp_utc();

/// Assemble the versioned report. Everything outside "metadata" is a pure
/// function of the effective config, so reruns are byte-identical after
/// dropping that one key.
nlohmann::json report_envelope(const std::string& scenario,
                               const nlohmann::json& effective_config,
                               const nlohmann::json& results,
                               const nlohmann::json& thresholds, bool passed,
                               double elapsed_s);

} // namespace ionmirror::cli
