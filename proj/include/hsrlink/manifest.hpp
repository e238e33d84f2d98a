#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hsrlink/scenario.hpp"

namespace hsrlink {

// Provenance sidecar written next to every CSV artifact. The CSV itself is
// byte-deterministic; the timestamp lives here so reruns stay comparable.
struct RunManifest {
    std::string command;
    std::string scenario_hash;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::string version;
    std::string timestamp;
};

std::string tool_version();

// FNV-1a 64-bit hash of the canonical scenario JSON, as 16 hex digits.
std::string scenario_hash(const Scenario& s);

// ISO-8601 UTC, second resolution.
std::string utc_timestamp();

RunManifest make_manifest(const std::string& command, const Scenario& s,
                          std::vector<std::pair<std::string, std::string>> params);

// Writes <csv_path>.manifest.json.
void write_manifest(const RunManifest& m, const std::string& csv_path);

// 6 significant digits, dot decimal separator, locale-independent.
std::string format_number(double v);

// Header plus rows, comma-separated, LF line endings.
void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<std::string>>& rows);

} // namespace hsrlink
