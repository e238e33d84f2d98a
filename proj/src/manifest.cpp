#include "hsrlink/manifest.hpp"

#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>

#include <json.hpp>

#include "hsrlink/errors.hpp"

namespace hsrlink {

std::string tool_version() { return "1.0.0"; }

std::string scenario_hash(const Scenario& s) {
    const std::string canonical = scenario_to_json(s);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

RunManifest make_manifest(const std::string& command, const Scenario& s,
                          std::vector<std::pair<std::string, std::string>> params) {
    RunManifest m;
    m.command = command;
    m.scenario_hash = scenario_hash(s);
    m.parameters = std::move(params);
    m.version = tool_version();
    m.timestamp = utc_timestamp();
    return m;
}

void write_manifest(const RunManifest& m, const std::string& csv_path) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : m.parameters) {
        params[key] = value;
    }
    const nlohmann::json j = {
        {"command", m.command},
        {"scenario_hash", m.scenario_hash},
        {"parameters", params},
        {"version", m.version},
        {"timestamp", m.timestamp},
    };
    const std::string path = csv_path + ".manifest.json";
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw invalid_input("cannot write manifest: " + path);
    }
    out << j.dump(2) << "\n";
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw invalid_input("cannot write output file: " + path);
    }
    out << header << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) {
                out << ",";
            }
            out << row[i];
        }
        out << "\n";
    }
}

} // namespace hsrlink
