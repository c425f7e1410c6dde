#pragma once

#include "nvodmr/config.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nvodmr::io {

std::string tool_version();

// Provenance block written at the top of every output file.
struct RunManifest {
    std::string config_sha256;
    std::uint64_t seed = 0;
    std::string tool_version;
    std::string timestamp;
    std::vector<std::string> outputs;
    // Canonical config JSON, one line; enough to rerun the simulation.
    std::string config_json;
};

std::string sha256_hex(const std::string& data);

// UTC, ISO 8601 with seconds.
std::string utc_timestamp();

RunManifest make_manifest(const SimulationConfig& config, std::vector<std::string> outputs);

// "# key: value" lines, without trailing newlines.
std::vector<std::string> manifest_lines(const RunManifest& manifest);

}  // namespace nvodmr::io
