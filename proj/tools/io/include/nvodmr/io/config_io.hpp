#pragma once

#include "nvodmr/config.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace nvodmr::io {

// Malformed, unreadable, or missing configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kPresetDirEnv = "NVODMR_PRESET_DIR";

// $NVODMR_PRESET_DIR if set, otherwise the directory compiled in at build time.
std::filesystem::path preset_directory();

// Parses a configuration object. Absent keys take library defaults; unknown
// keys are rejected. The histogram defaults to D +- 500 MHz at 1 MHz bins.
SimulationConfig config_from_json(const nlohmann::json& j);

// Canonical form: every field spelled out, keys sorted.
nlohmann::json config_to_json(const SimulationConfig& config);

// `source` is a JSON file, a spectrum CSV carrying a "# config:" manifest
// line, or the name of a preset in preset_directory().
SimulationConfig load_config(const std::string& source);

}  // namespace nvodmr::io
