#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uavcic/montecarlo.hpp"

namespace uavcic {

inline constexpr const char* kToolVersion = "1.0.0";

// Loads a flat JSON object of scenario keys. Missing keys keep their
// defaults; unknown keys are a hard error; malformed values and range
// violations raise ConfigError naming the key. An empty (or all-whitespace)
// file yields the full default configuration.
ScenarioConfig parse_config(const std::string& path);
ScenarioConfig parse_config_text(const std::string& text);

std::string config_to_json(const ScenarioConfig& cfg);

struct SweepSpec {
    std::string variable;
    std::vector<double> values;
};

// Reproducibility record written next to every sweep CSV. Re-running from the
// manifest regenerates the CSV byte-identically (the timestamp only describes
// when the recorded run happened).
struct RunManifest {
    std::string tool_version;
    std::string timestamp_utc;
    std::uint64_t seed = 0;
    int n_trials = 0;
    std::string output_path;
    ScenarioConfig config;
    SweepSpec sweep;
};

std::string manifest_path_for(const std::string& csv_path);
void write_manifest(const RunManifest& manifest, const std::string& path);
RunManifest read_manifest(const std::string& path);

}  // namespace uavcic
