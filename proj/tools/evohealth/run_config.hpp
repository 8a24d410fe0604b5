#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evohealth/params.hpp"
#include "evohealth/shocks.hpp"

namespace evohealth::cli {

// Environment variable naming a default configuration file.
inline constexpr const char* kConfigEnvVar = "EVOHEALTH_CONFIG";

struct RunConfig {
    std::string stage = "stage1";
    Stage1Params stage1;
    Stage2Params stage2;
    Stage3Params stage3;
    // Mild iid adversity and a population start below the baseline threshold, so the
    // default stage-1 run shows the ratchet instead of collapsing in period 0.
    ShockProcessConfig shocks{ShockKind::iid_uniform, 0.0, 0.0, 0.1};
    std::size_t T = 100;
    double L0 = 0.2;
    double lambda0 = 1.0;
    // Evaluation point for solve and sweep.
    double a = 0.0;
    double lambda = 1.0;
    double L = 1.0;
    std::optional<double> delta;  // stage 2; defaults to mortality(a)
    std::string out;              // output path, empty means stdout
    std::string path_in;          // replay an adversity CSV instead of generating one
    std::string path_out;         // also write the generated adversity path
};

using Overrides = std::vector<std::pair<std::string, std::string>>;

// Built-in defaults, then the file (explicit path, else $EVOHEALTH_CONFIG if set),
// then command-line overrides. Unknown tables or keys throw ConfigError.
RunConfig load_run_config(const std::optional<std::filesystem::path>& path, const Overrides& overrides);

// A single `key=value` override routed to [run], [shocks] or the active stage table.
void apply_override(RunConfig& cfg, const std::string& key, const std::string& value);

// Turns "--key value" / "--key=value" leftovers into overrides.
Overrides parse_override_args(const std::vector<std::string>& args);

// Normalizes "1", "stage1" to "stage1"; throws ConfigError on anything else.
std::string normalize_stage(const std::string& name);

}  // namespace evohealth::cli
