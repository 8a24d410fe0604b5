#include "evohealth/run_config.hpp"

#include <cstdlib>
#include <set>

#include "evohealth/config_file.hpp"
#include "evohealth/csv_io.hpp"
#include "evohealth/errors.hpp"

namespace evohealth::cli {
namespace {

const std::set<std::string> kShockKeys = {"kind", "a_const", "a_lo", "a_hi", "rho", "a_bar", "sigma", "seed"};

std::size_t parse_count(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        if (value.empty() || value.front() == '-') throw std::invalid_argument(value);
        auto v = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw ConfigError(key + " must be a non-negative integer, got '" + value + "'");
    }
}

bool apply_run_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "stage") {
        cfg.stage = normalize_stage(value);
    } else if (key == "T") {
        cfg.T = parse_count(key, value);
    } else if (key == "L0") {
        cfg.L0 = parse_double(value, key);
    } else if (key == "lambda0") {
        cfg.lambda0 = parse_double(value, key);
    } else if (key == "a") {
        cfg.a = parse_double(value, key);
    } else if (key == "lambda") {
        cfg.lambda = parse_double(value, key);
    } else if (key == "L") {
        cfg.L = parse_double(value, key);
    } else if (key == "delta") {
        cfg.delta = parse_double(value, key);
    } else if (key == "out") {
        cfg.out = value;
    } else if (key == "path_in") {
        cfg.path_in = value;
    } else if (key == "path_out") {
        cfg.path_out = value;
    } else {
        return false;
    }
    return true;
}

}  // namespace

std::string normalize_stage(const std::string& name) {
    if (name == "stage1" || name == "1") return "stage1";
    if (name == "stage2" || name == "2") return "stage2";
    if (name == "stage3" || name == "3") return "stage3";
    throw ConfigError("unknown stage '" + name + "' (expected stage1, stage2 or stage3)");
}

void apply_override(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (apply_run_key(cfg, key, value)) return;
    if (kShockKeys.count(key)) {
        cfg.shocks = apply_table(ConfigTable{{key, value}}, cfg.shocks);
        return;
    }
    const ConfigTable one{{key, value}};
    if (cfg.stage == "stage1") {
        cfg.stage1 = apply_table(one, cfg.stage1);
    } else if (cfg.stage == "stage2") {
        cfg.stage2 = apply_table(one, cfg.stage2);
    } else {
        cfg.stage3 = apply_table(one, cfg.stage3);
    }
}

RunConfig load_run_config(const std::optional<std::filesystem::path>& path, const Overrides& overrides) {
    RunConfig cfg;
    std::optional<std::filesystem::path> source = path;
    if (!source) {
        if (const char* env = std::getenv(kConfigEnvVar); env != nullptr && *env != '\0') source = env;
    }
    if (source) {
        const ConfigFile file = load_config_file(*source);
        for (const auto& [name, table] : file.tables) {
            if (name == "stage1") {
                cfg.stage1 = apply_table(table, cfg.stage1);
            } else if (name == "stage2") {
                cfg.stage2 = apply_table(table, cfg.stage2);
            } else if (name == "stage3") {
                cfg.stage3 = apply_table(table, cfg.stage3);
            } else if (name == "shocks") {
                cfg.shocks = apply_table(table, cfg.shocks);
            } else if (name == "run") {
                for (const auto& [key, value] : table) {
                    if (!apply_run_key(cfg, key, value)) {
                        throw ConfigError("unknown key '" + key + "' in table [run]");
                    }
                }
            } else {
                throw ConfigError("unknown table [" + name + "]");
            }
        }
    }
    // The stage override must land before stage-specific keys are routed.
    for (const auto& [key, value] : overrides) {
        if (key == "stage") apply_override(cfg, key, value);
    }
    for (const auto& [key, value] : overrides) {
        if (key != "stage") apply_override(cfg, key, value);
    }
    return cfg;
}

Overrides parse_override_args(const std::vector<std::string>& args) {
    Overrides out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& arg = args[i];
        if (arg.rfind("--", 0) != 0 || arg.size() < 3) {
            throw ConfigError("unexpected argument '" + arg + "'");
        }
        std::string body = arg.substr(2);
        auto eq = body.find('=');
        if (eq != std::string::npos) {
            out.emplace_back(body.substr(0, eq), body.substr(eq + 1));
            continue;
        }
        if (i + 1 >= args.size()) throw ConfigError("option '" + arg + "' needs a value (write " + arg +
                                            "=VALUE when the stage argument is omitted)");
        out.emplace_back(body, args[++i]);
    }
    return out;
}

}  // namespace evohealth::cli
