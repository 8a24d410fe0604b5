#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>

#include "evohealth/params.hpp"
#include "evohealth/shocks.hpp"

namespace evohealth {

// Key-value configuration split into named tables:
//
//   [stage1]
//   alpha = 0.5
//   [shocks]
//   kind = "iid-uniform"   # comments start with '#' or ';'
//
// Values are scalars; surrounding double quotes are stripped.
using ConfigTable = std::map<std::string, std::string>;

struct ConfigFile {
    std::map<std::string, ConfigTable> tables;

    const ConfigTable* find(const std::string& name) const;
};

ConfigFile parse_config(std::istream& in);
ConfigFile load_config_file(const std::filesystem::path& path);

// Overlay a table onto a parameter record. Unknown keys and unparsable values throw
// ConfigError; range checks are left to validate_stage*.
Stage1Params apply_table(const ConfigTable& table, Stage1Params base);
Stage2Params apply_table(const ConfigTable& table, Stage2Params base);
Stage3Params apply_table(const ConfigTable& table, Stage3Params base);
ShockProcessConfig apply_table(const ConfigTable& table, ShockProcessConfig base);

}  // namespace evohealth
