#include "evohealth/config_file.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fstream>
#include <functional>
#include <utility>

#include "evohealth/csv_io.hpp"
#include "evohealth/errors.hpp"

namespace evohealth {
namespace {

std::string unquote(std::string v) {
    // strip trailing "# comment" on value lines
    bool in_quotes = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == '"') in_quotes = !in_quotes;
        if (v[i] == '#' && !in_quotes) {
            v.erase(i);
            break;
        }
    }
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.pop_back();
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"') v = v.substr(1, v.size() - 2);
    return v;
}

template <typename Record>
using Setter = std::function<void(Record&, const std::string&)>;

template <typename Record>
Setter<Record> number(double Record::*field) {
    return [field](Record& r, const std::string& v) { r.*field = parse_double(v, "value"); };
}

template <typename Record>
Record apply(const ConfigTable& table, Record base, const std::map<std::string, Setter<Record>>& keys,
             const char* table_name) {
    for (const auto& [key, value] : table) {
        auto it = keys.find(key);
        if (it == keys.end()) {
            throw ConfigError(std::string("unknown key '") + key + "' in table [" + table_name + "]");
        }
        try {
            it->second(base, value);
        } catch (const ConfigError& e) {
            throw ConfigError(std::string("[") + table_name + "] " + key + ": " + e.what());
        }
    }
    return base;
}

}  // namespace

const ConfigTable* ConfigFile::find(const std::string& name) const {
    auto it = tables.find(name);
    return it == tables.end() ? nullptr : &it->second;
}

ConfigFile parse_config(std::istream& in) {
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::ini_parser::read_ini(in, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw ConfigError(std::string("malformed configuration: ") + e.what());
    }
    ConfigFile file;
    for (const auto& [section, body] : tree) {
        if (!body.data().empty()) {
            throw ConfigError("key '" + section + "' appears outside any [table]");
        }
        ConfigTable& table = file.tables[section];
        for (const auto& [key, node] : body) {
            table[key] = unquote(node.get_value<std::string>());
        }
    }
    return file;
}

ConfigFile load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open configuration file " + path.string());
    return parse_config(in);
}

Stage1Params apply_table(const ConfigTable& table, Stage1Params base) {
    static const std::map<std::string, Setter<Stage1Params>> keys = {
        {"phi", number(&Stage1Params::phi)},     {"alpha", number(&Stage1Params::alpha)},
        {"gamma", number(&Stage1Params::gamma)}, {"p", number(&Stage1Params::p)},
        {"c_hat", number(&Stage1Params::c_hat)}, {"mu", number(&Stage1Params::mu)},
        {"kappa", number(&Stage1Params::kappa)},
    };
    return apply(table, base, keys, "stage1");
}

Stage2Params apply_table(const ConfigTable& table, Stage2Params base) {
    static const std::map<std::string, Setter<Stage2Params>> keys = {
        {"phi", number(&Stage2Params::phi)},
        {"alpha", number(&Stage2Params::alpha)},
        {"beta", number(&Stage2Params::beta)},
        {"gamma", number(&Stage2Params::gamma)},
        {"p", number(&Stage2Params::p)},
        {"lambda_fixed", number(&Stage2Params::lambda_fixed)},
        {"delta0", number(&Stage2Params::delta0)},
        {"delta1", number(&Stage2Params::delta1)},
        {"delta_min", number(&Stage2Params::delta_min)},
        {"delta_max", number(&Stage2Params::delta_max)},
    };
    return apply(table, base, keys, "stage2");
}

Stage3Params apply_table(const ConfigTable& table, Stage3Params base) {
    static const std::map<std::string, Setter<Stage3Params>> keys = {
        {"A", number(&Stage3Params::A)},
        {"alpha", number(&Stage3Params::alpha)},
        {"gamma", number(&Stage3Params::gamma)},
        {"p", number(&Stage3Params::p)},
    };
    return apply(table, base, keys, "stage3");
}

ShockProcessConfig apply_table(const ConfigTable& table, ShockProcessConfig base) {
    static const std::map<std::string, Setter<ShockProcessConfig>> keys = {
        {"kind", [](ShockProcessConfig& c, const std::string& v) { c.kind = parse_shock_kind(v); }},
        {"a_const", number(&ShockProcessConfig::a_const)},
        {"a_lo", number(&ShockProcessConfig::a_lo)},
        {"a_hi", number(&ShockProcessConfig::a_hi)},
        {"rho", number(&ShockProcessConfig::rho)},
        {"a_bar", number(&ShockProcessConfig::a_bar)},
        {"sigma", number(&ShockProcessConfig::sigma)},
        {"seed",
         [](ShockProcessConfig& c, const std::string& v) {
             try {
                 if (v.empty() || v.front() < '0' || v.front() > '9') throw std::invalid_argument(v);
                 std::size_t used = 0;
                 c.seed = std::stoull(v, &used);
                 if (used != v.size()) throw std::invalid_argument(v);
             } catch (const std::exception&) {
                 throw ConfigError("seed must be an unsigned 64-bit integer, got '" + v + "'");
             }
         }},
    };
    return apply(table, base, keys, "shocks");
}

}  // namespace evohealth
