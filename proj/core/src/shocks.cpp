#include "evohealth/shocks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "evohealth/csv_io.hpp"
#include "evohealth/errors.hpp"

namespace evohealth {
namespace {

class PortableSource {
public:
    explicit PortableSource(std::uint64_t seed) : engine_(seed) {}

    // [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double normal() {
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::mt19937_64 engine_;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw ConfigError(message);
}

}  // namespace

std::string to_string(ShockKind kind) {
    switch (kind) {
        case ShockKind::constant: return "constant";
        case ShockKind::iid_uniform: return "iid-uniform";
        case ShockKind::ar1: return "ar1";
    }
    return "unknown";
}

ShockKind parse_shock_kind(std::string_view text) {
    if (text == "constant") return ShockKind::constant;
    if (text == "iid-uniform" || text == "iid_uniform") return ShockKind::iid_uniform;
    if (text == "ar1") return ShockKind::ar1;
    throw ConfigError("unknown shock kind '" + std::string(text) +
                      "' (expected constant, iid-uniform or ar1)");
}

void validate_shock_config(const ShockProcessConfig& cfg) {
    switch (cfg.kind) {
        case ShockKind::constant:
            require(std::isfinite(cfg.a_const), "a_const must be finite");
            break;
        case ShockKind::iid_uniform:
            require(std::isfinite(cfg.a_lo) && std::isfinite(cfg.a_hi), "a_lo/a_hi must be finite");
            require(cfg.a_lo >= 0.0, "a_lo must be >= 0");
            require(cfg.a_lo <= cfg.a_hi, "a_lo must not exceed a_hi");
            break;
        case ShockKind::ar1:
            require(std::isfinite(cfg.rho) && cfg.rho >= 0.0 && cfg.rho < 1.0, "rho must lie in [0,1)");
            require(std::isfinite(cfg.a_bar), "a_bar must be finite");
            require(std::isfinite(cfg.sigma) && cfg.sigma >= 0.0, "sigma must be >= 0");
            break;
    }
}

AdversityPath generate_path(const ShockProcessConfig& cfg, std::size_t T) {
    if (T < 1) throw ConfigError("path horizon T must be >= 1");
    validate_shock_config(cfg);

    AdversityPath path;
    path.seed = cfg.seed;
    path.config = cfg;
    path.values.reserve(T + 1);

    PortableSource source(cfg.seed);
    switch (cfg.kind) {
        case ShockKind::constant:
            path.values.assign(T + 1, std::max(cfg.a_const, 0.0));
            break;
        case ShockKind::iid_uniform:
            for (std::size_t t = 0; t <= T; ++t) {
                path.values.push_back(cfg.a_lo + (cfg.a_hi - cfg.a_lo) * source.uniform());
            }
            break;
        case ShockKind::ar1: {
            double a = std::max(cfg.a_bar, 0.0);
            path.values.push_back(a);
            for (std::size_t t = 1; t <= T; ++t) {
                a = cfg.a_bar + cfg.rho * (a - cfg.a_bar) + cfg.sigma * source.normal();
                a = std::max(a, 0.0);
                path.values.push_back(a);
            }
            break;
        }
    }
    return path;
}

void write_path_csv(std::ostream& out, const AdversityPath& path) {
    out << "# kind=" << to_string(path.config.kind) << " seed=" << path.seed << " rng=" << kRngName
        << '\n';
    out << "a\n";
    for (double v : path.values) out << format_double(v) << '\n';
}

AdversityPath read_path_csv(std::istream& in) {
    CsvTable table = read_csv(in);
    AdversityPath path;
    for (const auto& meta : table.metadata) {
        std::istringstream fields(meta);
        std::string field;
        while (fields >> field) {
            auto eq = field.find('=');
            if (eq == std::string::npos) continue;
            auto key = field.substr(0, eq);
            auto value = field.substr(eq + 1);
            if (key == "kind") {
                path.config.kind = parse_shock_kind(value);
            } else if (key == "seed") {
                try {
                    path.seed = std::stoull(value);
                } catch (const std::exception&) {
                    throw ConfigError("invalid seed in path metadata: " + value);
                }
                path.config.seed = path.seed;
            }
        }
    }
    if (table.header.size() != 1 || table.header.front() != "a") {
        throw ConfigError("adversity CSV must have a single column named 'a'");
    }
    for (const auto& row : table.rows) {
        if (row.size() != 1) throw ConfigError("adversity CSV rows must have exactly one value");
        double v = parse_double(row.front(), "adversity value");
        if (!(v >= 0.0) || !std::isfinite(v)) throw ConfigError("adversity values must be finite and >= 0");
        path.values.push_back(v);
    }
    if (path.values.size() < 2) throw ConfigError("adversity CSV needs at least two values (T >= 1)");
    return path;
}

}  // namespace evohealth
