#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace evohealth {

// Identifier of the generator behind every stochastic path, echoed in output metadata.
inline constexpr std::string_view kRngName = "mt19937_64";

enum class ShockKind { constant, iid_uniform, ar1 };

std::string to_string(ShockKind kind);
ShockKind parse_shock_kind(std::string_view text);

struct ShockProcessConfig {
    ShockKind kind = ShockKind::constant;
    double a_const = 0.0;
    // iid-uniform support [a_lo, a_hi]
    double a_lo = 0.0;
    double a_hi = 0.0;
    // ar1: a_t = a_bar + rho * (a_{t-1} - a_bar) + sigma * eps_t, eps_t ~ N(0,1), floored at 0
    double rho = 0.0;
    double a_bar = 0.0;
    double sigma = 0.0;
    std::uint64_t seed = 0;
};

// Realized adversity a_0..a_T.
struct AdversityPath {
    std::vector<double> values;
    std::uint64_t seed = 0;
    ShockProcessConfig config;

    std::size_t horizon() const { return values.empty() ? 0 : values.size() - 1; }
};

// Throws ConfigError for unordered or non-finite bounds, rho outside [0,1), sigma < 0.
void validate_shock_config(const ShockProcessConfig& cfg);

/// Generates T + 1 adversity values. The result is a pure function of (cfg, T):
/// uniforms come from the top 53 bits of mt19937_64 and normals from Box-Muller,
/// so paths are bit-identical across standard libraries.
AdversityPath generate_path(const ShockProcessConfig& cfg, std::size_t T);

// Single-column CSV: one "# kind=... seed=... rng=..." line, a header "a", then values.
void write_path_csv(std::ostream& out, const AdversityPath& path);
AdversityPath read_path_csv(std::istream& in);

}  // namespace evohealth
