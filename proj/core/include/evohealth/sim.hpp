#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "evohealth/params.hpp"
#include "evohealth/shocks.hpp"

namespace evohealth {

// Position of the population relative to a target level (g in stage 1, L_tilde in stage 2).
// scenario-1: above target, population shrinks; scenario-2: below target, it grows.
enum class Scenario { scenario_1, scenario_2, boundary, undefined };

std::string to_string(Scenario s);

// |L - g| / g <= 1e-12 counts as the boundary.
Scenario classify_regime(double L, double g);

enum class Termination { completed, extinction, adversity_exceeds_technology };

std::string to_string(Termination t);

struct SimRecord {
    std::size_t t = 0;
    double a = 0.0;
    double lambda = 0.0;
    double x = 0.0;
    double y = 0.0;
    double n = 0.0;
    double L = 0.0;
    std::string regime;  // fertility regime (stage 1) or scenario label (stage 2)
    Scenario scenario = Scenario::undefined;
    double g = std::numeric_limits<double>::quiet_NaN();        // stage 1
    double delta = std::numeric_limits<double>::quiet_NaN();    // stage 2
    double L_tilde = std::numeric_limits<double>::quiet_NaN();  // stage 2
};

struct SimSeries {
    int stage = 1;
    std::vector<SimRecord> records;
    std::string params_echo;
    ShockKind kind = ShockKind::constant;
    std::uint64_t seed = 0;
    Termination termination = Termination::completed;
};

/// Stage-1 trajectory over a_0..a_T. Each period solves x*, y*, n*, labels the regime
/// against the threshold g(lambda_t, a_t), then advances lambda through the ratchet
/// (lags seeded with a_0, x_0) and L through n* L. Stops early on extinction or when
/// a_t >= phi * lambda_t. Throws DomainError if period 0 is already infeasible.
SimSeries run_stage1(const Stage1Params& p, const AdversityPath& path, double L0, double lambda0);

/// Stage-2 trajectory: delta_t = mortality(a_t), L_{t+1} = (1 + n*(L_t) - delta_t) L_t.
/// Records carry the current steady-state target L_tilde(delta_t).
SimSeries run_stage2(const Stage2Params& p, const AdversityPath& path, double L0);

// Descriptive statistics for the stage-1 oscillation claims.
struct SimSummary {
    double lambda_growth = 0.0;  // lambda_last / lambda_first
    std::size_t lambda_increases = 0;
    std::size_t population_up_moves = 0;
    std::size_t population_down_moves = 0;
    std::size_t population_direction_changes = 0;
};

SimSummary summarize(const SimSeries& series);

/// CSV with '#'-prefixed metadata (stage, rng, seed, process, params hash, termination)
/// followed by the header t,a,lambda,x,y,n,L,regime and stage-specific extras
/// (stage 1: scenario,g; stage 2: delta,L_tilde).
void write_series_csv(std::ostream& out, const SimSeries& series);

}  // namespace evohealth
