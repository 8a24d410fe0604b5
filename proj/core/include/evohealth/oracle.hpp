#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "evohealth/params.hpp"

namespace evohealth {

// Closed form vs brute force. `pass` is exactly abs_error <= bound.
struct OracleReport {
    std::string target;
    double closed_value = 0.0;
    double brute_value = 0.0;
    double abs_error = 0.0;
    double resolution = 0.0;  // grid step, or bisection tolerance
    double bound = 0.0;
    bool pass = false;
    std::string note;
};

OracleReport make_report(std::string target, double closed, double brute, double resolution,
                         double bound, std::string note = {});

// The brute-force routines below evaluate output and utility from their primitive
// definitions and never call the stage policy functions for the brute side.

/// Exhaustive search of output per capita over a uniform grid on (a/(phi*lambda), 1).
/// Default bound is two grid steps.
OracleReport grid_argmax_stage1(const Stage1Params& p, double lambda, double a, double L,
                                std::size_t grid_points, std::optional<double> bound = {});

/// Joint grid over (x, n) with c = y(x, L) - p*n > 0 maximizing
/// (1-gamma) ln c + (1-gamma) ln x + gamma ln n. Returns reports for x*, n* and c*.
std::vector<OracleReport> grid_argmax_utility2(const Stage2Params& p, double L,
                                               std::size_t grid_points,
                                               std::optional<double> bound = {});

/// Grid over x with (c, n) set by the c/n first-order conditions under the binding
/// budget. The brute value is the best interior grid local maximum of utility; the
/// note records whether the global grid maximum sits at the x -> 0 corner instead.
/// With no FOC root the report compares root counts (solver 0 vs grid local maxima).
OracleReport grid_argmax_utility3(const Stage3Params& p, std::size_t grid_points,
                                  std::optional<double> bound = {});

/// Bisection in log L on fertility(max_x y(x, L)) - 1, starting from [1e-9, 1] and
/// widening either end until a sign change appears. Inner maximization is golden-section search.
/// Default bound is a relative error of 1e-6. Throws NoThresholdError if no crossing.
OracleReport bisect_threshold(const Stage1Params& p, double lambda, double a,
                              std::optional<double> rel_bound = {});

// Fertility at the brute-force optimal output, shared with the threshold sign checks.
double brute_fertility_stage1(const Stage1Params& p, double lambda, double a, double L);

enum class OracleStage { stage1, stage2, stage3, all };

OracleStage parse_oracle_stage(const std::string& name);

// Full oracle suite on the reference fixtures. `tolerance` overrides every bound.
std::vector<OracleReport> run_oracle_suite(OracleStage stage, std::optional<double> tolerance = {});

void write_reports_csv(std::ostream& out, const std::vector<OracleReport>& reports);

}  // namespace evohealth
