#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evohealth/params.hpp"

namespace evohealth {

struct RootCandidate {
    double x = 0.0;
    double utility = 0.0;
    double residual = 0.0;
};

struct Stage3Solution {
    double x_star = 0.0;
    double n_star = 0.0;
    double c_star = 0.0;
    double y = 0.0;
    double utility_value = 0.0;
    std::vector<RootCandidate> root_candidates;  // ascending in x
    // n >= 1 is assumed by the model but not imposed; flagged when violated.
    bool fertility_below_one = false;
    // Limit of utility as x -> 0+ (gamma * ln(1/p)); when it exceeds utility_value the
    // supremum sits at the corner rather than at any stationary point.
    double corner_utility = 0.0;
    bool corner_dominates = false;
};

// A * x^(1-alpha) * (1-x)^alpha on (0,1).
double production3(const Stage3Params& p, double x);

// G(x) = ln[A ((1-x)/x)^alpha x^2 / (x + gamma/(1-gamma))] - alpha/(1-x) + 1.
// Equals d(utility)/dx / (1-gamma) along the budget with c and n at their optimum.
double foc_residual3(const Stage3Params& p, double x);

// The same residual written in terms of fertility n (with x eliminated through
// n = 1/(p((1-gamma)x/gamma + 1))); valid for gamma < p*n < 1.
double foc_residual3_fertility_form(const Stage3Params& p, double n);

// n = 1 / (p * ((1-gamma)/gamma * x + 1)); strictly decreasing in x.
double fertility3(const Stage3Params& p, double x);

// c = y * (1-gamma)x / ((1-gamma)x + gamma), the consumption implied by the c/n FOCs.
double consumption3(const Stage3Params& p, double x);

// (1-gamma) * x * ln c + gamma * ln n with c, n from the FOCs at x.
double utility3(const Stage3Params& p, double x);

inline constexpr int kStage3ScanBrackets = 10000;
inline constexpr double kStage3ScanEdge = 1e-6;

/// Scans G on (1e-6, 1-1e-6) over 10^4 brackets, refines every sign change by
/// bisection to machine resolution, and returns the root with the highest utility.
/// Throws NoRootError (carrying max G and its location) when G never changes sign.
Stage3Solution solve_health_investment3(const Stage3Params& p);

enum class Stage3Param { A, alpha, gamma, p };

std::string to_string(Stage3Param which);
Stage3Param parse_stage3_param(const std::string& name);
double& param_ref(Stage3Params& p, Stage3Param which);

// Which FOC root the comparative statics follow.
enum class RootBranch { utility_max, lowest };

/// Central difference of x* with respect to one parameter. Throws NoRootError if p itself
/// has no FOC root and PerturbationError if the root count differs at p - h or p + h
/// (a stencil point with no root included).
double comparative_statics3(const Stage3Params& p, Stage3Param which, double h,
                            RootBranch branch = RootBranch::utility_max);

// Four-point estimate of d^2 x* / (d alpha d gamma).
double mixed_partial3(const Stage3Params& p, double h_alpha, double h_gamma,
                      RootBranch branch = RootBranch::utility_max);

struct SignMapEntry {
    double value = 0.0;
    std::optional<double> x_star;
    std::optional<double> derivative;
    std::string status;  // "ok", "no-root", "root-count-changes", "out-of-range"
};

struct SignMap {
    Stage3Param swept = Stage3Param::gamma;
    Stage3Param wrt = Stage3Param::gamma;
    std::vector<SignMapEntry> entries;
    // Maximal runs of consecutive grid values with a strictly positive derivative.
    std::vector<std::pair<double, double>> positive_intervals;
};

// Sweeps `swept` over [from, to] in `steps` points and records d x*/d `wrt` at each.
SignMap derivative_sign_map(const Stage3Params& base, Stage3Param swept, double from, double to,
                            int steps, Stage3Param wrt, double h,
                            RootBranch branch = RootBranch::utility_max);

}  // namespace evohealth
