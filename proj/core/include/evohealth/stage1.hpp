#pragma once

#include <string>

#include "evohealth/params.hpp"

namespace evohealth {

enum class FertilityRegime { survival_binding, interior, extinction };

std::string to_string(FertilityRegime regime);

struct FertilityChoice {
    double n = 0.0;
    FertilityRegime regime = FertilityRegime::extinction;
};

struct Stage1State {
    double lambda = 1.0;
    double L = 1.0;
    double a_prev = 0.0;
    double x_prev = 0.0;
};

struct Stage1Policy {
    double x_star = 0.0;
    double y_star = 0.0;
    double n_star = 0.0;
    FertilityRegime regime = FertilityRegime::extinction;
};

// (phi*lambda*x - a) * (1-x)^alpha * L^(alpha-1). Negative when x < a/(phi*lambda).
double output_per_capita(const Stage1Params& p, double lambda, double a, double L, double x);

// Output-maximizing share of labor in health production:
// x* = (phi*lambda + alpha*a) / ((1+alpha)*phi*lambda), the root of
// phi*lambda*(1-x) = alpha*(phi*lambda*x - a). Requires 0 <= a < phi*lambda.
double optimal_labor_allocation(const Stage1Params& p, double lambda, double a);

// Output at x*, in closed form:
// (alpha/(phi*lambda))^alpha * ((phi*lambda - a)/(1+alpha))^(1+alpha) * L^(alpha-1).
double optimal_output(const Stage1Params& p, double lambda, double a, double L);

// Children per adult under the survival constraint. Interior gamma/p at or above
// y_hat, (1 - c_hat/y)/p between c_hat and y_hat, zero (extinction) at or below c_hat.
FertilityChoice fertility(const Stage1Params& p, double y);

/// Population at which fertility at optimal output equals one:
///   g = { c_hat / [(1-p) (alpha/(phi*lambda))^alpha ((phi*lambda-a)/(1+alpha))^(1+alpha)] }^(1/(alpha-1))
/// Above g the population shrinks, below it grows. Throws NoThresholdError when
/// p > gamma, since fertility then never reaches one.
double population_threshold_g(const Stage1Params& p, double lambda, double a);

// M(d) = mu + kappa * ln(1 + max(d, 0)).
double ratchet_increment(const Stage1Params& p, double d);

// lambda_{t+1}: unchanged unless adversity worsened (a_t > a_prev), in which case
// it rises by M(x_t - x_prev).
double update_health_productivity(const Stage1Params& p, double lambda_t, double a_t, double a_prev,
                                  double x_t, double x_prev);

double step_population(double n_star, double L);

// x*, y* and n* for one period.
Stage1Policy solve_stage1(const Stage1Params& p, double lambda, double a, double L);

}  // namespace evohealth
