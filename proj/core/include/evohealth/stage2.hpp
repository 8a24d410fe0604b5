#pragma once

#include "evohealth/params.hpp"

namespace evohealth {

struct Stage2Policy {
    double x_star = 0.0;
    double n_star = 0.0;
    double c_star = 0.0;
    double y = 0.0;
};

struct Stage2Steady {
    double L_tilde = 0.0;        // population where fertility equals child mortality
    double L_tilde_prime = 0.0;  // population maximizing the increment (n*(L) - delta) * L
    double stability_factor = 0.0;  // dL_{t+1}/dL_t at L_tilde = 1 - delta*(1-alpha)
    bool stable = false;
};

// [(phi*lambda*x)^beta (1-x)^(1-beta)]^alpha * L^(alpha-1)
double output_per_capita2(const Stage2Params& p, double x, double L);

// (alpha*beta + 1 - gamma) / (alpha + 1 - gamma); independent of L and phi.
double optimal_health_share2(const Stage2Params& p);

// Utility-maximizing (x, n, c): n = gamma*y/p, c = p*n*(1-gamma)/gamma.
Stage2Policy optimal_policy2(const Stage2Params& p, double L);

// clamp(delta0 + delta1*a, delta_min, delta_max)
double mortality(const Stage2Params& p, double a);

// (1 + n*(L) - delta) * L
double step_population2(const Stage2Params& p, double L, double delta);

/// Steady state of the mortality-adjusted population map for a fixed delta.
/// L_tilde comes from setting n*(L) = delta in closed form; L_tilde_prime is found
/// by golden-section search on (n*(L) - delta) * L over (0, L_tilde).
Stage2Steady steady_state(const Stage2Params& p, double delta);

}  // namespace evohealth
