#pragma once

#include <string>

namespace evohealth {

// First-stage (ancient) economy. Defaults are the reference calibration.
struct Stage1Params {
    double phi = 1.0;    // health-production coefficient
    double alpha = 0.5;  // labor output elasticity
    double gamma = 0.4;  // weight on children in utility
    double p = 0.2;      // child-rearing cost as a fraction of output
    double c_hat = 0.5;  // survival consumption
    double mu = 0.05;    // ratchet M(d) = mu + kappa * ln(1 + max(d, 0))
    double kappa = 0.5;
    double y_hat = 0.0;  // c_hat / (1 - gamma), filled in by validate_stage1
};

// Second-stage economy: Cobb-Douglas composite of health and labor.
struct Stage2Params {
    double phi = 1.0;
    double alpha = 0.5;
    double beta = 0.5;  // health share inside the composite input
    double gamma = 0.4;
    double p = 0.2;
    double lambda_fixed = 1.0;
    // child mortality delta(a) = clamp(delta0 + delta1 * a, delta_min, delta_max)
    double delta0 = 0.3;
    double delta1 = 0.4;
    double delta_min = 0.05;
    double delta_max = 0.95;
};

// Experimental stage: health multiplies the utility of consumption.
struct Stage3Params {
    double A = 7.389;
    double alpha = 0.5;
    double gamma = 0.5;
    double p = 0.25;
};

/// Checks every range invariant and returns the record with y_hat cached.
/// Throws RangeError naming the first offending field (declaration order).
Stage1Params validate_stage1(Stage1Params raw);
Stage2Params validate_stage2(Stage2Params raw);
Stage3Params validate_stage3(Stage3Params raw);

// Shortest round-trip "key=value;..." rendering, used for metadata echoes and hashing.
std::string describe(const Stage1Params& p);
std::string describe(const Stage2Params& p);
std::string describe(const Stage3Params& p);

}  // namespace evohealth
