#include "evohealth/stage1.hpp"

#include <algorithm>
#include <cmath>

#include "evohealth/csv_io.hpp"
#include "evohealth/errors.hpp"

namespace evohealth {
namespace {

void check_technology(const Stage1Params& p, double lambda, double a) {
    if (!(lambda > 0.0)) throw DomainError("lambda must be > 0, got " + format_double(lambda));
    if (!(a >= 0.0)) throw DomainError("adversity must be >= 0, got " + format_double(a));
    if (!(a < p.phi * lambda)) {
        throw DomainError("adversity a=" + format_double(a) + " >= phi*lambda=" +
                          format_double(p.phi * lambda) + ": no allocation yields positive output");
    }
}

// (alpha/(phi*lambda))^alpha * ((phi*lambda - a)/(1+alpha))^(1+alpha)
double output_scale(const Stage1Params& p, double lambda, double a) {
    const double tech = p.phi * lambda;
    return std::pow(p.alpha / tech, p.alpha) *
           std::pow((tech - a) / (1.0 + p.alpha), 1.0 + p.alpha);
}

}  // namespace

std::string to_string(FertilityRegime regime) {
    switch (regime) {
        case FertilityRegime::survival_binding: return "survival-binding";
        case FertilityRegime::interior: return "interior";
        case FertilityRegime::extinction: return "extinction";
    }
    return "unknown";
}

double output_per_capita(const Stage1Params& p, double lambda, double a, double L, double x) {
    if (!(x >= 0.0 && x < 1.0)) throw DomainError("allocation x must lie in [0,1), got " + format_double(x));
    if (!(L > 0.0)) throw DomainError("population L must be > 0, got " + format_double(L));
    if (!(lambda > 0.0)) throw DomainError("lambda must be > 0, got " + format_double(lambda));
    return (p.phi * lambda * x - a) * std::pow(1.0 - x, p.alpha) * std::pow(L, p.alpha - 1.0);
}

double optimal_labor_allocation(const Stage1Params& p, double lambda, double a) {
    check_technology(p, lambda, a);
    const double tech = p.phi * lambda;
    return (tech + p.alpha * a) / ((1.0 + p.alpha) * tech);
}

double optimal_output(const Stage1Params& p, double lambda, double a, double L) {
    check_technology(p, lambda, a);
    if (!(L > 0.0)) throw DomainError("population L must be > 0, got " + format_double(L));
    return output_scale(p, lambda, a) * std::pow(L, p.alpha - 1.0);
}

FertilityChoice fertility(const Stage1Params& p, double y) {
    if (!(y > 0.0)) throw DomainError("output y must be > 0, got " + format_double(y));
    const double y_hat = p.c_hat / (1.0 - p.gamma);
    if (y >= y_hat) return {p.gamma / p.p, FertilityRegime::interior};
    if (y <= p.c_hat) return {0.0, FertilityRegime::extinction};
    return {(1.0 - p.c_hat / y) / p.p, FertilityRegime::survival_binding};
}

double population_threshold_g(const Stage1Params& p, double lambda, double a) {
    check_technology(p, lambda, a);
    if (p.p > p.gamma) {
        throw NoThresholdError("fertility is at most gamma/p = " + format_double(p.gamma / p.p) +
                               " < 1 for every population level");
    }
    const double ratio = p.c_hat / ((1.0 - p.p) * output_scale(p, lambda, a));
    return std::pow(ratio, 1.0 / (p.alpha - 1.0));
}

double ratchet_increment(const Stage1Params& p, double d) {
    return p.mu + p.kappa * std::log1p(std::max(d, 0.0));
}

double update_health_productivity(const Stage1Params& p, double lambda_t, double a_t, double a_prev,
                                  double x_t, double x_prev) {
    if (!(lambda_t > 0.0)) throw DomainError("lambda must be > 0, got " + format_double(lambda_t));
    if (a_t <= a_prev) return lambda_t;
    return lambda_t + ratchet_increment(p, x_t - x_prev);
}

double step_population(double n_star, double L) { return n_star * L; }

Stage1Policy solve_stage1(const Stage1Params& p, double lambda, double a, double L) {
    Stage1Policy policy;
    policy.x_star = optimal_labor_allocation(p, lambda, a);
    policy.y_star = optimal_output(p, lambda, a, L);
    auto choice = fertility(p, policy.y_star);
    policy.n_star = choice.n;
    policy.regime = choice.regime;
    return policy;
}

}  // namespace evohealth
