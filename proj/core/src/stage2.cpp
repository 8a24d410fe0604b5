#include "evohealth/stage2.hpp"

#include <algorithm>
#include <cmath>

#include "evohealth/csv_io.hpp"
#include "evohealth/errors.hpp"
#include "evohealth/numeric.hpp"

namespace evohealth {
namespace {

void check_delta(double delta) {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw DomainError("child mortality delta must lie in (0,1), got " + format_double(delta));
    }
}

// Output per capita at x* and L = 1.
double output_scale2(const Stage2Params& p) {
    const double x = optimal_health_share2(p);
    return std::pow(std::pow(p.phi * p.lambda_fixed * x, p.beta) * std::pow(1.0 - x, 1.0 - p.beta),
                    p.alpha);
}

}  // namespace

double output_per_capita2(const Stage2Params& p, double x, double L) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError("allocation x must lie in (0,1), got " + format_double(x));
    if (!(L > 0.0)) throw DomainError("population L must be > 0, got " + format_double(L));
    const double composite =
        std::pow(p.phi * p.lambda_fixed * x, p.beta) * std::pow(1.0 - x, 1.0 - p.beta);
    return std::pow(composite, p.alpha) * std::pow(L, p.alpha - 1.0);
}

double optimal_health_share2(const Stage2Params& p) {
    return (p.alpha * p.beta + 1.0 - p.gamma) / (p.alpha + 1.0 - p.gamma);
}

Stage2Policy optimal_policy2(const Stage2Params& p, double L) {
    Stage2Policy policy;
    policy.x_star = optimal_health_share2(p);
    policy.y = output_per_capita2(p, policy.x_star, L);
    policy.n_star = p.gamma * policy.y / p.p;
    policy.c_star = p.p * policy.n_star * (1.0 - p.gamma) / p.gamma;
    return policy;
}

double mortality(const Stage2Params& p, double a) {
    if (!(a >= 0.0)) throw DomainError("adversity must be >= 0, got " + format_double(a));
    return std::clamp(p.delta0 + p.delta1 * a, p.delta_min, p.delta_max);
}

double step_population2(const Stage2Params& p, double L, double delta) {
    check_delta(delta);
    const double next = (1.0 + optimal_policy2(p, L).n_star - delta) * L;
    if (!(next > 0.0)) throw DomainError("population update produced a non-positive level");
    return next;
}

Stage2Steady steady_state(const Stage2Params& p, double delta) {
    check_delta(delta);
    Stage2Steady s;
    s.L_tilde = std::pow(delta * p.p / (p.gamma * output_scale2(p)), 1.0 / (p.alpha - 1.0));

    auto increment = [&](double L) { return (optimal_policy2(p, L).n_star - delta) * L; };
    s.L_tilde_prime = numeric::golden_section_max(increment, s.L_tilde * 1e-12, s.L_tilde,
                                                  s.L_tilde * 1e-13);

    s.stability_factor = 1.0 - delta * (1.0 - p.alpha);
    s.stable = s.stability_factor > 0.0 && s.stability_factor < 1.0;
    return s;
}

}  // namespace evohealth
