#include "evohealth/sim.hpp"

#include <cmath>
#include <ostream>

#include "evohealth/csv_io.hpp"
#include "evohealth/errors.hpp"
#include "evohealth/stage1.hpp"
#include "evohealth/stage2.hpp"

namespace evohealth {

std::string to_string(Scenario s) {
    switch (s) {
        case Scenario::scenario_1: return "scenario-1";
        case Scenario::scenario_2: return "scenario-2";
        case Scenario::boundary: return "boundary";
        case Scenario::undefined: return "undefined";
    }
    return "undefined";
}

Scenario classify_regime(double L, double g) {
    if (!(g > 0.0)) throw DomainError("threshold must be > 0, got " + format_double(g));
    if (std::abs(L - g) / g <= 1e-12) return Scenario::boundary;
    return L > g ? Scenario::scenario_1 : Scenario::scenario_2;
}

std::string to_string(Termination t) {
    switch (t) {
        case Termination::completed: return "completed";
        case Termination::extinction: return "extinction";
        case Termination::adversity_exceeds_technology: return "adversity-exceeds-technology";
    }
    return "unknown";
}

SimSeries run_stage1(const Stage1Params& p, const AdversityPath& path, double L0, double lambda0) {
    if (path.values.size() < 2) throw ConfigError("adversity path must cover at least T = 1");
    if (!(L0 > 0.0)) throw DomainError("initial population must be > 0");
    if (!(lambda0 > 0.0)) throw DomainError("initial health productivity must be > 0");
    if (!(path.values.front() < p.phi * lambda0)) {
        throw DomainError("a_0 = " + format_double(path.values.front()) +
                          " is not below phi*lambda_0 = " + format_double(p.phi * lambda0));
    }

    SimSeries series;
    series.stage = 1;
    series.params_echo = describe(p);
    series.kind = path.config.kind;
    series.seed = path.seed;
    series.records.reserve(path.values.size());

    double lambda = lambda0;
    double L = L0;
    double a_prev = path.values.front();
    double x_prev = optimal_labor_allocation(p, lambda, a_prev);

    for (std::size_t t = 0; t < path.values.size(); ++t) {
        const double a = path.values[t];
        if (!(a < p.phi * lambda)) {
            series.termination = Termination::adversity_exceeds_technology;
            return series;
        }
        const Stage1Policy policy = solve_stage1(p, lambda, a, L);

        SimRecord rec;
        rec.t = t;
        rec.a = a;
        rec.lambda = lambda;
        rec.x = policy.x_star;
        rec.y = policy.y_star;
        rec.n = policy.n_star;
        rec.L = L;
        rec.regime = to_string(policy.regime);
        try {
            rec.g = population_threshold_g(p, lambda, a);
            rec.scenario = classify_regime(L, rec.g);
        } catch (const NoThresholdError&) {
            rec.scenario = Scenario::undefined;
        }
        series.records.push_back(rec);

        if (policy.regime == FertilityRegime::extinction) {
            series.termination = Termination::extinction;
            return series;
        }
        const double lambda_next = update_health_productivity(p, lambda, a, a_prev, policy.x_star, x_prev);
        a_prev = a;
        x_prev = policy.x_star;
        lambda = lambda_next;
        L = step_population(policy.n_star, L);
    }
    series.termination = Termination::completed;
    return series;
}

SimSeries run_stage2(const Stage2Params& p, const AdversityPath& path, double L0) {
    if (path.values.size() < 2) throw ConfigError("adversity path must cover at least T = 1");
    if (!(L0 > 0.0)) throw DomainError("initial population must be > 0");

    SimSeries series;
    series.stage = 2;
    series.params_echo = describe(p);
    series.kind = path.config.kind;
    series.seed = path.seed;
    series.records.reserve(path.values.size());

    double L = L0;
    for (std::size_t t = 0; t < path.values.size(); ++t) {
        const double a = path.values[t];
        const double delta = mortality(p, a);
        const Stage2Policy policy = optimal_policy2(p, L);
        const Stage2Steady steady = steady_state(p, delta);

        SimRecord rec;
        rec.t = t;
        rec.a = a;
        rec.lambda = p.lambda_fixed;
        rec.x = policy.x_star;
        rec.y = policy.y;
        rec.n = policy.n_star;
        rec.L = L;
        rec.scenario = classify_regime(L, steady.L_tilde);
        rec.regime = to_string(rec.scenario);
        rec.delta = delta;
        rec.L_tilde = steady.L_tilde;
        series.records.push_back(rec);

        L = step_population2(p, L, delta);
    }
    series.termination = Termination::completed;
    return series;
}

SimSummary summarize(const SimSeries& series) {
    SimSummary s;
    const auto& r = series.records;
    if (r.empty()) return s;
    s.lambda_growth = r.back().lambda / r.front().lambda;
    int last_direction = 0;
    for (std::size_t i = 1; i < r.size(); ++i) {
        if (r[i].lambda > r[i - 1].lambda) ++s.lambda_increases;
        int direction = 0;
        if (r[i].L > r[i - 1].L) {
            ++s.population_up_moves;
            direction = 1;
        } else if (r[i].L < r[i - 1].L) {
            ++s.population_down_moves;
            direction = -1;
        }
        if (direction != 0) {
            if (last_direction != 0 && direction != last_direction) ++s.population_direction_changes;
            last_direction = direction;
        }
    }
    return s;
}

void write_series_csv(std::ostream& out, const SimSeries& series) {
    out << "# stage=" << series.stage << '\n';
    out << "# rng=" << kRngName << " seed=" << series.seed << " process=" << to_string(series.kind)
        << '\n';
    out << "# params=" << series.params_echo << '\n';
    out << "# params_hash=fnv1a64:" << hex64(fnv1a64(series.params_echo)) << '\n';
    out << "# termination=" << to_string(series.termination) << '\n';
    out << "t,a,lambda,x,y,n,L,regime";
    out << (series.stage == 1 ? ",scenario,g\n" : ",delta,L_tilde\n");
    for (const auto& r : series.records) {
        out << r.t << ',' << format_double(r.a) << ',' << format_double(r.lambda) << ','
            << format_double(r.x) << ',' << format_double(r.y) << ',' << format_double(r.n) << ','
            << format_double(r.L) << ',' << r.regime << ',';
        if (series.stage == 1) {
            out << to_string(r.scenario) << ',' << format_double(r.g) << '\n';
        } else {
            out << format_double(r.delta) << ',' << format_double(r.L_tilde) << '\n';
        }
    }
}

}  // namespace evohealth
