#include "evohealth/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "evohealth/csv_io.hpp"
#include "evohealth/errors.hpp"
#include "evohealth/numeric.hpp"
#include "evohealth/stage1.hpp"
#include "evohealth/stage2.hpp"
#include "evohealth/stage3.hpp"

namespace evohealth {
namespace {

constexpr std::size_t kMinGridPoints = 1000;

void check_grid(std::size_t grid_points) {
    if (grid_points < kMinGridPoints) {
        throw ConfigError("oracle grids need at least 1000 points, got " + std::to_string(grid_points));
    }
}

// Primitive definitions, kept separate from the stage modules on purpose.
double raw_output1(const Stage1Params& p, double lambda, double a, double x, double L_scale) {
    return (p.phi * lambda * x - a) * std::pow(1.0 - x, p.alpha) * L_scale;
}

double raw_fertility1(const Stage1Params& p, double y) {
    const double survival_income = p.c_hat / (1.0 - p.gamma);
    if (y >= survival_income) return p.gamma / p.p;
    const double n = (1.0 - p.c_hat / y) / p.p;
    return n > 0.0 ? n : 0.0;
}

double raw_output2(const Stage2Params& p, double x, double L) {
    return std::pow(std::pow(p.phi * p.lambda_fixed * x, p.beta) * std::pow(1.0 - x, 1.0 - p.beta),
                    p.alpha) *
           std::pow(L, p.alpha - 1.0);
}

// Utility with c from the c/n FOC ratio and n from the binding budget.
double raw_utility3(const Stage3Params& p, double x) {
    const double y = p.A * std::pow(x, 1.0 - p.alpha) * std::pow(1.0 - x, p.alpha);
    const double c = y / (1.0 + p.gamma / ((1.0 - p.gamma) * x));
    const double n = (y - c) / (p.p * y);
    return (1.0 - p.gamma) * x * std::log(c) + p.gamma * std::log(n);
}

}  // namespace

OracleReport make_report(std::string target, double closed, double brute, double resolution,
                         double bound, std::string note) {
    OracleReport r;
    r.target = std::move(target);
    r.closed_value = closed;
    r.brute_value = brute;
    r.abs_error = std::abs(closed - brute);
    r.resolution = resolution;
    r.bound = bound;
    r.pass = r.abs_error <= bound;
    r.note = std::move(note);
    return r;
}

OracleReport grid_argmax_stage1(const Stage1Params& p, double lambda, double a, double L,
                                std::size_t grid_points, std::optional<double> bound) {
    check_grid(grid_points);
    const double closed = optimal_labor_allocation(p, lambda, a);
    if (!(L > 0.0)) throw DomainError("population L must be > 0");

    const double lo = a / (p.phi * lambda);
    const double step = (1.0 - lo) / static_cast<double>(grid_points);
    const double L_scale = std::pow(L, p.alpha - 1.0);
    std::size_t best = 1;
    double best_y = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < grid_points; ++i) {
        const double x = lo + step * static_cast<double>(i);
        const double y = raw_output1(p, lambda, a, x, L_scale);
        if (y > best_y) {
            best_y = y;
            best = i;
        }
    }
    const double brute = lo + step * static_cast<double>(best);
    return make_report("stage1.x_star", closed, brute, step, bound.value_or(2.0 * step));
}

std::vector<OracleReport> grid_argmax_utility2(const Stage2Params& p, double L,
                                               std::size_t grid_points,
                                               std::optional<double> bound) {
    check_grid(grid_points);
    if (!(L > 0.0)) throw DomainError("population L must be > 0");
    const std::size_t N = grid_points;
    const double hx = 1.0 / static_cast<double>(N);

    std::vector<double> xs(N), ys(N), log_x(N);
    double y_max = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        xs[i] = (static_cast<double>(i) + 0.5) * hx;
        ys[i] = raw_output2(p, xs[i], L);
        log_x[i] = std::log(xs[i]);
        y_max = std::max(y_max, ys[i]);
    }
    const double n_max = y_max / p.p;
    const double hn = n_max / static_cast<double>(N);
    std::vector<double> ns(N), log_n(N);
    for (std::size_t j = 0; j < N; ++j) {
        ns[j] = (static_cast<double>(j) + 0.5) * hn;
        log_n[j] = std::log(ns[j]);
    }

    double best_u = -std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 0;
    const double w = 1.0 - p.gamma;
    for (std::size_t i = 0; i < N; ++i) {
        const double base = w * log_x[i];
        for (std::size_t j = 0; j < N; ++j) {
            const double c = ys[i] - p.p * ns[j];
            if (!(c > 0.0)) break;
            const double u = w * std::log(c) + base + p.gamma * log_n[j];
            if (u > best_u) {
                best_u = u;
                bi = i;
                bj = j;
            }
        }
    }

    // Local slope of y around the grid optimum bounds how x-resolution moves c.
    double slope = 0.0;
    const std::size_t from = bi >= 3 ? bi - 3 : 0;
    const std::size_t to = std::min(bi + 3, N - 1);
    for (std::size_t i = from; i < to; ++i) slope = std::max(slope, std::abs(ys[i + 1] - ys[i]) / hx);

    const Stage2Policy closed = optimal_policy2(p, L);
    const double c_grid = ys[bi] - p.p * ns[bj];
    std::vector<OracleReport> out;
    out.push_back(make_report("stage2.x_star", closed.x_star, xs[bi], hx, bound.value_or(2.0 * hx)));
    out.push_back(make_report("stage2.n_star", closed.n_star, ns[bj], hn, bound.value_or(2.0 * hn)));
    out.push_back(make_report("stage2.c_star", closed.c_star, c_grid, hn,
                              bound.value_or(2.0 * (p.p * hn + slope * hx))));
    return out;
}

OracleReport grid_argmax_utility3(const Stage3Params& p, std::size_t grid_points,
                                  std::optional<double> bound) {
    check_grid(grid_points);
    const std::size_t N = grid_points;
    const double h = 1.0 / static_cast<double>(N + 1);
    std::vector<double> u(N);
    for (std::size_t i = 0; i < N; ++i) u[i] = raw_utility3(p, static_cast<double>(i + 1) * h);

    std::size_t global = 0;
    for (std::size_t i = 1; i < N; ++i) {
        if (u[i] > u[global]) global = i;
    }
    std::size_t local_count = 0;
    std::size_t best_local = 0;
    bool have_local = false;
    for (std::size_t i = 1; i + 1 < N; ++i) {
        if (u[i] > u[i - 1] && u[i] >= u[i + 1]) {
            ++local_count;
            if (!have_local || u[i] > u[best_local]) {
                best_local = i;
                have_local = true;
            }
        }
    }
    const std::string corner = global == 0 ? "grid maximum at x->0 corner" : "grid maximum interior";

    try {
        const Stage3Solution s = solve_health_investment3(p);
        if (!have_local) {
            return make_report("stage3.x_star", s.x_star, std::numeric_limits<double>::quiet_NaN(), h,
                               bound.value_or(2.0 * h), "no interior grid maximum; " + corner);
        }
        const double brute = static_cast<double>(best_local + 1) * h;
        return make_report("stage3.x_star", s.x_star, brute, h, bound.value_or(2.0 * h), corner);
    } catch (const NoRootError& e) {
        return make_report("stage3.root_count", 0.0, static_cast<double>(local_count), h,
                           bound.value_or(0.0), "solver: no FOC root; " + corner);
    }
}

double brute_fertility_stage1(const Stage1Params& p, double lambda, double a, double L) {
    const double lo = a / (p.phi * lambda);
    const double L_scale = std::pow(L, p.alpha - 1.0);
    auto y_of = [&](double x) { return raw_output1(p, lambda, a, x, L_scale); };
    const double x = numeric::golden_section_max(y_of, lo, 1.0, 1e-13);
    const double y = y_of(x);
    if (!(y > 0.0)) return 0.0;
    return raw_fertility1(p, y);
}

OracleReport bisect_threshold(const Stage1Params& p, double lambda, double a,
                              std::optional<double> rel_bound) {
    if (!(lambda > 0.0) || !(a >= 0.0) || !(a < p.phi * lambda)) {
        throw DomainError("threshold oracle needs 0 <= a < phi*lambda");
    }
    auto excess = [&](double L) { return brute_fertility_stage1(p, lambda, a, L) - 1.0; };
    // Bracket in log L: start from [1e-9, 1] and widen either end until the sign changes.
    double L_lo = 1e-9;
    while (!(excess(L_lo) > 0.0)) {
        L_lo *= 1e-3;
        if (L_lo < 1e-290) throw NoThresholdError("fertility stays below one for every L");
    }
    double L_hi = 1.0;
    while (excess(L_hi) > 0.0) {
        L_hi *= 2.0;
        if (L_hi > 1e300) throw NoThresholdError("fertility stays above one for every L");
    }
    const double u = numeric::bisect([&](double log_L) { return excess(std::exp(log_L)); }, std::log(L_lo),
                                     std::log(L_hi));
    const double brute = std::exp(u);
    const double closed = population_threshold_g(p, lambda, a);
    const double rel = rel_bound.value_or(1e-6);
    return make_report("stage1.threshold_g", closed, brute, std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(u)) * brute,
                       rel * closed);
}

OracleStage parse_oracle_stage(const std::string& name) {
    if (name == "stage1" || name == "1") return OracleStage::stage1;
    if (name == "stage2" || name == "2") return OracleStage::stage2;
    if (name == "stage3" || name == "3") return OracleStage::stage3;
    if (name == "all") return OracleStage::all;
    throw ConfigError("unknown stage '" + name + "' (expected stage1, stage2, stage3 or all)");
}

std::vector<OracleReport> run_oracle_suite(OracleStage stage, std::optional<double> tolerance) {
    std::vector<OracleReport> out;
    const bool all = stage == OracleStage::all;
    auto tagged = [](OracleReport r, const std::string& fixture) {
        r.target += "[" + fixture + "]";
        return r;
    };

    if (all || stage == OracleStage::stage1) {
        const Stage1Params p = validate_stage1(Stage1Params{});
        constexpr std::size_t grid = 1000000;
        out.push_back(tagged(grid_argmax_stage1(p, 1.0, 0.0, 1.0, grid, tolerance), "lambda=1;a=0"));
        out.push_back(tagged(grid_argmax_stage1(p, 2.0, 0.5, 1.0, grid, tolerance), "lambda=2;a=0.5"));
        out.push_back(tagged(grid_argmax_stage1(p, 1.0, 0.5, 1.0, grid, tolerance), "lambda=1;a=0.5"));
        out.push_back(tagged(grid_argmax_stage1(p, 1.0, 0.999, 1.0, grid, tolerance), "lambda=1;a=0.999"));
        out.push_back(tagged(bisect_threshold(p, 1.0, 0.0, tolerance), "lambda=1;a=0"));
        out.push_back(tagged(bisect_threshold(p, 2.0, 0.5, tolerance), "lambda=2;a=0.5"));
    }
    if (all || stage == OracleStage::stage2) {
        const Stage2Params p = validate_stage2(Stage2Params{});
        constexpr std::size_t grid = 1000;
        for (auto& r : grid_argmax_utility2(p, 1.0, grid, tolerance)) out.push_back(tagged(r, "L=1"));
        for (auto& r : grid_argmax_utility2(p, 100.0, grid, tolerance)) out.push_back(tagged(r, "L=100"));
        Stage2Params near_one = p;
        near_one.gamma = 0.999;
        for (auto& r : grid_argmax_utility2(near_one, 1.0, grid, tolerance)) {
            out.push_back(tagged(r, "gamma=0.999"));
        }
    }
    if (all || stage == OracleStage::stage3) {
        constexpr std::size_t grid = 1000000;
        const Stage3Params base = validate_stage3(Stage3Params{});
        out.push_back(tagged(grid_argmax_utility3(base, grid, tolerance), "A=7.389"));
        Stage3Params rich = base;
        rich.A = 20.0;
        out.push_back(tagged(grid_argmax_utility3(rich, grid, tolerance), "A=20"));
        Stage3Params poor = base;
        poor.A = 1.0;
        out.push_back(tagged(grid_argmax_utility3(poor, grid, tolerance), "A=1"));
    }
    return out;
}

void write_reports_csv(std::ostream& out, const std::vector<OracleReport>& reports) {
    out << "target,closed_value,brute_value,abs_error,resolution,bound,pass,note\n";
    for (const auto& r : reports) {
        out << r.target << ',' << format_double(r.closed_value) << ',' << format_double(r.brute_value)
            << ',' << format_double(r.abs_error) << ',' << format_double(r.resolution) << ','
            << format_double(r.bound) << ',' << (r.pass ? "true" : "false") << ',' << r.note << '\n';
    }
}

}  // namespace evohealth
