#include "evohealth/stage3.hpp"

#include <cmath>
#include <limits>

#include "evohealth/csv_io.hpp"
#include "evohealth/errors.hpp"
#include "evohealth/numeric.hpp"

namespace evohealth {
namespace {

void check_interior(double x) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError("allocation x must lie in (0,1), got " + format_double(x));
}

struct Scan {
    std::vector<double> roots;
    double max_residual = -std::numeric_limits<double>::infinity();
    double argmax = 0.0;
};

Scan scan_roots(const Stage3Params& p) {
    Scan scan;
    auto G = [&](double x) { return foc_residual3(p, x); };
    const double lo = kStage3ScanEdge;
    const double width = 1.0 - 2.0 * kStage3ScanEdge;
    double x_prev = lo;
    double g_prev = G(x_prev);
    scan.max_residual = g_prev;
    scan.argmax = x_prev;
    for (int i = 1; i <= kStage3ScanBrackets; ++i) {
        const double x = lo + width * static_cast<double>(i) / kStage3ScanBrackets;
        const double g = G(x);
        if (g > scan.max_residual) {
            scan.max_residual = g;
            scan.argmax = x;
        }
        if (g_prev == 0.0) {
            scan.roots.push_back(x_prev);
        } else if ((g_prev < 0.0) != (g < 0.0) && g != 0.0) {
            scan.roots.push_back(numeric::bisect(G, x_prev, x));
        }
        x_prev = x;
        g_prev = g;
    }
    if (g_prev == 0.0) scan.roots.push_back(x_prev);
    return scan;
}

double branch_root(const Stage3Params& p, RootBranch branch, std::size_t& root_count) {
    if (branch == RootBranch::lowest) {
        Scan scan = scan_roots(p);
        root_count = scan.roots.size();
        if (scan.roots.empty()) throw NoRootError(scan.max_residual, scan.argmax);
        return scan.roots.front();
    }
    Stage3Solution s = solve_health_investment3(p);
    root_count = s.root_candidates.size();
    return s.x_star;
}

// At a perturbed stencil point "no root" is a root-count change, not a failure of the base
// problem, so it is reported as count 0 and left to the caller's PerturbationError check.
double perturbed_root(const Stage3Params& p, RootBranch branch, std::size_t& root_count) {
    try {
        return branch_root(p, branch, root_count);
    } catch (const NoRootError&) {
        root_count = 0;
        return std::numeric_limits<double>::quiet_NaN();
    }
}

}  // namespace

double production3(const Stage3Params& p, double x) {
    check_interior(x);
    return p.A * std::pow(x, 1.0 - p.alpha) * std::pow(1.0 - x, p.alpha);
}

double foc_residual3(const Stage3Params& p, double x) {
    check_interior(x);
    const double k = p.gamma / (1.0 - p.gamma);
    return std::log(p.A * std::pow((1.0 - x) / x, p.alpha) * x * x / (x + k)) -
           p.alpha / (1.0 - x) + 1.0;
}

double foc_residual3_fertility_form(const Stage3Params& p, double n) {
    const double q = p.p * n;
    if (!(q > p.gamma && q < 1.0)) {
        throw DomainError("fertility form needs gamma < p*n < 1, got p*n = " + format_double(q));
    }
    const double inner = p.A * std::pow(q - p.gamma, p.alpha) * std::pow(p.gamma, 1.0 - p.alpha) *
                         std::pow(1.0 - q, 2.0 - p.alpha) / ((1.0 - p.gamma) * q);
    return std::log(inner) - p.alpha * (1.0 - p.gamma) * q / (q - p.gamma) + 1.0;
}

double fertility3(const Stage3Params& p, double x) {
    return 1.0 / (p.p * ((1.0 - p.gamma) / p.gamma * x + 1.0));
}

double consumption3(const Stage3Params& p, double x) {
    const double share = (1.0 - p.gamma) * x;
    return production3(p, x) * share / (share + p.gamma);
}

double utility3(const Stage3Params& p, double x) {
    return (1.0 - p.gamma) * x * std::log(consumption3(p, x)) + p.gamma * std::log(fertility3(p, x));
}

Stage3Solution solve_health_investment3(const Stage3Params& p) {
    Scan scan = scan_roots(p);
    if (scan.roots.empty()) throw NoRootError(scan.max_residual, scan.argmax);

    Stage3Solution s;
    std::size_t best = 0;
    for (std::size_t i = 0; i < scan.roots.size(); ++i) {
        const double x = scan.roots[i];
        s.root_candidates.push_back({x, utility3(p, x), foc_residual3(p, x)});
        if (s.root_candidates[i].utility > s.root_candidates[best].utility) best = i;
    }
    s.x_star = s.root_candidates[best].x;
    s.utility_value = s.root_candidates[best].utility;
    s.y = production3(p, s.x_star);
    s.n_star = fertility3(p, s.x_star);
    s.c_star = consumption3(p, s.x_star);
    s.fertility_below_one = s.n_star < 1.0;
    s.corner_utility = p.gamma * std::log(1.0 / p.p);
    s.corner_dominates = s.corner_utility > s.utility_value;
    return s;
}

std::string to_string(Stage3Param which) {
    switch (which) {
        case Stage3Param::A: return "A";
        case Stage3Param::alpha: return "alpha";
        case Stage3Param::gamma: return "gamma";
        case Stage3Param::p: return "p";
    }
    return "unknown";
}

Stage3Param parse_stage3_param(const std::string& name) {
    if (name == "A") return Stage3Param::A;
    if (name == "alpha") return Stage3Param::alpha;
    if (name == "gamma") return Stage3Param::gamma;
    if (name == "p") return Stage3Param::p;
    throw ConfigError("unknown stage3 parameter '" + name + "' (expected A, alpha, gamma or p)");
}

double& param_ref(Stage3Params& p, Stage3Param which) {
    switch (which) {
        case Stage3Param::A: return p.A;
        case Stage3Param::alpha: return p.alpha;
        case Stage3Param::gamma: return p.gamma;
        case Stage3Param::p: return p.p;
    }
    return p.A;
}

double comparative_statics3(const Stage3Params& p, Stage3Param which, double h, RootBranch branch) {
    if (!(h > 0.0)) throw DomainError("finite-difference step must be > 0");
    Stage3Params lo = p;
    Stage3Params hi = p;
    param_ref(lo, which) -= h;
    param_ref(hi, which) += h;
    lo = validate_stage3(lo);
    hi = validate_stage3(hi);

    std::size_t n_mid = 0, n_lo = 0, n_hi = 0;
    branch_root(p, branch, n_mid);
    const double x_lo = perturbed_root(lo, branch, n_lo);
    const double x_hi = perturbed_root(hi, branch, n_hi);
    if (n_lo != n_mid || n_hi != n_mid) {
        throw PerturbationError("FOC root count changes across the step in " + to_string(which) +
                                " (" + std::to_string(n_lo) + "/" + std::to_string(n_mid) + "/" +
                                std::to_string(n_hi) + "); derivative undefined");
    }
    return (x_hi - x_lo) / (2.0 * h);
}

double mixed_partial3(const Stage3Params& p, double h_alpha, double h_gamma, RootBranch branch) {
    auto shifted = [&](double da, double dg) {
        Stage3Params q = p;
        q.alpha += da;
        q.gamma += dg;
        return validate_stage3(q);
    };
    std::size_t n_ref = 0;
    branch_root(p, branch, n_ref);
    double corners[4];
    const double signs[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    for (int i = 0; i < 4; ++i) {
        std::size_t n = 0;
        corners[i] = perturbed_root(shifted(signs[i][0] * h_alpha, signs[i][1] * h_gamma), branch, n);
        if (n != n_ref) {
            throw PerturbationError("FOC root count changes across the mixed-partial stencil");
        }
    }
    return (corners[0] - corners[1] - corners[2] + corners[3]) / (4.0 * h_alpha * h_gamma);
}

SignMap derivative_sign_map(const Stage3Params& base, Stage3Param swept, double from, double to,
                            int steps, Stage3Param wrt, double h, RootBranch branch) {
    if (steps < 2) throw ConfigError("sign map needs at least two sweep points");
    SignMap map;
    map.swept = swept;
    map.wrt = wrt;
    for (int i = 0; i < steps; ++i) {
        SignMapEntry entry;
        entry.value = from + (to - from) * static_cast<double>(i) / (steps - 1);
        Stage3Params q = base;
        param_ref(q, swept) = entry.value;
        try {
            q = validate_stage3(q);
            std::size_t count = 0;
            entry.x_star = branch_root(q, branch, count);
            entry.derivative = comparative_statics3(q, wrt, h, branch);
            entry.status = "ok";
        } catch (const NoRootError&) {
            entry.status = "no-root";
        } catch (const PerturbationError&) {
            entry.status = "root-count-changes";
        } catch (const RangeError&) {
            entry.status = "out-of-range";
        }
        map.entries.push_back(entry);
    }

    bool open = false;
    double start = 0.0, last = 0.0;
    for (const auto& e : map.entries) {
        const bool positive = e.derivative && *e.derivative > 0.0;
        if (positive && !open) {
            open = true;
            start = e.value;
        }
        if (positive) last = e.value;
        if (!positive && open) {
            map.positive_intervals.emplace_back(start, last);
            open = false;
        }
    }
    if (open) map.positive_intervals.emplace_back(start, last);
    return map;
}

}  // namespace evohealth
