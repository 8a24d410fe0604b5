#include "evohealth/commands.hpp"

#include <fstream>
#include <limits>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "evohealth/csv_io.hpp"
#include "evohealth/errors.hpp"
#include "evohealth/oracle.hpp"
#include "evohealth/sim.hpp"
#include "evohealth/stage1.hpp"
#include "evohealth/stage2.hpp"
#include "evohealth/stage3.hpp"
#include "evohealth/svg_plot.hpp"

namespace evohealth::cli {
namespace {

void row(std::ostream& out, const std::string& name, const std::string& value) {
    out << "  " << std::left << std::setw(18) << name << value << '\n';
}

void row(std::ostream& out, const std::string& name, double value) { row(out, name, format_double(value)); }

// Writes through a file when a path is given, else to the fallback stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw ConfigError("cannot write " + path);
        }
        stream_ = path.empty() ? &fallback : &file_;
    }
    std::ostream& stream() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

AdversityPath adversity_for(const RunConfig& cfg) {
    if (!cfg.path_in.empty()) {
        std::ifstream in(cfg.path_in);
        if (!in) throw ConfigError("cannot open adversity path " + cfg.path_in);
        AdversityPath path = read_path_csv(in);
        if (path.horizon() < cfg.T) {
            throw ConfigError("adversity path covers T = " + std::to_string(path.horizon()) +
                              " periods, fewer than requested T = " + std::to_string(cfg.T));
        }
        path.values.resize(cfg.T + 1);
        return path;
    }
    return generate_path(cfg.shocks, cfg.T);
}

double stage2_delta(const RunConfig& cfg, const Stage2Params& p) {
    return cfg.delta ? *cfg.delta : mortality(p, cfg.a);
}

int solve_stage1_cmd(const RunConfig& cfg, bool csv, std::ostream& out) {
    const Stage1Params p = validate_stage1(cfg.stage1);
    const Stage1Policy policy = solve_stage1(p, cfg.lambda, cfg.a, cfg.L);
    std::string g_text = "none";
    std::string scenario = to_string(Scenario::undefined);
    try {
        const double g = population_threshold_g(p, cfg.lambda, cfg.a);
        g_text = format_double(g);
        scenario = to_string(classify_regime(cfg.L, g));
    } catch (const NoThresholdError&) {
    }
    if (csv) {
        out << "stage,lambda,a,L,x,y,n,regime,g,scenario\n";
        out << "stage1," << format_double(cfg.lambda) << ',' << format_double(cfg.a) << ','
            << format_double(cfg.L) << ',' << format_double(policy.x_star) << ','
            << format_double(policy.y_star) << ',' << format_double(policy.n_star) << ','
            << to_string(policy.regime) << ',' << g_text << ',' << scenario << '\n';
        return kExitOk;
    }
    out << "stage1  lambda=" << format_double(cfg.lambda) << " a=" << format_double(cfg.a)
        << " L=" << format_double(cfg.L) << '\n';
    row(out, "x*", policy.x_star);
    row(out, "y*", policy.y_star);
    row(out, "n*", policy.n_star);
    row(out, "regime", to_string(policy.regime));
    row(out, "y_hat", p.y_hat);
    row(out, "threshold g", g_text);
    row(out, "scenario", scenario);
    return kExitOk;
}

int solve_stage2_cmd(const RunConfig& cfg, bool csv, std::ostream& out) {
    const Stage2Params p = validate_stage2(cfg.stage2);
    const Stage2Policy policy = optimal_policy2(p, cfg.L);
    const double delta = stage2_delta(cfg, p);
    const Stage2Steady steady = steady_state(p, delta);
    if (csv) {
        out << "stage,L,x,y,n,c,delta,L_tilde,L_tilde_prime,stability_factor\n";
        out << "stage2," << format_double(cfg.L) << ',' << format_double(policy.x_star) << ','
            << format_double(policy.y) << ',' << format_double(policy.n_star) << ','
            << format_double(policy.c_star) << ',' << format_double(delta) << ','
            << format_double(steady.L_tilde) << ',' << format_double(steady.L_tilde_prime) << ','
            << format_double(steady.stability_factor) << '\n';
        return kExitOk;
    }
    out << "stage2  L=" << format_double(cfg.L) << " delta=" << format_double(delta) << '\n';
    row(out, "x*", policy.x_star);
    row(out, "y", policy.y);
    row(out, "n*", policy.n_star);
    row(out, "c*", policy.c_star);
    row(out, "L_tilde", steady.L_tilde);
    row(out, "L_tilde_prime", steady.L_tilde_prime);
    row(out, "stability", steady.stability_factor);
    return kExitOk;
}

int solve_stage3_cmd(const RunConfig& cfg, bool csv, std::ostream& out) {
    const Stage3Params p = validate_stage3(cfg.stage3);
    const Stage3Solution s = solve_health_investment3(p);
    if (csv) {
        out << "stage,x,y,n,c,utility,root_count,fertility_below_one,corner_dominates\n";
        out << "stage3," << format_double(s.x_star) << ',' << format_double(s.y) << ','
            << format_double(s.n_star) << ',' << format_double(s.c_star) << ','
            << format_double(s.utility_value) << ',' << s.root_candidates.size() << ','
            << (s.fertility_below_one ? "true" : "false") << ','
            << (s.corner_dominates ? "true" : "false") << '\n';
        return kExitOk;
    }
    out << "stage3  A=" << format_double(p.A) << '\n';
    row(out, "x*", s.x_star);
    row(out, "y", s.y);
    row(out, "n*", s.n_star);
    row(out, "c*", s.c_star);
    row(out, "utility", s.utility_value);
    for (std::size_t i = 0; i < s.root_candidates.size(); ++i) {
        const auto& r = s.root_candidates[i];
        row(out, "root[" + std::to_string(i) + "]",
            "x=" + format_double(r.x) + " u=" + format_double(r.utility) + " G=" + format_double(r.residual));
    }
    row(out, "n<1 flag", s.fertility_below_one ? "true" : "false");
    row(out, "corner utility", s.corner_utility);
    row(out, "corner dominates", s.corner_dominates ? "true" : "false");
    return kExitOk;
}

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

void sweep_stage1(const RunConfig& cfg, const SweepSpec& sw, std::ostream& out) {
    out << "value,x,y,n,regime,g\n";
    for (int i = 0; i < sw.steps; ++i) {
        const double v = sw.steps == 1 ? sw.from : sw.from + (sw.to - sw.from) * i / (sw.steps - 1);
        RunConfig c = cfg;
        apply_override(c, sw.param, format_double(v));
        const Stage1Params p = validate_stage1(c.stage1);
        const Stage1Policy policy = solve_stage1(p, c.lambda, c.a, c.L);
        std::string g = "";
        try {
            g = format_double(population_threshold_g(p, c.lambda, c.a));
        } catch (const NoThresholdError&) {
        }
        out << format_double(v) << ',' << format_double(policy.x_star) << ','
            << format_double(policy.y_star) << ',' << format_double(policy.n_star) << ','
            << to_string(policy.regime) << ',' << g << '\n';
    }
}

void sweep_stage2(const RunConfig& cfg, const SweepSpec& sw, std::ostream& out) {
    out << "value,x,y,n,c,delta,L_tilde,L_tilde_prime,stability_factor,steady_c\n";
    for (int i = 0; i < sw.steps; ++i) {
        const double v = sw.steps == 1 ? sw.from : sw.from + (sw.to - sw.from) * i / (sw.steps - 1);
        RunConfig c = cfg;
        apply_override(c, sw.param, format_double(v));
        const Stage2Params p = validate_stage2(c.stage2);
        const Stage2Policy policy = optimal_policy2(p, c.L);
        const double delta = stage2_delta(c, p);
        const Stage2Steady steady = steady_state(p, delta);
        const double steady_c = optimal_policy2(p, steady.L_tilde).c_star;
        out << format_double(v) << ',' << format_double(policy.x_star) << ',' << format_double(policy.y)
            << ',' << format_double(policy.n_star) << ',' << format_double(policy.c_star) << ','
            << format_double(delta) << ',' << format_double(steady.L_tilde) << ','
            << format_double(steady.L_tilde_prime) << ',' << format_double(steady.stability_factor)
            << ',' << format_double(steady_c) << '\n';
    }
}

void sweep_stage3(const RunConfig& cfg, const SweepSpec& sw, std::ostream& out, std::ostream& err) {
    const Stage3Param swept = parse_stage3_param(sw.param);
    const Stage3Params base = cfg.stage3;
    out << "value,status,x,n,utility,root_count,corner_dominates,dx_dgamma,dx_dalpha,d2x_dalpha_dgamma\n";
    for (int i = 0; i < sw.steps; ++i) {
        const double v = sw.steps == 1 ? sw.from : sw.from + (sw.to - sw.from) * i / (sw.steps - 1);
        Stage3Params q = base;
        param_ref(q, swept) = v;
        q = validate_stage3(q);
        out << format_double(v) << ',';
        Stage3Solution s;
        try {
            s = solve_health_investment3(q);
        } catch (const NoRootError&) {
            out << "no-root,,,,0,,,,\n";
            continue;
        }
        auto guarded = [&](auto&& f) -> std::optional<double> {
            try {
                return f();
            } catch (const PerturbationError&) {
                return std::nullopt;
            } catch (const NoRootError&) {
                return std::nullopt;
            } catch (const RangeError&) {
                return std::nullopt;
            }
        };
        const auto d_gamma = guarded([&] { return comparative_statics3(q, Stage3Param::gamma, sw.h); });
        const auto d_alpha = guarded([&] { return comparative_statics3(q, Stage3Param::alpha, sw.h); });
        const auto d_mixed = guarded([&] { return mixed_partial3(q, sw.h * 10, sw.h * 10); });
        out << "ok," << format_double(s.x_star) << ',' << format_double(s.n_star) << ','
            << format_double(s.utility_value) << ',' << s.root_candidates.size() << ','
            << (s.corner_dominates ? "true" : "false") << ',' << opt(d_gamma) << ',' << opt(d_alpha)
            << ',' << opt(d_mixed) << '\n';
    }

    if (sw.steps < 2) return;
    // Runs of the swept axis on which x* rises with gamma or alpha.
    for (Stage3Param wrt : {Stage3Param::gamma, Stage3Param::alpha}) {
        const SignMap map = derivative_sign_map(base, swept, sw.from, sw.to, sw.steps, wrt, sw.h);
        err << "dx*/d" << to_string(wrt) << " > 0 along " << to_string(swept) << ": ";
        if (map.positive_intervals.empty()) {
            err << "none (finding)\n";
        } else {
            for (const auto& [lo, hi] : map.positive_intervals) {
                err << '[' << format_double(lo) << ", " << format_double(hi) << "] ";
            }
            err << '\n';
        }
    }
}

}  // namespace

int report_error(const std::exception& e, std::ostream& err) {
    err << e.what() << '\n';
    if (dynamic_cast<const NoRootError*>(&e) || dynamic_cast<const NoThresholdError*>(&e) ||
        dynamic_cast<const PerturbationError*>(&e)) {
        return kExitNoSolution;
    }
    return kExitUsage;
}

int cmd_solve(const std::string& stage, const RunConfig& cfg, bool csv, std::ostream& out,
              std::ostream& err) {
    try {
        const std::string s = normalize_stage(stage);
        if (s == "stage1") return solve_stage1_cmd(cfg, csv, out);
        if (s == "stage2") return solve_stage2_cmd(cfg, csv, out);
        return solve_stage3_cmd(cfg, csv, out);
    } catch (const std::exception& e) {
        return report_error(e, err);
    }
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.T < 1) throw ConfigError("T must be >= 1");
        const AdversityPath path = adversity_for(cfg);
        SimSeries series;
        if (cfg.stage == "stage1") {
            series = run_stage1(validate_stage1(cfg.stage1), path, cfg.L0, cfg.lambda0);
        } else if (cfg.stage == "stage2") {
            series = run_stage2(validate_stage2(cfg.stage2), path, cfg.L0);
        } else {
            throw ConfigError("stage3 has no population dynamics to simulate");
        }
        if (!cfg.path_out.empty()) {
            Sink sink(cfg.path_out, out);
            write_path_csv(sink.stream(), path);
        }
        {
            Sink sink(cfg.out, out);
            write_series_csv(sink.stream(), series);
        }
        std::ostream& info = cfg.out.empty() ? err : out;
        info << "termination: " << to_string(series.termination) << '\n';
        if (!series.records.empty()) {
            const SimRecord& last = series.records.back();
            info << "final: t=" << last.t << " a=" << format_double(last.a)
                 << " lambda=" << format_double(last.lambda) << " L=" << format_double(last.L)
                 << " n=" << format_double(last.n) << " regime=" << last.regime << '\n';
        }
        if (series.stage == 1) {
            const SimSummary s = summarize(series);
            info << "summary: lambda_growth=" << format_double(s.lambda_growth)
                 << " lambda_increases=" << s.lambda_increases << " L_up=" << s.population_up_moves
                 << " L_down=" << s.population_down_moves
                 << " L_direction_changes=" << s.population_direction_changes << '\n';
        }
        return kExitOk;
    } catch (const std::exception& e) {
        return report_error(e, err);
    }
}

int cmd_sweep(const RunConfig& cfg, const SweepSpec& sweep, std::ostream& out, std::ostream& err) {
    try {
        if (sweep.steps < 1) throw ConfigError("steps must be >= 1");
        Sink sink(cfg.out, out);
        if (cfg.stage == "stage1") {
            sweep_stage1(cfg, sweep, sink.stream());
        } else if (cfg.stage == "stage2") {
            sweep_stage2(cfg, sweep, sink.stream());
        } else {
            sweep_stage3(cfg, sweep, sink.stream(), err);
        }
        return kExitOk;
    } catch (const std::exception& e) {
        return report_error(e, err);
    }
}

int cmd_verify(const std::string& stage, std::optional<double> tolerance, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
    try {
        const auto reports = run_oracle_suite(parse_oracle_stage(stage), tolerance);
        {
            Sink sink(out_path, out);
            write_reports_csv(sink.stream(), reports);
        }
        std::size_t failed = 0;
        for (const auto& r : reports) {
            if (!r.pass) ++failed;
        }
        err << reports.size() - failed << "/" << reports.size() << " oracle checks passed\n";
        return failed == 0 ? kExitOk : kExitVerifyFailed;
    } catch (const std::exception& e) {
        return report_error(e, err);
    }
}

int cmd_plot(const std::string& in_path, const std::vector<std::string>& columns,
             const std::string& out_path, const std::string& title, std::ostream& out,
             std::ostream& err) {
    try {
        std::ifstream in(in_path);
        if (!in) throw ConfigError("cannot open " + in_path);
        const CsvTable table = read_csv(in);
        if (columns.empty()) throw ConfigError("no columns selected");
        if (table.rows.empty()) throw ConfigError("input has no data rows; nothing to plot");

        PlotSpec spec;
        spec.title = title;
        const int t_col = table.column("t");
        spec.x_label = t_col >= 0 ? "t" : "row";
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            spec.x.push_back(t_col >= 0 ? parse_double(table.rows[i].at(static_cast<std::size_t>(t_col)), "t")
                                        : static_cast<double>(i));
        }
        for (const auto& name : columns) {
            const int col = table.column(name);
            if (col < 0) throw ConfigError("column '" + name + "' not found in " + in_path);
            Series s;
            s.name = name;
            for (const auto& r : table.rows) {
                const auto& cell = r.at(static_cast<std::size_t>(col));
                s.values.push_back(cell.empty() || cell == "nan" ? std::numeric_limits<double>::quiet_NaN()
                                                                 : parse_double(cell, name));
            }
            spec.series.push_back(std::move(s));
        }
        const std::string svg = render_svg(spec);
        Sink sink(out_path, out);
        sink.stream() << svg;
        return kExitOk;
    } catch (const std::exception& e) {
        return report_error(e, err);
    }
}

}  // namespace evohealth::cli
