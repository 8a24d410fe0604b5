#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evohealth/commands.hpp"
#include "evohealth/run_config.hpp"

namespace {

using namespace evohealth::cli;

struct CommonOptions {
    std::string config;
    std::optional<std::string> seed;
    std::string out;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--config", o.config, "Configuration file (defaults to $EVOHEALTH_CONFIG)");
    cmd->add_option("--seed", o.seed, "Seed for the shock process");
    cmd->add_option("--out", o.out, "Output path (stdout when omitted)");
    cmd->allow_extras();
}

// Any flag CLI11 does not know is forwarded as a key=value override.
RunConfig build_config(CLI::App* cmd, const CommonOptions& o, const std::string& stage) {
    Overrides overrides;
    if (!stage.empty()) overrides.emplace_back("stage", stage);
    if (o.seed) overrides.emplace_back("seed", *o.seed);
    if (!o.out.empty()) overrides.emplace_back("out", o.out);
    for (auto& kv : parse_override_args(cmd->remaining())) overrides.push_back(std::move(kv));
    std::optional<std::filesystem::path> path;
    if (!o.config.empty()) path = o.config;
    return load_run_config(path, overrides);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Health-investment growth models: solve, simulate, sweep, verify, plot"};
    app.require_subcommand(1);

    CommonOptions common;
    std::string stage;

    bool csv = false;
    auto* solve = app.add_subcommand("solve", "Optimal policy for one stage at a given state");
    solve->add_option("stage", stage, "stage1, stage2 or stage3")->required();
    solve->add_flag("--csv", csv, "Print a CSV row instead of aligned text");
    add_common(solve, common);

    auto* simulate = app.add_subcommand("simulate", "Run a stage-1 or stage-2 trajectory to CSV");
    simulate->add_option("stage", stage, "stage1 or stage2");
    add_common(simulate, common);

    SweepSpec sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Solve over a grid of one parameter");
    sweep_cmd->add_option("stage", stage, "stage1, stage2 or stage3");
    sweep_cmd->add_option("--param", sweep.param, "Parameter to sweep")->required();
    sweep_cmd->add_option("--from", sweep.from, "First grid value")->required();
    sweep_cmd->add_option("--to", sweep.to, "Last grid value")->required();
    sweep_cmd->add_option("--steps", sweep.steps, "Number of grid points")->capture_default_str();
    sweep_cmd->add_option("--fd-step", sweep.h, "Finite-difference step for stage-3 derivatives")
        ->capture_default_str();
    add_common(sweep_cmd, common);

    std::string verify_stage = "all";
    std::optional<double> tolerance;
    std::string verify_out;
    auto* verify = app.add_subcommand("verify", "Check closed forms against brute-force oracles");
    verify->add_option("--stage", verify_stage, "stage1, stage2, stage3 or all")->capture_default_str();
    verify->add_option("--tolerance", tolerance, "Override every oracle bound");
    verify->add_option("--out", verify_out, "Report CSV path (stdout when omitted)");

    std::string plot_in, plot_out, title;
    std::vector<std::string> columns;
    auto* plot = app.add_subcommand("plot", "Render CSV columns over t as an SVG line chart");
    plot->add_option("--in", plot_in, "Input CSV")->required();
    plot->add_option("--columns", columns, "Columns to plot")->required()->delimiter(',');
    plot->add_option("--out", plot_out, "Output SVG (stdout when omitted)");
    plot->add_option("--title", title, "Chart title");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve) {
            return cmd_solve(stage, build_config(solve, common, stage), csv, std::cout, std::cerr);
        }
        if (*simulate) return cmd_simulate(build_config(simulate, common, stage), std::cout, std::cerr);
        if (*sweep_cmd) return cmd_sweep(build_config(sweep_cmd, common, stage), sweep, std::cout, std::cerr);
        if (*verify) return cmd_verify(verify_stage, tolerance, verify_out, std::cout, std::cerr);
        if (*plot) return cmd_plot(plot_in, columns, plot_out, title, std::cout, std::cerr);
    } catch (const std::exception& e) {
        return report_error(e, std::cerr);
    }
    return kExitUsage;
}
