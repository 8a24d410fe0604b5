#pragma once

#include <exception>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "evohealth/run_config.hpp"

namespace evohealth::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitUsage = 2,
    kExitNoSolution = 3,
};

// Maps a library exception to the CLI exit code and prints its message to `err`.
int report_error(const std::exception& e, std::ostream& err);

// Prints x*, y*, n* (plus c*, regime, thresholds where they apply) for one stage.
int cmd_solve(const std::string& stage, const RunConfig& cfg, bool csv, std::ostream& out,
              std::ostream& err);

// Runs the configured stage over a generated or replayed adversity path and writes the
// series CSV to cfg.out (stdout when empty); the summary goes to `out` in that case only
// when a file was written.
int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err);

struct SweepSpec {
    std::string param;
    double from = 0.0;
    double to = 1.0;
    int steps = 11;
    double h = 1e-4;  // finite-difference step for stage-3 derivatives
};

int cmd_sweep(const RunConfig& cfg, const SweepSpec& sweep, std::ostream& out, std::ostream& err);

// Oracle suite; exit 0 iff every report passes.
int cmd_verify(const std::string& stage, std::optional<double> tolerance, const std::string& out_path,
               std::ostream& out, std::ostream& err);

// Renders columns of a CSV (over its t column, or the row index) to an SVG file.
int cmd_plot(const std::string& in_path, const std::vector<std::string>& columns,
             const std::string& out_path, const std::string& title, std::ostream& out,
             std::ostream& err);

}  // namespace evohealth::cli
