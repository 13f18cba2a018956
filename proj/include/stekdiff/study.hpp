#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stekdiff/analysis.hpp"
#include "stekdiff/problem.hpp"

namespace stekdiff {

enum class ReportFormat { Table, Csv, Json };

/// Parses "table" | "csv" | "json"; throws std::invalid_argument otherwise.
ReportFormat parse_format(const std::string& name);
std::string to_string(ReportFormat f);

/// Everything a convergence study needs.  `grids` holds (N, N_T) pairs; with
/// equal_steps set, N == N_T is enforced for every pair.  The built-in
/// problem source is the manufactured family ("mms"); custom problems are
/// supplied programmatically through the run_study overload.
struct StudyConfig {
    double nu = 0.5;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double horizon = 1.0;
    std::vector<std::pair<int, int>> grids = {{160, 160}, {320, 320}, {640, 640}};
    bool equal_steps = true;
    bool norm_l2 = true;
    bool norm_c = true;
    ReportFormat format = ReportFormat::Table;
    std::string problem = "mms";
};

/// One grid's outcome.  Errors are maxima over all layers 0..N_T of the
/// respective norm of the error field.
struct GridResult {
    int n_space = 0;
    int n_time = 0;
    double h = 0.0;
    double tau = 0.0;
    double err_l2 = 0.0;
    double err_c = 0.0;
    double elapsed_ms = 0.0; ///< timing metadata; never serialized
};

struct StudyReport {
    StudyConfig config;
    std::vector<GridResult> rows;
    std::vector<double> co_l2; ///< observed orders between consecutive rows
    std::vector<double> co_c;
    StabilityVerdict stability;
    std::vector<std::string> warnings;
};

/// Runs the study on the manufactured problem family (config.problem must be
/// "mms").  Grids run concurrently; results are collected in grid order, so
/// reports are deterministic.  Throws std::invalid_argument on config
/// errors; DegenerateSystem propagates from the solver.
StudyReport run_study(const StudyConfig& config);

/// Same study driver for a caller-supplied problem with known exact
/// solution.  Validation warnings (e.g. an asymmetric k) land in the report.
StudyReport run_study(const StudyConfig& config, const ProblemSpec& p,
                      const SpaceTimeFn& exact);

/// Renders the report.  The csv and json bodies are deterministic: the same
/// report yields byte-identical output (timing metadata is excluded).
std::string emit_report(const StudyReport& report, ReportFormat format);

/// Parses a json report back (round-trip counterpart of emit_report).
StudyReport report_from_json(const std::string& text);

} // namespace stekdiff
