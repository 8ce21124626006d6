/// Grid-refinement driver: solves a problem over a sequence of levels,
/// computes the scaled error norms (error norm over exact-solution norm,
/// both discrete), and renders the table/CSV output.
///
/// Observed orders are log2 ratios between consecutive levels whose cell
/// counts double; they are computed from the printed 6-digit values so a
/// parsed CSV re-emits byte-identically.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stokesmac/problems.hpp"
#include "stokesmac/stokes_solver.hpp"

namespace stokesmac {

struct LevelResult {
    int n = 0;
    double eu_l2 = 0, ep_l2 = 0, eu_h1 = 0, eu_max = 0, eu_gradmax = 0;  // scaled
    SolverStats stats;
};

struct ConvergenceReport {
    std::string problem;
    std::vector<LevelResult> levels;
    std::string error;  // nonempty when a level aborted the study
};

struct StudyOptions {
    double tol = 0.0;  // 0: solver default per level
    bool parallel_levels = false;
    bool allow_large = false;  // required for N > 512
};

/// Scaled errors of a solved field triple against the exact solution.
LevelResult measure_level(const ProblemSpec& problem, const StaggeredGrid& grid,
                          const StokesFields& sol, const SolverStats& stats);

LevelResult run_level(const ProblemSpec& problem, int n, double tol = 0.0);

ConvergenceReport run_study(const ProblemSpec& problem, const std::vector<int>& levels,
                            const StudyOptions& options = {});

enum class ReportFormat { Table, Csv };

std::string emit(const ConvergenceReport& report, ReportFormat format,
                 bool include_timing = true);

/// Parses the CSV produced by emit; throws on malformed input.
ConvergenceReport parse_csv(const std::string& text);

}  // namespace stokesmac
