#pragma once

#include "newsrec/harness.h"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace newsrec
{

/// Shortest "%.10g" rendering; the same bytes on every platform.
std::string format_number(double v);

/// One row per step: step, approvals, assessments, approval_fraction,
/// approval_fraction_w<window>, excess_differences, mean_queue_len,
/// tagged_0 .. tagged_{n-1}. Undefined fractions are written as NA.
void write_csv(std::ostream& out, const RunRecord& record, std::size_t window);

/// rep_000.csv, ..., mean.csv and run.json (resolved config, seeds,
/// network summaries) under `dir`.
void write_bundle(const std::filesystem::path& dir, const ScenarioResult& result);

/// cell, <axis params...>, approval_fraction_final, approval_fraction_tail,
/// excess_differences_final; values taken from each cell's mean record.
void write_grid_summary(std::ostream& out, const SweepResult& sweep, std::size_t tail_steps);

/// One bundle per cell (cell_000, ...) plus grid_summary.csv.
void write_sweep(const std::filesystem::path& dir, const SweepResult& sweep, std::size_t tail_steps = 100);

} // namespace newsrec
