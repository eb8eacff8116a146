#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fraclap/theory.hpp"

namespace fraclap {

enum class BenchMode { positive, negative, theory };
enum class PreconditionerKind { multilevel, spectral };
enum class OutputFormat { csv, json };

struct BenchConfig {
  BenchMode mode = BenchMode::positive;
  std::vector<double> s_values;
  std::vector<int> n_values;
  int j_levels = 5;
  double tol = 1e-15;
  int max_iter = 500;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::csv;
  std::string output_path;
  PreconditionerKind preconditioner = PreconditionerKind::multilevel;
  /// Dense exact condition numbers are attached only for grids at or
  /// below this size.
  int exact_condition_max_n = 128;
};

/// Throws std::invalid_argument on sign/mode mismatches or non-divisible
/// grid sizes.
void validate(const BenchConfig& config);

struct BenchRow {
  double s = 0.0;
  int N = 0;
  int J = 0;
  int iterations = 0;
  bool converged = false;
  double condition_estimate = 1.0;
  std::optional<double> exact_condition;
  double wall_time = 0.0;
  std::uint64_t seed = 0;
};

/// One row per (s, N) pair, ordered by (s, N). Positive mode solves with
/// the additive multilevel preconditioner, negative mode with the sandwich
/// operator; --preconditioner spectral swaps in the exact fractional
/// inverse for either mode.
std::vector<BenchRow> run_benchmark(const BenchConfig& config);

/// Header: s,N,J,iterations,condition_estimate,exact_condition,wall_time,seed
std::string rows_to_csv(const std::vector<BenchRow>& rows);
std::string rows_to_json(const std::vector<BenchRow>& rows);

struct CellDiff {
  double s = 0.0;
  int N = 0;
  double condition_rel_dev = 0.0;
  int iteration_abs_dev = 0;
  bool within = true;
};

struct DiffReport {
  std::vector<CellDiff> cells;
  std::vector<std::string> missing;  // rows with no reference entry
  bool all_within = true;
};

struct CompareTolerances {
  double condition_rel = 0.15;
  int iteration_floor = 3;
  double iteration_rel = 0.20;
};

CompareTolerances default_tolerances(BenchMode mode);

/// Reference files are CSV with header s,N,iterations,condition and '#'
/// comment lines.
DiffReport compare_to_reference(const std::vector<BenchRow>& rows,
                                const std::string& reference_path,
                                const CompareTolerances& tolerances);

std::string diff_to_string(const DiffReport& report);

/// Inequality suite behind the CLI's theory mode.
std::vector<InequalityReport> run_theory_suite(const std::vector<double>& s_values,
                                               const std::vector<int>& n_values, int j_levels,
                                               std::uint64_t seed);

std::string reports_to_json(const std::vector<InequalityReport>& reports);

}  // namespace fraclap
