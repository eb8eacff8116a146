// Benchmark front end: runs PCG over an (s, N) grid with the multilevel
// (or exact spectral) preconditioner and emits per-cell iteration counts
// and condition estimates as CSV or JSON. A theory mode runs the operator
// inequality checks instead.
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fraclap/bench.hpp"

namespace {

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write to " << path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

std::vector<double> default_s_values(fraclap::BenchMode mode) {
  std::vector<double> s;
  for (int i = 0; i <= 10; ++i) {
    s.push_back(mode == fraclap::BenchMode::negative ? -1.0 + 0.1 * i : 0.1 * i);
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multilevel preconditioner benchmark for the discrete fractional Laplacian"};

  std::string mode_name = "positive";
  std::vector<double> s_values;
  std::vector<int> n_values;
  int j_levels = 5;
  double tol = 1e-15;
  std::uint64_t seed = 0;
  std::string format_name = "csv";
  std::string output_path;
  std::string preconditioner_name = "multilevel";
  std::string compare_path;

  app.add_option("--mode", mode_name, "positive | negative | theory")
      ->check(CLI::IsMember({"positive", "negative", "theory"}));
  app.add_option("--s", s_values, "exponents (comma list)")->delimiter(',');
  app.add_option("--n", n_values, "finest mesh sizes (comma list)")->delimiter(',');
  app.add_option("--levels", j_levels, "number of mesh levels")->capture_default_str();
  app.add_option("--tol", tol, "PCG tolerance on the relative preconditioned residual")->capture_default_str();
  app.add_option("--seed", seed, "RNG seed for initial guess and right-hand side")->capture_default_str();
  app.add_option("--format", format_name, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", output_path, "output path (default: stdout)");
  app.add_option("--preconditioner", preconditioner_name, "multilevel | spectral")
      ->check(CLI::IsMember({"multilevel", "spectral"}));
  app.add_option("--compare", compare_path, "reference table to diff the results against");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  fraclap::BenchConfig config;
  config.mode = mode_name == "negative"  ? fraclap::BenchMode::negative
                : mode_name == "theory"  ? fraclap::BenchMode::theory
                                         : fraclap::BenchMode::positive;
  config.s_values = s_values.empty() ? default_s_values(config.mode) : s_values;
  config.n_values = n_values.empty() ? std::vector<int>{32, 64, 128, 256, 512} : n_values;
  config.j_levels = j_levels;
  config.tol = tol;
  config.seed = seed;
  config.format = format_name == "json" ? fraclap::OutputFormat::json : fraclap::OutputFormat::csv;
  config.output_path = output_path;
  config.preconditioner = preconditioner_name == "spectral"
                              ? fraclap::PreconditionerKind::spectral
                              : fraclap::PreconditionerKind::multilevel;

  try {
    if (config.mode == fraclap::BenchMode::theory) {
      const std::vector<double> theory_s =
          s_values.empty() ? std::vector<double>{0.25, 0.5, 0.75} : s_values;
      const std::vector<int> theory_n = n_values.empty() ? std::vector<int>{32, 64} : n_values;
      const auto reports = fraclap::run_theory_suite(theory_s, theory_n, j_levels, seed);
      return write_output(fraclap::reports_to_json(reports), output_path);
    }

    const std::vector<fraclap::BenchRow> rows = fraclap::run_benchmark(config);
    const std::string text = config.format == fraclap::OutputFormat::json
                                 ? fraclap::rows_to_json(rows)
                                 : fraclap::rows_to_csv(rows);
    const int rc = write_output(text, output_path);
    if (rc != 0) return rc;

    if (!compare_path.empty()) {
      const fraclap::DiffReport diff = fraclap::compare_to_reference(
          rows, compare_path, fraclap::default_tolerances(config.mode));
      std::cerr << fraclap::diff_to_string(diff);
      if (!diff.all_within) return 1;
    }
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
