#include "fraclap/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fraclap/krylov.hpp"
#include "fraclap/preconditioner.hpp"
#include "fraclap/spectral.hpp"

namespace fraclap {

void validate(const BenchConfig& config) {
  if (config.s_values.empty() || config.n_values.empty()) {
    throw std::invalid_argument("benchmark grid is empty");
  }
  if (config.j_levels < 1) throw std::invalid_argument("j_levels must be >= 1");
  if (config.tol <= 0.0) throw std::invalid_argument("tol must be positive");
  for (double s : config.s_values) {
    if (config.mode == BenchMode::positive && (s < 0.0 || s > 1.0)) {
      throw std::invalid_argument("positive mode requires s in [0,1]");
    }
    if (config.mode == BenchMode::negative && (s < -1.0 || s > 0.0)) {
      throw std::invalid_argument("negative mode requires s in [-1,0]");
    }
  }
  const int factor = 1 << (config.j_levels - 1);
  for (int n : config.n_values) {
    if (n % factor != 0 || n / factor < 2) {
      throw std::invalid_argument("n = " + std::to_string(n) +
                                  " incompatible with j_levels = " +
                                  std::to_string(config.j_levels));
    }
  }
}

namespace {

Eigen::VectorXd random_rhs(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  Eigen::VectorXd f(n);
  for (int i = 0; i < n; ++i) f(i) = uniform(rng);
  return f;
}

std::string format_double(double v, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

}  // namespace

std::vector<BenchRow> run_benchmark(const BenchConfig& config) {
  validate(config);
  std::vector<BenchRow> rows;
  rows.reserve(config.s_values.size() * config.n_values.size());

  for (int n_elements : config.n_values) {
    const MeshHierarchy hierarchy = MeshHierarchy::build(n_elements, config.j_levels);
    const MeshLevel& fine = hierarchy.finest();
    const SymTridiagonal mass = assemble_mass(fine);
    const SpectralDecomposition dec = decompose(assemble_stiffness(fine), mass);

    for (double s : config.s_values) {
      const FractionalOperator system(dec, mass, s);
      LinearOperator apply_A = [&system](const Eigen::VectorXd& x) { return system.apply(x); };

      LinearOperator apply_B;
      std::optional<MultilevelPreconditioner> multilevel;
      std::optional<SandwichPreconditioner> sandwich;
      std::optional<FractionalOperator> spectral;
      if (config.preconditioner == PreconditionerKind::spectral) {
        spectral.emplace(dec, mass, s);
        apply_B = [&op = *spectral](const Eigen::VectorXd& b) { return op.solve(b); };
      } else if (config.mode == BenchMode::negative) {
        sandwich.emplace(hierarchy, s);
        apply_B = [&op = *sandwich](const Eigen::VectorXd& b) { return op.apply(b); };
      } else {
        multilevel.emplace(hierarchy, s);
        apply_B = [&op = *multilevel](const Eigen::VectorXd& b) { return op.apply(b); };
      }

      const Eigen::VectorXd rhs = random_rhs(fine.n_interior_dofs, config.seed + 1);

      BenchRow row;
      row.s = s;
      row.N = n_elements;
      row.J = config.j_levels;
      row.seed = config.seed;
      try {
        PcgResult result = pcg(apply_A, apply_B, rhs, config.tol, config.max_iter, config.seed);
        row.iterations = result.report.iterations;
        row.converged = result.report.converged;
        row.condition_estimate = result.report.condition_estimate;
        row.wall_time = result.report.wall_time;
      } catch (const std::runtime_error&) {
        row.converged = false;
      }
      if (n_elements <= config.exact_condition_max_n) {
        row.exact_condition = exact_condition_number(apply_A, apply_B, fine.n_interior_dofs);
      }
      rows.push_back(row);
    }
  }

  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    if (a.s != b.s) return a.s < b.s;
    return a.N < b.N;
  });
  return rows;
}

std::string rows_to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "s,N,J,iterations,condition_estimate,exact_condition,wall_time,seed\n";
  for (const BenchRow& row : rows) {
    out << format_double(row.s, "%g") << ',' << row.N << ',' << row.J << ',' << row.iterations
        << ',' << format_double(row.condition_estimate, "%.6g") << ',';
    if (row.exact_condition) out << format_double(*row.exact_condition, "%.6g");
    out << ',' << format_double(row.wall_time, "%.6f") << ',' << row.seed << '\n';
  }
  return out.str();
}

std::string rows_to_json(const std::vector<BenchRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const BenchRow& row : rows) {
    nlohmann::json j{{"s", row.s},
                     {"N", row.N},
                     {"J", row.J},
                     {"iterations", row.iterations},
                     {"converged", row.converged},
                     {"condition_estimate", row.condition_estimate},
                     {"wall_time", row.wall_time},
                     {"seed", row.seed}};
    if (row.exact_condition) j["exact_condition"] = *row.exact_condition;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

CompareTolerances default_tolerances(BenchMode mode) {
  if (mode == BenchMode::negative) {
    return CompareTolerances{0.20, 5, 0.25};
  }
  return CompareTolerances{0.15, 3, 0.20};
}

namespace {

struct ReferenceCell {
  double s;
  int N;
  int iterations;
  double condition;
};

std::vector<ReferenceCell> parse_reference(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open reference file: " + path);
  std::vector<ReferenceCell> cells;
  std::string line;
  bool header_skipped = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_skipped) {
      header_skipped = true;  // s,N,iterations,condition
      continue;
    }
    std::istringstream ls(line);
    ReferenceCell cell{};
    char comma = 0;
    if (!(ls >> cell.s >> comma >> cell.N >> comma >> cell.iterations >> comma >>
          cell.condition)) {
      throw std::runtime_error("malformed reference line: " + line);
    }
    cells.push_back(cell);
  }
  return cells;
}

}  // namespace

DiffReport compare_to_reference(const std::vector<BenchRow>& rows,
                                const std::string& reference_path,
                                const CompareTolerances& tolerances) {
  const std::vector<ReferenceCell> reference = parse_reference(reference_path);
  DiffReport report;
  for (const BenchRow& row : rows) {
    auto it = std::find_if(reference.begin(), reference.end(), [&row](const ReferenceCell& c) {
      return c.N == row.N && std::abs(c.s - row.s) < 1e-9;
    });
    if (it == reference.end()) {
      report.missing.push_back("s=" + format_double(row.s, "%g") +
                               " N=" + std::to_string(row.N));
      continue;
    }
    CellDiff diff;
    diff.s = row.s;
    diff.N = row.N;
    diff.condition_rel_dev = std::abs(row.condition_estimate - it->condition) / it->condition;
    diff.iteration_abs_dev = std::abs(row.iterations - it->iterations);
    const double iter_allowance =
        std::max(static_cast<double>(tolerances.iteration_floor),
                 tolerances.iteration_rel * it->iterations);
    diff.within = row.converged && diff.condition_rel_dev <= tolerances.condition_rel &&
                  diff.iteration_abs_dev <= iter_allowance;
    if (!diff.within) report.all_within = false;
    report.cells.push_back(diff);
  }
  return report;
}

std::string diff_to_string(const DiffReport& report) {
  std::ostringstream out;
  for (const CellDiff& cell : report.cells) {
    out << (cell.within ? "ok  " : "FAIL") << " s=" << format_double(cell.s, "%g")
        << " N=" << cell.N << " cond_dev=" << format_double(cell.condition_rel_dev, "%.3f")
        << " iter_dev=" << cell.iteration_abs_dev << '\n';
  }
  for (const std::string& m : report.missing) {
    out << "no reference for " << m << '\n';
  }
  out << (report.all_within ? "comparison passed" : "comparison FAILED") << '\n';
  return out.str();
}

std::vector<InequalityReport> run_theory_suite(const std::vector<double>& s_values,
                                               const std::vector<int>& n_values, int j_levels,
                                               std::uint64_t seed) {
  std::vector<InequalityReport> reports;
  for (double s : s_values) {
    reports.push_back(check_loewner_heinz(10, 200, s, seed));
    for (int n : n_values) {
      const MeshHierarchy hierarchy = MeshHierarchy::build(n, j_levels);
      reports.push_back(check_subspace_inequality(hierarchy, s));
      reports.push_back(check_smoother_bounds(hierarchy.finest(), s));
    }
  }
  return reports;
}

std::string reports_to_json(const std::vector<InequalityReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const InequalityReport& r : reports) {
    nlohmann::json j{{"name", r.name},
                     {"trials", r.trials},
                     {"worst_violation", r.worst_violation}};
    for (const auto& [key, value] : r.constants) j[key] = value;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace fraclap
