#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "fraclap/mesh.hpp"

namespace fraclap {

/// Result of a numerical check of an operator inequality. Violations are
/// reported, not thrown: worst_violation is the most negative eigenvalue
/// of the difference operator across all trials, normalized by the
/// operator scale, and should stay above -1e-9 for every inequality
/// backed by theory.
struct InequalityReport {
  std::string name;
  int trials = 0;
  double worst_violation = 0.0;
  /// Auxiliary measured quantities (e.g. best stability constants).
  std::map<std::string, double> constants;
};

/// Operator monotonicity of x -> x^s: draws random SPD A and PSD E,
/// sets B = A + E, and measures min-eig(B^s - A^s) over the trials.
InequalityReport check_loewner_heinz(int dim, int trials, double s, std::uint64_t seed);

/// Subspace estimate for fractional powers: on each adjacent level pair
/// the coarse-space quadratic form of the conjugated fine fractional
/// operator is bounded by the coarse fractional operator's form. Equality
/// holds at s = 0 and s = 1 by Galerkin inheritance.
InequalityReport check_subspace_inequality(const MeshHierarchy& hierarchy, double s);

/// Measures the best stability constants c1, c2 of the diagonal smoother:
///   c1 |v|^2 / lambda_max^s <= <R v, v> <= c2 <A^{-s} v, v>,
/// by dense generalized eigensolves, and reports them.
InequalityReport check_smoother_bounds(const MeshLevel& level, double s);

}  // namespace fraclap
