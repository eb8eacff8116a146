#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

namespace fraclap {

using LinearOperator = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

struct SolveReport {
  int iterations = 0;
  bool converged = false;
  /// <B r_k, r_k> / <B r_0, r_0> per iteration, entry 0 is 1.
  std::vector<double> relative_preconditioned_residuals;
  /// Ratio of extreme eigenvalues of the Lanczos tridiagonal built from
  /// the CG coefficients.
  double condition_estimate = 1.0;
  double wall_time = 0.0;
  std::uint64_t seed = 0;
  /// CG step and orthogonalization coefficients, kept so the Lanczos
  /// estimate can be recomputed for any iteration prefix.
  std::vector<double> cg_alphas;
  std::vector<double> cg_betas;
};

struct PcgResult {
  Eigen::VectorXd solution;
  SolveReport report;
};

/// Condition estimate from the first m CG steps (m <= alphas.size()).
double lanczos_condition_estimate(const std::vector<double>& alphas,
                                  const std::vector<double>& betas, int m);

/// Preconditioned conjugate gradients with random initial guess
/// (components i.i.d. uniform on [-1,1] from the seeded generator) and
/// stopping rule <B r_k, r_k> / <B r_0, r_0> <= tol.
///
/// Throws on breakdown (nonpositive <B r, r>, which signals loss of
/// SPD-ness); exceeding max_iter returns converged = false.
PcgResult pcg(const LinearOperator& apply_A, const LinearOperator& apply_B,
              const Eigen::VectorXd& rhs, double tol = 1e-15, int max_iter = 500,
              std::uint64_t seed = 0);

/// Dense condition number of the preconditioned operator BA: assembles
/// both operators column by column and solves the B-symmetrized eigenvalue
/// problem L^T A L with B = L L^T. Throws if either assembled operator
/// fails to be SPD.
double exact_condition_number(const LinearOperator& apply_A, const LinearOperator& apply_B,
                              int dim);

}  // namespace fraclap
