#include "fraclap/theory.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "fraclap/assembly.hpp"
#include "fraclap/spectral.hpp"

namespace fraclap {

namespace {

Eigen::MatrixXd random_orthogonal(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd G(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) G(i, j) = gauss(rng);
  return Eigen::HouseholderQR<Eigen::MatrixXd>(G).householderQ();
}

// Q D Q^T with D log-uniform in [1e-2, 1e2].
Eigen::MatrixXd random_spd(int dim, std::mt19937_64& rng) {
  const Eigen::MatrixXd Q = random_orthogonal(dim, rng);
  std::uniform_real_distribution<double> log_range(std::log(1e-2), std::log(1e2));
  Eigen::VectorXd d(dim);
  for (int i = 0; i < dim; ++i) d(i) = std::exp(log_range(rng));
  return Q * d.asDiagonal() * Q.transpose();
}

Eigen::MatrixXd random_psd(int dim, std::mt19937_64& rng) {
  const Eigen::MatrixXd Q = random_orthogonal(dim, rng);
  std::uniform_real_distribution<double> range(0.0, 10.0);
  Eigen::VectorXd d(dim);
  for (int i = 0; i < dim; ++i) d(i) = range(rng);
  return Q * d.asDiagonal() * Q.transpose();
}

Eigen::MatrixXd symmetric_power(const Eigen::MatrixXd& A, double s) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (A + A.transpose()));
  const Eigen::VectorXd powers =
      solver.eigenvalues().array().unaryExpr([s](double l) { return std::pow(l, s); }).matrix();
  return solver.eigenvectors() * powers.asDiagonal() * solver.eigenvectors().transpose();
}

double min_eigenvalue(const Eigen::MatrixXd& S) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (S + S.transpose()),
                                                        Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

double max_eigenvalue(const Eigen::MatrixXd& S) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (S + S.transpose()),
                                                        Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(S.rows() - 1);
}

}  // namespace

InequalityReport check_loewner_heinz(int dim, int trials, double s, std::uint64_t seed) {
  InequalityReport report;
  report.name = "loewner_heinz";
  report.trials = trials;
  report.constants["s"] = s;

  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Eigen::MatrixXd A = random_spd(dim, rng);
    const Eigen::MatrixXd B = A + random_psd(dim, rng);
    const Eigen::MatrixXd diff = symmetric_power(B, s) - symmetric_power(A, s);
    const double scale = max_eigenvalue(symmetric_power(B, s));
    worst = std::min(worst, min_eigenvalue(diff) / scale);
  }
  report.worst_violation = worst;
  return report;
}

InequalityReport check_subspace_inequality(const MeshHierarchy& hierarchy, double s) {
  InequalityReport report;
  report.name = "subspace_fractional_estimate";
  report.constants["s"] = s;

  double worst = 0.0;
  double largest_gap = 0.0;
  int pairs = 0;
  for (int k = 0; k + 1 < hierarchy.num_levels(); ++k, ++pairs) {
    const MeshLevel& coarse = hierarchy.level(k);
    const MeshLevel& fine = hierarchy.level(k + 1);

    const Eigen::MatrixXd coarse_form =
        FractionalOperator::create(assemble_stiffness(coarse), assemble_mass(coarse), s)
            .dense_apply_matrix();
    const Eigen::MatrixXd fine_form =
        FractionalOperator::create(assemble_stiffness(fine), assemble_mass(fine), s)
            .dense_apply_matrix();
    const Eigen::MatrixXd P = hierarchy.prolongation_matrix(k);
    const Eigen::MatrixXd conjugated = P.transpose() * fine_form * P;

    const Eigen::MatrixXd diff = coarse_form - conjugated;
    const double scale = max_eigenvalue(coarse_form);
    worst = std::min(worst, min_eigenvalue(diff) / scale);
    largest_gap = std::max(largest_gap, max_eigenvalue(diff) / scale);
  }
  report.trials = pairs;
  report.worst_violation = worst;
  report.constants["largest_relative_gap"] = largest_gap;
  return report;
}

InequalityReport check_smoother_bounds(const MeshLevel& level, double s) {
  InequalityReport report;
  report.name = "smoother_stability_constants";
  report.trials = 1;
  report.constants["s"] = s;

  const SymTridiagonal stiffness = assemble_stiffness(level);
  const SymTridiagonal mass = assemble_mass(level);
  const SpectralDecomposition dec = decompose(stiffness, mass);
  const double lambda_max_s = std::pow(dec.eigenvalues(dec.dim() - 1), s);

  const Eigen::VectorXd smoother_diag =
      (mass.diagonal().array().pow(1.0 - s) * stiffness.diagonal().array().pow(s))
          .inverse()
          .matrix();
  const Eigen::MatrixXd R = smoother_diag.asDiagonal();

  // c1 |v|^2 / lambda_max^s <= <R v, v>: smallest eigenvalue of (R, M^{-1}).
  const Eigen::MatrixXd mass_inverse = mass.dense().inverse();
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> lower(R, mass_inverse,
                                                                  Eigen::EigenvaluesOnly |
                                                                      Eigen::Ax_lBx);
  const double c1 = lambda_max_s * lower.eigenvalues()(0);

  // <R v, v> <= c2 <A^{-s} v, v>: largest eigenvalue of (R, (A^s)^{-1}).
  const Eigen::MatrixXd fractional_inverse =
      FractionalOperator(dec, mass, s).dense_solve_matrix();
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> upper(R, fractional_inverse,
                                                                  Eigen::EigenvaluesOnly |
                                                                      Eigen::Ax_lBx);
  const double c2 = upper.eigenvalues()(upper.eigenvalues().size() - 1);

  report.constants["c1"] = c1;
  report.constants["c2"] = c2;
  report.worst_violation = (c1 > 0.0 && std::isfinite(c2)) ? 0.0 : -1.0;
  return report;
}

}  // namespace fraclap
