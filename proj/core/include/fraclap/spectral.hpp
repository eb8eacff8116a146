#pragma once

#include <Eigen/Dense>

#include "fraclap/assembly.hpp"

namespace fraclap {

/// Eigenpairs of the generalized pencil A u = lambda M u, eigenvalues
/// ascending and eigenvectors M-orthonormal: U^T M U = I, U^T A U = diag(lambda).
/// Each eigenvector's sign is fixed so its largest-magnitude entry is
/// positive (lowest index on ties).
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;

  int dim() const { return static_cast<int>(eigenvalues.size()); }
};

/// Full generalized eigendecomposition via Cholesky reduction of the mass
/// matrix. Throws if the mass matrix is not SPD.
SpectralDecomposition decompose(const SymTridiagonal& stiffness, const SymTridiagonal& mass);

/// Matrix realization of the fractional operator A^s through the spectral
/// decomposition of the (stiffness, mass) pencil:
///   apply: x -> (M U) Lambda^s (M U)^T x   (primal in, dual out)
///   solve: b -> U Lambda^{-s} U^T b        (dual in, primal out)
class FractionalOperator {
public:
  FractionalOperator(SpectralDecomposition decomposition, const SymTridiagonal& mass, double s);

  static FractionalOperator create(const SymTridiagonal& stiffness, const SymTridiagonal& mass,
                                   double s);

  int dim() const { return static_cast<int>(lambda_pow_.size()); }
  double exponent() const { return s_; }
  const SpectralDecomposition& decomposition() const { return dec_; }

  Eigen::VectorXd apply(const Eigen::VectorXd& primal) const;
  Eigen::VectorXd solve(const Eigen::VectorXd& dual) const;

  /// Dense matrix of apply (tests and oracles).
  Eigen::MatrixXd dense_apply_matrix() const;
  /// Dense matrix of solve.
  Eigen::MatrixXd dense_solve_matrix() const;

private:
  SpectralDecomposition dec_;
  Eigen::MatrixXd mass_times_evec_;  // M U
  Eigen::VectorXd lambda_pow_;       // Lambda^s
  double s_;
};

/// Relative operator-norm defect of M^{-1}A^s . M^{-1}A^t = M^{-1}A^{s+t},
/// evaluated densely from a single decomposition.
double group_property_defect(const SpectralDecomposition& dec, const SymTridiagonal& mass,
                             double s, double t);

}  // namespace fraclap
