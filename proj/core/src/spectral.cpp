#include "fraclap/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace fraclap {

namespace {

void fix_eigenvector_signs(Eigen::MatrixXd& U) {
  for (Eigen::Index j = 0; j < U.cols(); ++j) {
    Eigen::Index imax = 0;
    double best = 0.0;
    for (Eigen::Index i = 0; i < U.rows(); ++i) {
      const double a = std::abs(U(i, j));
      if (a > best) {
        best = a;
        imax = i;
      }
    }
    if (U(imax, j) < 0.0) U.col(j) = -U.col(j);
  }
}

Eigen::VectorXd eigenvalue_powers(const Eigen::VectorXd& lambda, double s) {
  return lambda.array().log().unaryExpr([s](double l) { return std::exp(s * l); }).matrix();
}

}  // namespace

SpectralDecomposition decompose(const SymTridiagonal& stiffness, const SymTridiagonal& mass) {
  if (stiffness.dim() != mass.dim()) {
    throw std::invalid_argument("decompose: pencil dimensions differ");
  }
  if (!mass.is_spd()) {
    throw std::runtime_error("decompose: mass matrix is not SPD");
  }
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      stiffness.dense(), mass.dense(), Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("decompose: generalized eigensolver failed");
  }
  SpectralDecomposition dec;
  dec.eigenvalues = solver.eigenvalues();
  dec.eigenvectors = solver.eigenvectors();
  fix_eigenvector_signs(dec.eigenvectors);
  return dec;
}

FractionalOperator::FractionalOperator(SpectralDecomposition decomposition,
                                       const SymTridiagonal& mass, double s)
    : dec_(std::move(decomposition)), s_(s) {
  if (dec_.dim() != mass.dim()) {
    throw std::invalid_argument("FractionalOperator: decomposition/mass dimension mismatch");
  }
  if ((dec_.eigenvalues.array() <= 0.0).any()) {
    throw std::runtime_error("FractionalOperator: nonpositive eigenvalue in SPD pencil");
  }
  mass_times_evec_ = mass.dense() * dec_.eigenvectors;
  lambda_pow_ = eigenvalue_powers(dec_.eigenvalues, s_);
}

FractionalOperator FractionalOperator::create(const SymTridiagonal& stiffness,
                                              const SymTridiagonal& mass, double s) {
  return FractionalOperator(decompose(stiffness, mass), mass, s);
}

Eigen::VectorXd FractionalOperator::apply(const Eigen::VectorXd& primal) const {
  if (primal.size() != dim()) {
    throw std::invalid_argument("FractionalOperator::apply: dimension mismatch");
  }
  return mass_times_evec_ *
         lambda_pow_.cwiseProduct(mass_times_evec_.transpose() * primal);
}

Eigen::VectorXd FractionalOperator::solve(const Eigen::VectorXd& dual) const {
  if (dual.size() != dim()) {
    throw std::invalid_argument("FractionalOperator::solve: dimension mismatch");
  }
  return dec_.eigenvectors *
         lambda_pow_.cwiseInverse().cwiseProduct(dec_.eigenvectors.transpose() * dual);
}

Eigen::MatrixXd FractionalOperator::dense_apply_matrix() const {
  return mass_times_evec_ * lambda_pow_.asDiagonal() * mass_times_evec_.transpose();
}

Eigen::MatrixXd FractionalOperator::dense_solve_matrix() const {
  return dec_.eigenvectors * lambda_pow_.cwiseInverse().asDiagonal() *
         dec_.eigenvectors.transpose();
}

double group_property_defect(const SpectralDecomposition& dec, const SymTridiagonal& mass,
                             double s, double t) {
  // M^{-1} A^s = U Lambda^s U^{-1}, with U^{-1} = U^T M by M-orthonormality.
  const Eigen::MatrixXd Uinv = dec.eigenvectors.transpose() * mass.dense();
  auto power = [&](double e) {
    return Eigen::MatrixXd(dec.eigenvectors * eigenvalue_powers(dec.eigenvalues, e).asDiagonal() *
                           Uinv);
  };
  const Eigen::MatrixXd product = power(s) * power(t);
  const Eigen::MatrixXd target = power(s + t);
  const double target_norm = target.jacobiSvd().singularValues()(0);
  const double defect_norm = (product - target).jacobiSvd().singularValues()(0);
  return defect_norm / target_norm;
}

}  // namespace fraclap
