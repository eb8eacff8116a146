#include "fraclap/assembly.hpp"

#include <stdexcept>

namespace fraclap {

namespace {

// All leading pivots of the LDL^T factorization positive.
bool tridiagonal_spd(const Eigen::VectorXd& diag, const Eigen::VectorXd& off) {
  double pivot = diag(0);
  if (pivot <= 0.0) return false;
  for (Eigen::Index i = 1; i < diag.size(); ++i) {
    pivot = diag(i) - off(i - 1) * off(i - 1) / pivot;
    if (pivot <= 0.0) return false;
  }
  return true;
}

}  // namespace

SymTridiagonal::SymTridiagonal(Eigen::VectorXd diag, Eigen::VectorXd off_diag)
    : diag_(std::move(diag)), off_(std::move(off_diag)) {
  if (diag_.size() < 1 || off_.size() != diag_.size() - 1) {
    throw std::invalid_argument("SymTridiagonal: off-diagonal must have size dim-1");
  }
  is_spd_ = tridiagonal_spd(diag_, off_);
}

Eigen::VectorXd SymTridiagonal::apply(const Eigen::VectorXd& x) const {
  if (x.size() != diag_.size()) {
    throw std::invalid_argument("SymTridiagonal::apply: dimension mismatch");
  }
  const Eigen::Index n = diag_.size();
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double v = diag_(i) * x(i);
    if (i > 0) v += off_(i - 1) * x(i - 1);
    if (i + 1 < n) v += off_(i) * x(i + 1);
    y(i) = v;
  }
  return y;
}

Eigen::MatrixXd SymTridiagonal::dense() const {
  const Eigen::Index n = diag_.size();
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
  D.diagonal() = diag_;
  if (n > 1) {
    D.diagonal(1) = off_;
    D.diagonal(-1) = off_;
  }
  return D;
}

SymTridiagonal assemble_stiffness(const MeshLevel& level) {
  const int n = level.n_interior_dofs;
  if (n < 1) throw std::invalid_argument("assemble_stiffness: no interior dofs");
  const double h = level.h;
  return SymTridiagonal(Eigen::VectorXd::Constant(n, 2.0 / h),
                        Eigen::VectorXd::Constant(std::max(n - 1, 0), -1.0 / h));
}

SymTridiagonal assemble_mass(const MeshLevel& level) {
  const int n = level.n_interior_dofs;
  if (n < 1) throw std::invalid_argument("assemble_mass: no interior dofs");
  const double h = level.h;
  return SymTridiagonal(Eigen::VectorXd::Constant(n, 2.0 * h / 3.0),
                        Eigen::VectorXd::Constant(std::max(n - 1, 0), h / 6.0));
}

}  // namespace fraclap
