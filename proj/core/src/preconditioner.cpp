#include "fraclap/preconditioner.hpp"

#include <cmath>
#include <stdexcept>

namespace fraclap {

namespace {

FractionalOperator make_coarse_solver(const MeshHierarchy& hierarchy, double s) {
  if (s < 0.0 || s > 1.0) {
    throw std::invalid_argument("MultilevelPreconditioner: s must be in [0,1]");
  }
  const MeshLevel& coarse = hierarchy.coarsest();
  return FractionalOperator::create(assemble_stiffness(coarse), assemble_mass(coarse), s);
}

}  // namespace

MultilevelPreconditioner::MultilevelPreconditioner(MeshHierarchy hierarchy, double s)
    : hierarchy_(std::move(hierarchy)), s_(s), coarse_solver_(make_coarse_solver(hierarchy_, s)) {
  const int levels = hierarchy_.num_levels();
  smoother_diags_.resize(static_cast<std::size_t>(levels));
  for (int k = 1; k < levels; ++k) {
    const SymTridiagonal stiffness = assemble_stiffness(hierarchy_.level(k));
    const SymTridiagonal mass = assemble_mass(hierarchy_.level(k));
    smoother_diags_[static_cast<std::size_t>(k)] =
        (mass.diagonal().array().pow(1.0 - s) * stiffness.diagonal().array().pow(s))
            .inverse()
            .matrix();
  }
}

const Eigen::VectorXd& MultilevelPreconditioner::smoother_diagonal(int level) const {
  if (level < 1 || level >= num_levels()) {
    throw std::out_of_range("smoother_diagonal: level out of range");
  }
  return smoother_diags_[static_cast<std::size_t>(level)];
}

Eigen::VectorXd MultilevelPreconditioner::apply(const Eigen::VectorXd& dual) const {
  if (dual.size() != dim()) {
    throw std::invalid_argument("MultilevelPreconditioner::apply: dimension mismatch");
  }
  const int levels = hierarchy_.num_levels();

  // Cascade the dual vector down through the levels.
  std::vector<Eigen::VectorXd> duals(static_cast<std::size_t>(levels));
  duals[static_cast<std::size_t>(levels - 1)] = dual;
  for (int k = levels - 1; k > 0; --k) {
    duals[static_cast<std::size_t>(k - 1)] =
        hierarchy_.restrict_dual(k - 1, duals[static_cast<std::size_t>(k)]);
  }

  // Exact coarse solve, then accumulate smoothed corrections upward.
  Eigen::VectorXd y = coarse_solver_.solve(duals[0]);
  for (int k = 1; k < levels; ++k) {
    y = hierarchy_.prolongate(k - 1, y) +
        smoother_diags_[static_cast<std::size_t>(k)].cwiseProduct(
            duals[static_cast<std::size_t>(k)]);
  }
  return y;
}

Eigen::MatrixXd MultilevelPreconditioner::dense() const {
  const int n = dim();
  Eigen::MatrixXd B(n, n);
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e(j) = 1.0;
    B.col(j) = apply(e);
  }
  return B;
}

SandwichPreconditioner::SandwichPreconditioner(MeshHierarchy hierarchy, double s)
    : s_(s),
      inner_(std::move(hierarchy), (1.0 + s) / 2.0),
      fine_stiffness_(assemble_stiffness(inner_.hierarchy().finest())) {
  if (s < -1.0 || s > 0.0) {
    throw std::invalid_argument("SandwichPreconditioner: s must be in [-1,0]");
  }
}

Eigen::VectorXd SandwichPreconditioner::apply(const Eigen::VectorXd& dual) const {
  const Eigen::VectorXd primal = inner_.apply(dual);
  const Eigen::VectorXd mid_dual = fine_stiffness_.apply(primal);
  return inner_.apply(mid_dual);
}

Eigen::MatrixXd SandwichPreconditioner::dense() const {
  const int n = dim();
  Eigen::MatrixXd B(n, n);
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e(j) = 1.0;
    B.col(j) = apply(e);
  }
  return B;
}

}  // namespace fraclap
