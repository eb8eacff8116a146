#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fraclap/assembly.hpp"
#include "fraclap/mesh.hpp"
#include "fraclap/spectral.hpp"

namespace fraclap {

/// Additive multilevel preconditioner for A^s with s in [0,1]:
///
///   B = Q_1^T (A_1^s)^{-1} Q_1 + sum_{k=2}^J Q_k^T R_k Q_k,
///
/// where Q_k is the accumulated dual restriction to level k (applied by
/// cascading single-level restrictions), R_k the diagonal smoother with
/// entries 1 / (M_ii^{1-s} A_ii^s), and the coarsest level solved exactly
/// through its spectral decomposition. Per-level stiffness and mass
/// matrices are assembled directly on each mesh; the hierarchy is not
/// Galerkin-nested for fractional s.
///
/// Takes dual vectors as input and returns primal vectors.
class MultilevelPreconditioner {
public:
  MultilevelPreconditioner(MeshHierarchy hierarchy, double s);

  int dim() const { return hierarchy_.finest().n_interior_dofs; }
  double exponent() const { return s_; }
  int num_levels() const { return hierarchy_.num_levels(); }
  const MeshHierarchy& hierarchy() const { return hierarchy_; }

  /// Smoother diagonal on level k (k >= 1; level 0 uses the exact solve).
  const Eigen::VectorXd& smoother_diagonal(int level) const;

  Eigen::VectorXd apply(const Eigen::VectorXd& dual) const;

  /// Dense matrix of apply, assembled column by column (tests and oracles).
  Eigen::MatrixXd dense() const;

private:
  MeshHierarchy hierarchy_;
  double s_;
  std::vector<Eigen::VectorXd> smoother_diags_;  // index k = 1..J-1; [0] empty
  FractionalOperator coarse_solver_;
};

/// Preconditioner for negative exponents s in [-1,0], built by sandwiching
/// the fine-level stiffness matrix between two applications of the
/// positive-exponent multilevel operator at exponent (1+s)/2:
///
///   Btilde^s = B^{(1+s)/2} A B^{(1+s)/2}.
class SandwichPreconditioner {
public:
  SandwichPreconditioner(MeshHierarchy hierarchy, double s);

  int dim() const { return inner_.dim(); }
  double exponent() const { return s_; }
  double inner_exponent() const { return inner_.exponent(); }
  const MultilevelPreconditioner& inner() const { return inner_; }

  Eigen::VectorXd apply(const Eigen::VectorXd& dual) const;

  Eigen::MatrixXd dense() const;

private:
  double s_;
  MultilevelPreconditioner inner_;
  SymTridiagonal fine_stiffness_;
};

}  // namespace fraclap
