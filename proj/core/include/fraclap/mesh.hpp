#pragma once

#include <Eigen/Dense>
#include <vector>

namespace fraclap {

/// One uniform partition of the unit interval. Dirichlet dofs are
/// eliminated, so a mesh with N elements carries N-1 interior dofs,
/// indexed left to right.
struct MeshLevel {
  int n_elements = 0;
  double h = 0.0;
  int n_interior_dofs = 0;
};

/// Nested hierarchy of uniform interval meshes, coarsest first, each level
/// obtained from the previous one by bisecting every element. Prolongation
/// between adjacent levels is hat-function interpolation and is applied
/// stencil-wise; the explicit matrix is only materialized on request.
class MeshHierarchy {
public:
  /// n_fine must be divisible by 2^(j_levels-1) and the coarsest level
  /// must keep at least one interior dof.
  static MeshHierarchy build(int n_fine, int j_levels);

  int num_levels() const { return static_cast<int>(levels_.size()); }
  const MeshLevel& level(int k) const { return levels_.at(static_cast<std::size_t>(k)); }
  const MeshLevel& coarsest() const { return levels_.front(); }
  const MeshLevel& finest() const { return levels_.back(); }

  /// Interpolate a primal vector from level k to level k+1.
  Eigen::VectorXd prolongate(int coarse_level, const Eigen::VectorXd& coarse_primal) const;

  /// Transpose action of prolongate: maps level-(k+1) dual vectors to
  /// level-k dual vectors.
  Eigen::VectorXd restrict_dual(int coarse_level, const Eigen::VectorXd& fine_dual) const;

  /// Dense prolongation matrix for level k -> k+1 (tests and oracles).
  Eigen::MatrixXd prolongation_matrix(int coarse_level) const;

private:
  std::vector<MeshLevel> levels_;
};

}  // namespace fraclap
