#pragma once

#include <Eigen/Dense>

#include "fraclap/mesh.hpp"

namespace fraclap {

/// Symmetric tridiagonal matrix; sufficient for 1D P1 stiffness and mass
/// matrices on interior dofs. Symmetry is exact by storage.
class SymTridiagonal {
public:
  SymTridiagonal(Eigen::VectorXd diag, Eigen::VectorXd off_diag);

  int dim() const { return static_cast<int>(diag_.size()); }
  const Eigen::VectorXd& diagonal() const { return diag_; }
  const Eigen::VectorXd& off_diagonal() const { return off_; }
  bool is_spd() const { return is_spd_; }

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd dense() const;

private:
  Eigen::VectorXd diag_;
  Eigen::VectorXd off_;  // size dim-1
  bool is_spd_ = false;
};

/// P1 stiffness matrix on interior dofs: tridiag(-1/h, 2/h, -1/h).
SymTridiagonal assemble_stiffness(const MeshLevel& level);

/// P1 mass matrix on interior dofs: tridiag(h/6, 2h/3, h/6).
SymTridiagonal assemble_mass(const MeshLevel& level);

}  // namespace fraclap
