#include "fraclap/mesh.hpp"

#include <stdexcept>
#include <string>

namespace fraclap {

MeshHierarchy MeshHierarchy::build(int n_fine, int j_levels) {
  if (j_levels < 1) {
    throw std::invalid_argument("j_levels must be >= 1");
  }
  const int factor = 1 << (j_levels - 1);
  if (n_fine % factor != 0) {
    throw std::invalid_argument("n_fine = " + std::to_string(n_fine) +
                                " not divisible by 2^(j_levels-1) = " + std::to_string(factor));
  }
  const int n_coarse = n_fine / factor;
  if (n_coarse < 2) {
    throw std::invalid_argument("coarsest level would have no interior dofs (n_coarse = " +
                                std::to_string(n_coarse) + ")");
  }

  MeshHierarchy hier;
  hier.levels_.reserve(static_cast<std::size_t>(j_levels));
  int n = n_coarse;
  for (int k = 0; k < j_levels; ++k) {
    MeshLevel lvl;
    lvl.n_elements = n;
    lvl.h = 1.0 / static_cast<double>(n);
    lvl.n_interior_dofs = n - 1;
    hier.levels_.push_back(lvl);
    n *= 2;
  }
  return hier;
}

Eigen::VectorXd MeshHierarchy::prolongate(int coarse_level, const Eigen::VectorXd& coarse_primal) const {
  const MeshLevel& coarse = level(coarse_level);
  const MeshLevel& fine = level(coarse_level + 1);
  const int m = coarse.n_interior_dofs;
  if (coarse_primal.size() != m) {
    throw std::invalid_argument("prolongate: expected vector of size " + std::to_string(m) +
                                ", got " + std::to_string(coarse_primal.size()));
  }
  Eigen::VectorXd out = Eigen::VectorXd::Zero(fine.n_interior_dofs);
  for (int j = 0; j < fine.n_interior_dofs; ++j) {
    if (j % 2 == 1) {
      out(j) = coarse_primal((j - 1) / 2);
    } else {
      // new node between coarse nodes j/2-1 and j/2; boundary values are 0
      const int left = j / 2 - 1;
      const int right = j / 2;
      double v = 0.0;
      if (left >= 0) v += 0.5 * coarse_primal(left);
      if (right < m) v += 0.5 * coarse_primal(right);
      out(j) = v;
    }
  }
  return out;
}

Eigen::VectorXd MeshHierarchy::restrict_dual(int coarse_level, const Eigen::VectorXd& fine_dual) const {
  const MeshLevel& coarse = level(coarse_level);
  const MeshLevel& fine = level(coarse_level + 1);
  if (fine_dual.size() != fine.n_interior_dofs) {
    throw std::invalid_argument("restrict_dual: expected vector of size " +
                                std::to_string(fine.n_interior_dofs) + ", got " +
                                std::to_string(fine_dual.size()));
  }
  Eigen::VectorXd out(coarse.n_interior_dofs);
  for (int i = 0; i < coarse.n_interior_dofs; ++i) {
    out(i) = fine_dual(2 * i + 1) + 0.5 * (fine_dual(2 * i) + fine_dual(2 * i + 2));
  }
  return out;
}

Eigen::MatrixXd MeshHierarchy::prolongation_matrix(int coarse_level) const {
  const int m = level(coarse_level).n_interior_dofs;
  const int n = level(coarse_level + 1).n_interior_dofs;
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(n, m);
  for (int i = 0; i < m; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(m);
    e(i) = 1.0;
    P.col(i) = prolongate(coarse_level, e);
  }
  return P;
}

}  // namespace fraclap
