#include "fraclap/krylov.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

namespace fraclap {

double lanczos_condition_estimate(const std::vector<double>& alphas,
                                  const std::vector<double>& betas, int m) {
  if (m <= 0 || m > static_cast<int>(alphas.size())) {
    throw std::invalid_argument("lanczos_condition_estimate: invalid prefix length");
  }
  if (m == 1) return 1.0;
  // Standard CG-to-Lanczos translation:
  //   T_jj = 1/alpha_j + beta_{j-1}/alpha_{j-1},  T_{j,j+1} = sqrt(beta_j)/alpha_j.
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
  for (int j = 0; j < m; ++j) {
    double d = 1.0 / alphas[static_cast<std::size_t>(j)];
    if (j > 0) {
      d += betas[static_cast<std::size_t>(j - 1)] / alphas[static_cast<std::size_t>(j - 1)];
    }
    T(j, j) = d;
    if (j + 1 < m) {
      const double off = std::sqrt(betas[static_cast<std::size_t>(j)]) /
                         alphas[static_cast<std::size_t>(j)];
      T(j, j + 1) = off;
      T(j + 1, j) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(T, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return ev(m - 1) / ev(0);
}

PcgResult pcg(const LinearOperator& apply_A, const LinearOperator& apply_B,
              const Eigen::VectorXd& rhs, double tol, int max_iter, std::uint64_t seed) {
  if (tol <= 0.0) throw std::invalid_argument("pcg: tol must be positive");
  const auto t0 = std::chrono::steady_clock::now();

  const Eigen::Index n = rhs.size();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  Eigen::VectorXd x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = uniform(rng);

  PcgResult result;
  result.report.seed = seed;

  Eigen::VectorXd r = rhs - apply_A(x);
  Eigen::VectorXd z = apply_B(r);
  double rz = r.dot(z);
  if (rz < 0.0) throw std::runtime_error("pcg: breakdown, <B r, r> < 0 at start");
  const double rz0 = rz;
  result.report.relative_preconditioned_residuals.push_back(1.0);
  if (rz0 == 0.0) {
    // rhs already matched by the random guess (practically: rhs = A x0)
    result.solution = std::move(x);
    result.report.converged = true;
    return result;
  }

  Eigen::VectorXd p = z;
  int it = 0;
  bool converged = false;
  while (it < max_iter) {
    const Eigen::VectorXd q = apply_A(p);
    const double pq = p.dot(q);
    if (pq <= 0.0) throw std::runtime_error("pcg: breakdown, <A p, p> <= 0");
    const double alpha = rz / pq;
    x += alpha * p;
    r -= alpha * q;
    z = apply_B(r);
    const double rz_new = r.dot(z);
    if (rz_new < 0.0) throw std::runtime_error("pcg: breakdown, <B r, r> < 0");
    const double beta = rz_new / rz;
    result.report.cg_alphas.push_back(alpha);
    result.report.cg_betas.push_back(beta);
    rz = rz_new;
    ++it;
    const double rel = rz_new / rz0;
    result.report.relative_preconditioned_residuals.push_back(rel);
    if (rel <= tol) {
      converged = true;
      break;
    }
    p = z + beta * p;
  }

  result.report.iterations = it;
  result.report.converged = converged;
  if (it > 0) {
    result.report.condition_estimate =
        lanczos_condition_estimate(result.report.cg_alphas, result.report.cg_betas, it);
  }
  result.solution = std::move(x);
  result.report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

double exact_condition_number(const LinearOperator& apply_A, const LinearOperator& apply_B,
                              int dim) {
  if (dim < 1 || dim > 1024) {
    throw std::invalid_argument("exact_condition_number: dim must be in [1, 1024]");
  }
  Eigen::MatrixXd A(dim, dim);
  Eigen::MatrixXd B(dim, dim);
  for (int j = 0; j < dim; ++j) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
    e(j) = 1.0;
    A.col(j) = apply_A(e);
    B.col(j) = apply_B(e);
  }
  // Symmetrize against roundoff before factorizing.
  A = 0.5 * (A + A.transpose()).eval();
  B = 0.5 * (B + B.transpose()).eval();

  Eigen::LLT<Eigen::MatrixXd> llt(B);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("exact_condition_number: preconditioner is not SPD");
  }
  const Eigen::MatrixXd L = llt.matrixL();
  const Eigen::MatrixXd S = L.transpose() * A * L;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (S + S.transpose()),
                                                        Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  if (ev(0) <= 0.0) {
    throw std::runtime_error("exact_condition_number: preconditioned operator is not SPD");
  }
  return ev(dim - 1) / ev(0);
}

}  // namespace fraclap
