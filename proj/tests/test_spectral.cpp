#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <vector>

#include "fraclap/assembly.hpp"
#include "fraclap/mesh.hpp"
#include "fraclap/spectral.hpp"

using fraclap::FractionalOperator;
using fraclap::MeshLevel;
using fraclap::SymTridiagonal;

namespace {

MeshLevel make_level(int n) { return MeshLevel{n, 1.0 / n, n - 1}; }

// Independent oracle: roots of det(A - lambda*M) by sign-change scan and
// bisection on the dense determinant.
std::vector<double> characteristic_roots(const Eigen::MatrixXd& A, const Eigen::MatrixXd& M,
                                         double lo, double hi, int scan_points) {
  auto p = [&](double lambda) { return (A - lambda * M).determinant(); };
  std::vector<double> roots;
  double prev_x = lo, prev_v = p(lo);
  for (int i = 1; i <= scan_points; ++i) {
    const double x = lo + (hi - lo) * i / scan_points;
    const double v = p(x);
    if (prev_v == 0.0) roots.push_back(prev_x);
    if (prev_v * v < 0.0) {
      double a = prev_x, b = x;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        if (p(a) * p(mid) <= 0.0) {
          b = mid;
        } else {
          a = mid;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    prev_x = x;
    prev_v = v;
  }
  return roots;
}

// A^{1/2}-type powers through M^{1/2}-symmetrization; a different algebraic
// route than the pencil solver used by the implementation.
Eigen::MatrixXd dense_fractional_matrix(const Eigen::MatrixXd& A, const Eigen::MatrixXd& M,
                                        double s) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> msolve(M);
  const Eigen::MatrixXd Mhalf = msolve.operatorSqrt();
  const Eigen::MatrixXd Mhalfinv = msolve.operatorInverseSqrt();
  const Eigen::MatrixXd S = Mhalfinv * A * Mhalfinv;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ssolve(0.5 * (S + S.transpose()));
  const Eigen::VectorXd powers =
      ssolve.eigenvalues().array().unaryExpr([s](double l) { return std::pow(l, s); }).matrix();
  const Eigen::MatrixXd Spow =
      ssolve.eigenvectors() * powers.asDiagonal() * ssolve.eigenvectors().transpose();
  return Mhalf * Spow * Mhalf;
}

Eigen::VectorXd random_vector(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = uniform(rng);
  return v;
}

}  // namespace

TEST_CASE("scalar pencil decomposition") {
  const SymTridiagonal A(Eigen::VectorXd::Constant(1, 4.0), Eigen::VectorXd(0));
  const SymTridiagonal M(Eigen::VectorXd::Constant(1, 1.0 / 6.0), Eigen::VectorXd(0));
  const auto dec = fraclap::decompose(A, M);
  CHECK(dec.eigenvalues(0) == doctest::Approx(24.0));
  CHECK(dec.eigenvectors(0, 0) == doctest::Approx(std::sqrt(6.0)));
}

TEST_CASE("eigenvalues match characteristic-polynomial roots at dim 3") {
  const MeshLevel level = make_level(4);
  const SymTridiagonal A = fraclap::assemble_stiffness(level);
  const SymTridiagonal M = fraclap::assemble_mass(level);
  const auto dec = fraclap::decompose(A, M);
  const auto roots = characteristic_roots(A.dense(), M.dense(), 0.1, 500.0, 5000);
  REQUIRE(roots.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(dec.eigenvalues(i) == doctest::Approx(roots[static_cast<std::size_t>(i)]).epsilon(1e-8));
  }
}

TEST_CASE("decomposition orthonormality and residuals") {
  const MeshLevel level = make_level(16);
  const SymTridiagonal A = fraclap::assemble_stiffness(level);
  const SymTridiagonal M = fraclap::assemble_mass(level);
  const auto dec = fraclap::decompose(A, M);
  const Eigen::MatrixXd U = dec.eigenvectors;
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(dec.dim(), dec.dim());
  CHECK((U.transpose() * M.dense() * U - I).norm() < 1e-10);
  CHECK((U.transpose() * A.dense() * U -
         Eigen::MatrixXd(dec.eigenvalues.asDiagonal()))
            .norm() < 1e-10 * dec.eigenvalues.maxCoeff());
  const double stiffness_norm = A.dense().norm();
  for (int i = 0; i < dec.dim(); ++i) {
    CHECK((A.dense() * U.col(i) - dec.eigenvalues(i) * (M.dense() * U.col(i))).norm() <
          1e-10 * stiffness_norm);
  }
}

TEST_CASE("decompose rejects a non-SPD mass matrix") {
  const SymTridiagonal A(Eigen::VectorXd::Constant(2, 1.0), Eigen::VectorXd::Zero(1));
  const SymTridiagonal M(Eigen::VectorXd::Constant(2, -1.0), Eigen::VectorXd::Zero(1));
  CHECK_THROWS(fraclap::decompose(A, M));
}

TEST_CASE("fractional apply reduces to mass and stiffness at s = 0, 1") {
  const MeshLevel level = make_level(16);
  const SymTridiagonal A = fraclap::assemble_stiffness(level);
  const SymTridiagonal M = fraclap::assemble_mass(level);
  const Eigen::VectorXd x = random_vector(level.n_interior_dofs, 42);
  const auto op0 = FractionalOperator::create(A, M, 0.0);
  const auto op1 = FractionalOperator::create(A, M, 1.0);
  CHECK((op0.apply(x) - M.apply(x)).norm() < 1e-10 * M.apply(x).norm());
  CHECK((op1.apply(x) - A.apply(x)).norm() < 1e-10 * A.apply(x).norm());
}

TEST_CASE("fractional apply at s = 1/2 matches the symmetrized dense oracle") {
  const MeshLevel level = make_level(8);
  const SymTridiagonal A = fraclap::assemble_stiffness(level);
  const SymTridiagonal M = fraclap::assemble_mass(level);
  const auto op = FractionalOperator::create(A, M, 0.5);
  const Eigen::MatrixXd oracle = dense_fractional_matrix(A.dense(), M.dense(), 0.5);
  CHECK((op.dense_apply_matrix() - oracle).norm() < 1e-10 * oracle.norm());
}

TEST_CASE("solve inverts apply for all exponents") {
  const MeshLevel level = make_level(16);
  const auto A = fraclap::assemble_stiffness(level);
  const auto M = fraclap::assemble_mass(level);
  const auto dec = fraclap::decompose(A, M);
  const Eigen::VectorXd b = random_vector(level.n_interior_dofs, 9);
  for (double s : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    const FractionalOperator op(dec, M, s);
    CHECK((op.apply(op.solve(b)) - b).norm() < 1e-9 * b.norm());
  }
}

TEST_CASE("solve at s = 0 is the mass inverse") {
  const MeshLevel level = make_level(16);
  const auto M = fraclap::assemble_mass(level);
  const auto op = FractionalOperator::create(fraclap::assemble_stiffness(level), M, 0.0);
  const Eigen::VectorXd b = random_vector(level.n_interior_dofs, 13);
  const Eigen::VectorXd expected = M.dense().ldlt().solve(b);
  CHECK((op.solve(b) - expected).norm() < 1e-10 * expected.norm());
}

TEST_CASE("solve at s = -1 equals M^{-1} A M^{-1} densely") {
  const MeshLevel level = make_level(8);
  const auto A = fraclap::assemble_stiffness(level);
  const auto M = fraclap::assemble_mass(level);
  const auto op = FractionalOperator::create(A, M, -1.0);
  const Eigen::MatrixXd Minv = M.dense().inverse();
  const Eigen::MatrixXd expected = Minv * A.dense() * Minv;
  CHECK((op.dense_solve_matrix() - expected).norm() < 1e-10 * expected.norm());
}

TEST_CASE("group property defects") {
  const MeshLevel level = make_level(16);
  const auto M = fraclap::assemble_mass(level);
  const auto dec = fraclap::decompose(fraclap::assemble_stiffness(level), M);
  CHECK(fraclap::group_property_defect(dec, M, 0.5, -0.5) <= 1e-10);
  CHECK(fraclap::group_property_defect(dec, M, 0.0, 0.0) <= 1e-13);
  CHECK(fraclap::group_property_defect(dec, M, 1.0, -1.0) <= 1e-10);
}

TEST_CASE("fractional matrix is symmetric") {
  const MeshLevel level = make_level(16);
  const auto op = FractionalOperator::create(fraclap::assemble_stiffness(level),
                                             fraclap::assemble_mass(level), 0.3);
  const Eigen::VectorXd u = random_vector(level.n_interior_dofs, 21);
  const Eigen::VectorXd v = random_vector(level.n_interior_dofs, 22);
  CHECK(op.apply(u).dot(v) == doctest::Approx(op.apply(v).dot(u)).epsilon(1e-12));
}

TEST_CASE("eigenvector quadratic form is monotone in s when lambda >= 1") {
  const MeshLevel level = make_level(16);
  const auto A = fraclap::assemble_stiffness(level);
  const auto M = fraclap::assemble_mass(level);
  const auto dec = fraclap::decompose(A, M);
  for (int i = 0; i < dec.dim(); ++i) {
    if (dec.eigenvalues(i) < 1.0) continue;
    double prev = 0.0;
    bool first = true;
    for (double s : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const FractionalOperator op(dec, M, s);
      const double q = dec.eigenvectors.col(i).dot(op.apply(dec.eigenvectors.col(i)));
      if (!first) CHECK(q >= prev - 1e-10 * std::abs(prev));
      prev = q;
      first = false;
    }
  }
}
