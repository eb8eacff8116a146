// Microbenchmarks for the hot paths: one preconditioner application, one
// fractional operator application, and a full PCG solve on a mid-size grid.
#include <benchmark/benchmark.h>

#include <random>

#include "fraclap/assembly.hpp"
#include "fraclap/krylov.hpp"
#include "fraclap/mesh.hpp"
#include "fraclap/preconditioner.hpp"
#include "fraclap/spectral.hpp"

namespace {

Eigen::VectorXd random_vector(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = uniform(rng);
  return v;
}

void BM_MultilevelApply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const fraclap::MeshHierarchy hier = fraclap::MeshHierarchy::build(n, 5);
  const fraclap::MultilevelPreconditioner precond(hier, 0.5);
  const Eigen::VectorXd rhs = random_vector(hier.finest().n_interior_dofs, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(precond.apply(rhs));
  }
}
BENCHMARK(BM_MultilevelApply)->Arg(128)->Arg(512)->Arg(2048);

void BM_FractionalApply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const fraclap::MeshLevel level{n, 1.0 / n, n - 1};
  const auto system = fraclap::FractionalOperator::create(
      fraclap::assemble_stiffness(level), fraclap::assemble_mass(level), 0.5);
  const Eigen::VectorXd x = random_vector(system.dim(), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(system.apply(x));
  }
}
BENCHMARK(BM_FractionalApply)->Arg(128)->Arg(512)->Arg(2048);

void BM_PcgSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const fraclap::MeshHierarchy hier = fraclap::MeshHierarchy::build(n, 5);
  const auto system = fraclap::FractionalOperator::create(
      fraclap::assemble_stiffness(hier.finest()), fraclap::assemble_mass(hier.finest()), 0.5);
  const fraclap::MultilevelPreconditioner precond(hier, 0.5);
  const fraclap::LinearOperator apply_A = [&](const Eigen::VectorXd& v) {
    return system.apply(v);
  };
  const fraclap::LinearOperator apply_B = [&](const Eigen::VectorXd& v) {
    return precond.apply(v);
  };
  const Eigen::VectorXd rhs = random_vector(system.dim(), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fraclap::pcg(apply_A, apply_B, rhs, 1e-15, 500, 0));
  }
}
BENCHMARK(BM_PcgSolve)->Arg(128)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
