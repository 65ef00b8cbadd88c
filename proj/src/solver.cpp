#include "pdwg/solver.hpp"

#include <stdexcept>

#include <Eigen/SparseLU>

namespace pdwg {

Eigen::VectorXd solve_linear(const SpMat& A, const Eigen::VectorXd& b,
                             LinearSolveInfo* info) {
  const double bn = b.norm();
  if (bn == 0.0) {
    if (info) *info = {0.0, 0};
    return Eigen::VectorXd::Zero(A.rows());
  }
  SpMat Ac = A;
  Ac.makeCompressed();
  Eigen::SparseLU<SpMat, Eigen::COLAMDOrdering<int>> lu;
  lu.analyzePattern(Ac);
  lu.factorize(Ac);
  if (lu.info() != Eigen::Success)
    throw std::runtime_error("solve_linear: sparse LU factorization failed");
  Eigen::VectorXd x = lu.solve(b);
  double res = (Ac * x - b).norm() / bn;
  int steps = 0;
  while (res > 1e-9 && steps < 3) {  // refinement reuses the factorization
    x += lu.solve(Eigen::VectorXd(b - Ac * x));
    res = (Ac * x - b).norm() / bn;
    ++steps;
  }
  if (info) {
    info->rel_residual = res;
    info->refine_steps = steps;
  }
  if (res > 1e-6)
    throw std::runtime_error("solve_linear: residual target missed");
  return x;
}

SolveReport run_solver(const ProblemSpec& problem, const Mesh& mesh,
                       const SolveParams& par) {
  SolveReport rep;
  rep.dofs = build_dof_map(mesh);
  const DofMap& dofs = rep.dofs;

  // State-independent pieces are assembled once per run.
  SpMat B = coupling_matrix(mesh, dofs, problem.eps);
  SpMat fixed = B + SpMat(B.transpose()) + mean_constraint(mesh, dofs);
  const Eigen::VectorXd b = load_vector(mesh, dofs, problem, par);

  Eigen::VectorXd state = Eigen::VectorXd::Zero(dofs.total);
  for (int it = 1; it <= par.max_iters; ++it) {
    SpMat A = fixed + stabilizer_s1(mesh, dofs, par, state);
    A -= stabilizer_s2(mesh, dofs, par, state);
    LinearSolveInfo info;
    Eigen::VectorXd x = solve_linear(A, b, &info);
    rep.residual = std::max(rep.residual, info.rel_residual);
    const double delta = (x - state).lpNorm<Eigen::Infinity>();
    rep.updates.push_back(delta);
    state = std::move(x);
    rep.iterations = it;
    if (par.p == 2.0 || delta <= par.tol) {
      rep.converged = true;
      break;
    }
  }
  rep.x = std::move(state);
  return rep;
}

}  // namespace pdwg
