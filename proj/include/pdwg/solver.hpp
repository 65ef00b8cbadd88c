#pragma once

// Linear solve + the reweighting sweep around it.

#include "pdwg/assembly.hpp"

namespace pdwg {

struct LinearSolveInfo {
  double rel_residual = 0;
  int refine_steps = 0;
};

// Sparse LU with COLAMD ordering (the u block has a zero diagonal, so
// pivot-free Cholesky-type factorizations are not an option).  Guarantees
// ||Ax-b||/||b|| <= 1e-9, using iterative refinement on the existing
// factorization if needed; b = 0 returns exactly 0.  Throws
// std::runtime_error when the factorization fails or the residual stays
// above 1e-6.
Eigen::VectorXd solve_linear(const SpMat& A, const Eigen::VectorXd& b,
                             LinearSolveInfo* info = nullptr);

struct SolveReport {
  Eigen::VectorXd x;     // final coefficient vector (DofMap layout)
  DofMap dofs;
  int iterations = 0;    // linear solves performed
  bool converged = false;
  std::vector<double> updates;  // max-abs coefficient change per sweep
  double residual = 0;          // worst relative linear residual seen
};

// Iteratively reweighted solve from the zero initial state: assemble the
// stabilizers at the previous iterate, solve, repeat until the max-abs
// coefficient update drops below par.tol or max_iters is hit.  p = 2 is
// linear and takes exactly one sweep.
SolveReport run_solver(const ProblemSpec& problem, const Mesh& mesh,
                       const SolveParams& par);

}  // namespace pdwg
