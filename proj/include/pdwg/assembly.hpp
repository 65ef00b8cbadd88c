#pragma once

// Assembly of the primal-dual saddle system.
//
// Unknowns x = [lam | q | u | s | mu] (DofMap layout).  The system is
//
//   [ S1(m)   C_B    c ] [lam,q]   [ F ]
//   [ C_B^T  -S2(m)  0 ] [ u,s ] = [ 0 ]
//   [ c^T     0      0 ] [ mu  ]   [ 0 ]
//
// C_B couples the trial pair (u,s) into the dual test pair (lam,q) through
// the weak gradient / weak curl duality sums; S1, S2 are face-jump
// stabilizers.  For p != 2 the jump powers |.|^{p-2} are frozen at the
// previous iterate m (iteratively reweighted linearization) with smoothing
// floor eps0, so each sweep solves a symmetric linear saddle system.
// c enforces a zero mean on the lam cell part via the multiplier mu.

#include "pdwg/dof_map.hpp"
#include "pdwg/mesh.hpp"
#include "pdwg/problems.hpp"
#include "pdwg/weak_ops.hpp"

namespace pdwg {

struct SolveParams {
  double p = 2;
  double rho1 = 1, rho2 = 1, rho3 = 1;
  double eps0 = 1e-6;        // reweighting floor, default 10^{-6/(p-1)}
  double tol = 1e-5;         // max-abs coefficient update stopping test
  int max_iters = 100;
  int quad_degree = 4;
  int singular_levels = 1;   // quadrature refinement rounds near singular edges

  double q() const { return p / (p - 1.0); }
  static SolveParams from(const ProblemSpec& ps);
};

// (|m| + eps0)^{exponent-2}: the frozen jump weight.  exponent = 2 gives 1.
double stabilizer_weight(double m, double exponent, double eps0);

// Entries A[row in lam/q blocks, col in u/s blocks]; caller adds the
// transpose.  eps is the diagonal coefficient tensor.
SpMat coupling_matrix(const Mesh& mesh, const DofMap& dofs, const Vec3& eps);

// Face-jump stabilizers linearized at `state` (full coefficient vector of the
// previous iterate; pass zeros for the first sweep).  Both are symmetric
// positive semidefinite and live on the lam/q (resp. s) blocks.
SpMat stabilizer_s1(const Mesh& mesh, const DofMap& dofs, const SolveParams& par,
                    const Eigen::VectorXd& state);
SpMat stabilizer_s2(const Mesh& mesh, const DofMap& dofs, const SolveParams& par,
                    const Eigen::VectorXd& state);

// Mean-zero multiplier coupling (both the column and its transpose).
SpMat mean_constraint(const Mesh& mesh, const DofMap& dofs);

// Data functional: -(f, lam cell) + <flux_bc, lam face>_boundary + (g, q cell).
Eigen::VectorXd load_vector(const Mesh& mesh, const DofMap& dofs,
                            const ProblemSpec& problem, const SolveParams& par);

struct SaddleSystem {
  SpMat A;
  Eigen::VectorXd b;
};

SaddleSystem build_system(const Mesh& mesh, const DofMap& dofs, const ProblemSpec& problem,
                          const SolveParams& par, const Eigen::VectorXd& state);

}  // namespace pdwg
