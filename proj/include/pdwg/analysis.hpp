#pragma once

// Error norms, discrete dual norms, convergence-rate bookkeeping.

#include <string>
#include <vector>

#include "pdwg/assembly.hpp"

namespace pdwg {

// Weighted elementwise L^q distance between the piecewise-constant u block
// of x and a reference field:  ( sum_T int_T |diag(eps)^{1/q} (ref - u_h)|^q )^{1/q}
// with the Euclidean norm inside.  Quadrature refines `levels` rounds on
// elements touching one of the singular lines.
double error_lq(const Mesh& mesh, const DofMap& dofs, const Eigen::VectorXd& x,
                const std::function<Vec3(const Vec3&)>& ref, const Vec3& eps, double q,
                const SimplexRule& rule, const std::vector<SingularLine>& lines,
                int levels);

// Per-element gap between the cell-mean projection of ref and the u block;
// for fields with harmonic content this is the visually interesting part.
std::vector<Vec3> projection_gap(const Mesh& mesh, const DofMap& dofs,
                                 const Eigen::VectorXd& x,
                                 const std::function<Vec3(const Vec3&)>& ref,
                                 const SimplexRule& rule,
                                 const std::vector<SingularLine>& lines, int levels);

// Same weighted L^q norm for an explicit per-element-constant field.
double constant_field_lq(const Mesh& mesh, const std::vector<Vec3>& field,
                         const Vec3& eps, double q);

// Exact (unsmoothed) jump powers of the stabilizers at x:
//   s1: rho1 sum_T h^{1-p} sum_F |F| |lam jump|^p
//     + rho2 sum_T h^{1-p} sum_F |F| |(q jump) x n|^p
//   s2: rho3 sum_T h^{1-q'} sum_F |F| |s jump|^{q'}
double s1_power(const Mesh& mesh, const DofMap& dofs, const Eigen::VectorXd& x,
                const SolveParams& par);
double s2_power(const Mesh& mesh, const DofMap& dofs, const Eigen::VectorXd& x,
                const SolveParams& par);
// The corresponding discrete norms: s1_power^{1/p}, s2_power^{1/q'}.
double dual_norm(const Mesh& mesh, const DofMap& dofs, const Eigen::VectorXd& x,
                 const SolveParams& par);
double s_norm(const Mesh& mesh, const DofMap& dofs, const Eigen::VectorXd& x,
              const SolveParams& par);

// Observed order under mesh halving.
double rate(double err_coarse, double err_fine);

struct StudyRow {
  int inv_h = 0;
  int iterations = 0;
  double err_u = 0;    // vs the exact field
  double err_eta = 0;  // vs its cell-mean projection
  double dual = 0;     // |||(lam_h, q_h)|||
  double s = 0;        // |||s_h|||
};

struct StudyTable {
  std::string label;
  double p = 2;
  std::vector<StudyRow> rows;  // coarse to fine, inv_h doubling
};

std::string to_csv(const StudyTable& t);
std::string to_markdown(const StudyTable& t);

}  // namespace pdwg
