#pragma once

// The manufactured-solution catalog driving the convergence studies.
//
// Every problem prescribes exact data for the first-order system
//   div(eps u) = f,   curl u = g   in Omega,   (eps u) . n = phi1 on Gamma,
// with eps a constant diagonal SPD tensor.  Non-smooth cases build u as the
// curl of a vertical vector potential psi(r,theta) = r^gamma sin(a theta)
// about one or more vertical edges, so u is divergence-free with an
// r^{gamma-1} edge singularity there.

#include <functional>
#include <string>
#include <vector>

#include "pdwg/mesh.hpp"
#include "pdwg/types.hpp"

namespace pdwg {

// Vertical line {(x0,y0)} x R along which fields may be singular.
struct SingularLine {
  double x0 = 0, y0 = 0;
};

// psi = r^gamma sin(a theta) about (x0,y0), theta = atan2(y-y0, x-x0),
// optionally wrapped to [0, 2pi).  (For integer a the branch cut cancels.)
struct PolarTerm {
  double x0 = 0, y0 = 0;
  double gamma = 1, a = 1;
  bool wrap = false;
};

// u = curl (0,0,psi) = (psi_y, -psi_x, 0); divergence-free.
Vec3 potential_field(const PolarTerm& t, const Vec3& x);
// curl u = (0, 0, (a^2 - gamma^2) r^{gamma-2} sin(a theta)).
Vec3 potential_curl(const PolarTerm& t, const Vec3& x);

struct ProblemSpec {
  std::string name;
  std::string description;
  VoxelDomainSpec domain;
  Vec3 eps = Vec3::Ones();
  double p = 2;                        // Lebesgue exponent of the study
  double rho1 = 1, rho2 = 1, rho3 = 1; // default stabilizer strengths for p
  std::function<Vec3(const Vec3&)> exact_u;
  std::function<double(const Vec3&)> f;
  std::function<Vec3(const Vec3&)> g;
  // phi1(x, outward unit normal) = (eps u).n; kept separate so boundary data
  // needs no normal-field reconstruction at call sites.
  std::function<double(const Vec3&, const Vec3&)> flux_bc;
  std::vector<SingularLine> singular_lines;
};

// Catalog entries 1..6; gamma selects the potential strength for entry 4
// (supported: 5/4, 1, 2/3).  Throws std::invalid_argument on unknown ids.
ProblemSpec example(int id, double p, double gamma = 2.0 / 3.0);

// Human-readable summary for the CLI.
std::string describe_example(int id);

// True when x lies in an active voxel of the domain.
bool contains(const VoxelDomainSpec& spec, const Vec3& x);

// True when any of the simplex vertices lies on (within tol of) the line.
template <size_t N>
bool touches_line(const std::array<Vec3, N>& pts, const SingularLine& line,
                  double tol = 1e-10) {
  for (const Vec3& p : pts) {
    double dx = p.x() - line.x0, dy = p.y() - line.y0;
    if (dx * dx + dy * dy <= tol * tol) return true;
  }
  return false;
}
template <size_t N>
bool touches_any_line(const std::array<Vec3, N>& pts,
                      const std::vector<SingularLine>& lines, double tol = 1e-10) {
  for (const SingularLine& l : lines)
    if (touches_line(pts, l, tol)) return true;
  return false;
}

}  // namespace pdwg
