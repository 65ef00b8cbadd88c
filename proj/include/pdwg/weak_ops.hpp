#pragma once

// Discrete weak calculus at the lowest order.
//
// A weak scalar (vector) function on an element T is a pair {cell value,
// face values}; face vectors are tangential.  Its weak gradient / weak curl
// is the constant 3-vector defined by duality against constant test fields,
// which collapses to boundary sums:
//
//   grad_w v |_T  =  1/|T|  sum_F |F|  v_b(F) n_F            (outward n_F)
//   curl_w v |_T  = -1/|T|  sum_F |F| (v_b(F) x n_F)
//
// The cell value does not enter at this order (it pairs with derivatives of
// constants); it participates only through the face-jump stabilizers.

#include <array>
#include <functional>

#include "pdwg/dof_map.hpp"
#include "pdwg/mesh.hpp"
#include "pdwg/quadrature.hpp"
#include "pdwg/types.hpp"

namespace pdwg {

struct ElementGeometry {
  double volume = 0;
  double diameter = 0;
  std::array<double, 4> area;
  std::array<Vec3, 4> normal;  // outward unit normals, face lf opposite vertex lf
};

ElementGeometry element_geometry(const Mesh& mesh, int e);
ElementGeometry tet_geometry(const std::array<Vec3, 4>& verts);

Vec3 weak_gradient(const ElementGeometry& g, const std::array<double, 4>& face_vals);
// face_vals must be tangential to their faces (v . n = 0).
Vec3 weak_curl(const ElementGeometry& g, const std::array<Vec3, 4>& face_vals);

// L2-type local projections (means against the constant basis).
// `levels` refines the simplex before quadrature (for singular integrands).
double cell_mean(const Mesh& mesh, int e, const SimplexRule& rule,
                 const std::function<double(const Vec3&)>& f, int levels = 0);
Vec3 cell_mean_vec(const Mesh& mesh, int e, const SimplexRule& rule,
                   const std::function<Vec3(const Vec3&)>& f, int levels = 0);
double face_mean(const Mesh& mesh, int fid, const SimplexRule& rule,
                 const std::function<double(const Vec3&)>& f, int levels = 0);
// Mean of the tangential part (n x f) x n, returned as a global 3-vector.
Vec3 face_tangential_mean(const Mesh& mesh, int fid, const SimplexRule& rule,
                          const std::function<Vec3(const Vec3&)>& f, int levels = 0);

// One element's view of a full coefficient vector, with constraints resolved:
// q face values are frame-combined global tangential vectors (zero on the
// boundary), s face values are 0 on the exterior component and the shared
// constant on interior components.
struct ElementFields {
  double lam0 = 0;
  std::array<double, 4> lamb;
  Vec3 q0 = Vec3::Zero();
  std::array<Vec3, 4> qb;
  Vec3 u = Vec3::Zero();
  double s0 = 0;
  std::array<double, 4> sb;
};

ElementFields extract_fields(const Mesh& mesh, const DofMap& dofs,
                             const Eigen::VectorXd& x, int e);

}  // namespace pdwg
