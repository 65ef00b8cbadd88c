#include "pdwg/weak_ops.hpp"

#include <cmath>

namespace pdwg {

ElementGeometry element_geometry(const Mesh& mesh, int e) {
  const MeshElement& el = mesh.elements[e];
  ElementGeometry g;
  g.volume = el.volume;
  g.diameter = el.diameter;
  for (int lf = 0; lf < 4; ++lf) {
    g.area[lf] = mesh.faces[el.face[lf]].area;
    g.normal[lf] = mesh.outward_normal(e, lf);
  }
  return g;
}

ElementGeometry tet_geometry(const std::array<Vec3, 4>& P) {
  ElementGeometry g;
  g.volume = std::abs(tet_volume(P));
  g.diameter = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) g.diameter = std::max(g.diameter, (P[a] - P[b]).norm());
  Vec3 centroid = 0.25 * (P[0] + P[1] + P[2] + P[3]);
  for (int lf = 0; lf < 4; ++lf) {
    std::array<Vec3, 3> tri;
    for (int s = 0, t = 0; s < 4; ++s)
      if (s != lf) tri[t++] = P[s];
    Vec3 cr = (tri[1] - tri[0]).cross(tri[2] - tri[0]);
    g.area[lf] = 0.5 * cr.norm();
    Vec3 n = cr.normalized();
    Vec3 fc = (tri[0] + tri[1] + tri[2]) / 3.0;
    g.normal[lf] = (n.dot(fc - centroid) > 0) ? n : Vec3(-n);
  }
  return g;
}

Vec3 weak_gradient(const ElementGeometry& g, const std::array<double, 4>& vb) {
  Vec3 acc = Vec3::Zero();
  for (int lf = 0; lf < 4; ++lf) acc += g.area[lf] * vb[lf] * g.normal[lf];
  return acc / g.volume;
}

Vec3 weak_curl(const ElementGeometry& g, const std::array<Vec3, 4>& vb) {
  Vec3 acc = Vec3::Zero();
  for (int lf = 0; lf < 4; ++lf) acc -= g.area[lf] * vb[lf].cross(g.normal[lf]);
  return acc / g.volume;
}

double cell_mean(const Mesh& mesh, int e, const SimplexRule& rule,
                 const std::function<double(const Vec3&)>& f, int levels) {
  return integrate_refined(rule, mesh.element_vertices(e), levels, f) / mesh.elements[e].volume;
}

Vec3 cell_mean_vec(const Mesh& mesh, int e, const SimplexRule& rule,
                   const std::function<Vec3(const Vec3&)>& f, int levels) {
  return integrate_refined_vec(rule, mesh.element_vertices(e), levels, f) /
         mesh.elements[e].volume;
}

double face_mean(const Mesh& mesh, int fid, const SimplexRule& rule,
                 const std::function<double(const Vec3&)>& f, int levels) {
  return integrate_refined(rule, mesh.face_vertices(fid), levels, f) / mesh.faces[fid].area;
}

Vec3 face_tangential_mean(const Mesh& mesh, int fid, const SimplexRule& rule,
                          const std::function<Vec3(const Vec3&)>& f, int levels) {
  const Vec3 n = mesh.faces[fid].normal;
  auto tang = [&](const Vec3& x) -> Vec3 {
    Vec3 v = f(x);
    return v - v.dot(n) * n;
  };
  return integrate_refined_vec(rule, mesh.face_vertices(fid), levels, tang) /
         mesh.faces[fid].area;
}

ElementFields extract_fields(const Mesh& mesh, const DofMap& dofs,
                             const Eigen::VectorXd& x, int e) {
  const MeshElement& el = mesh.elements[e];
  ElementFields F;
  F.lam0 = x[dofs.lam_cell(e)];
  F.q0 = Vec3(x[dofs.q_cell(e, 0)], x[dofs.q_cell(e, 1)], x[dofs.q_cell(e, 2)]);
  F.u = Vec3(x[dofs.u(e, 0)], x[dofs.u(e, 1)], x[dofs.u(e, 2)]);
  F.s0 = x[dofs.s_cell(e)];
  for (int lf = 0; lf < 4; ++lf) {
    const int f = el.face[lf];
    F.lamb[lf] = x[dofs.lam_face(f)];
    if (dofs.q_face(f, 0) >= 0)
      F.qb[lf] = x[dofs.q_face(f, 0)] * mesh.faces[f].frame.t1 +
                 x[dofs.q_face(f, 1)] * mesh.faces[f].frame.t2;
    else
      F.qb[lf] = Vec3::Zero();
    const int sf = dofs.s_face(f);
    F.sb[lf] = sf < 0 ? 0.0 : x[sf];
  }
  return F;
}

}  // namespace pdwg
