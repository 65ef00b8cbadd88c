#include "pdwg/assembly.hpp"

#include <cmath>
#include <stdexcept>

namespace pdwg {

SolveParams SolveParams::from(const ProblemSpec& ps) {
  SolveParams par;
  par.p = ps.p;
  par.rho1 = ps.rho1;
  par.rho2 = ps.rho2;
  par.rho3 = ps.rho3;
  par.eps0 = std::pow(10.0, -6.0 / (ps.p - 1.0));
  return par;
}

double stabilizer_weight(double m, double exponent, double eps0) {
  if (exponent == 2.0) return 1.0;
  return std::pow(std::abs(m) + eps0, exponent - 2.0);
}

SpMat coupling_matrix(const Mesh& mesh, const DofMap& dofs, const Vec3& eps) {
  if (!(eps.minCoeff() > 0))
    throw std::invalid_argument("coupling_matrix: eps must be positive definite");
  std::vector<Triplet> trip;
  trip.reserve(mesh.elements.size() * 40);
  for (size_t e = 0; e < mesh.elements.size(); ++e) {
    const MeshElement& el = mesh.elements[e];
    for (int lf = 0; lf < 4; ++lf) {
      const int fid = el.face[lf];
      const MeshFace& fc = mesh.faces[fid];
      const double a = fc.area, sg = el.sign[lf];
      const Vec3 n_out = sg * fc.normal;
      // (u, eps grad_w lam):  grad_w pairs the lam face value with |F| n_out
      for (int j = 0; j < 3; ++j)
        trip.emplace_back(dofs.lam_face(fid), dofs.u(static_cast<int>(e), j),
                          a * eps[j] * n_out[j]);
      // (u, curl_w q): face part only; t1 x n = -t2, t2 x n = t1 in the frame
      if (dofs.q_face(fid, 0) >= 0) {
        const Vec3 &t1 = fc.frame.t1, &t2 = fc.frame.t2;
        for (int j = 0; j < 3; ++j) {
          trip.emplace_back(dofs.q_face(fid, 0), dofs.u(static_cast<int>(e), j),
                            sg * a * t2[j]);
          trip.emplace_back(dofs.q_face(fid, 1), dofs.u(static_cast<int>(e), j),
                            -sg * a * t1[j]);
        }
      }
      // (q cell, eps grad_w s)
      const int sf = dofs.s_face(fid);
      if (sf >= 0)
        for (int j = 0; j < 3; ++j)
          trip.emplace_back(dofs.q_cell(static_cast<int>(e), j), sf, a * eps[j] * n_out[j]);
    }
  }
  SpMat A(dofs.total, dofs.total);
  A.setFromTriplets(trip.begin(), trip.end());
  return A;
}

SpMat stabilizer_s1(const Mesh& mesh, const DofMap& dofs, const SolveParams& par,
                    const Eigen::VectorXd& state) {
  std::vector<Triplet> trip;
  trip.reserve(mesh.elements.size() * 120);
  for (size_t e = 0; e < mesh.elements.size(); ++e) {
    const MeshElement& el = mesh.elements[e];
    const ElementFields m = extract_fields(mesh, dofs, state, static_cast<int>(e));
    const double hp = std::pow(el.diameter, 1.0 - par.p);
    for (int lf = 0; lf < 4; ++lf) {
      const int fid = el.face[lf];
      const MeshFace& fc = mesh.faces[fid];
      const double a = fc.area, sg = el.sign[lf];
      const Vec3 n_out = sg * fc.normal;

      // scalar jump part
      const double wl = stabilizer_weight(m.lam0 - m.lamb[lf], par.p, par.eps0);
      const double cl = par.rho1 * hp * a * wl;
      const int i0 = dofs.lam_cell(static_cast<int>(e)), i1 = dofs.lam_face(fid);
      trip.emplace_back(i0, i0, cl);
      trip.emplace_back(i0, i1, -cl);
      trip.emplace_back(i1, i0, -cl);
      trip.emplace_back(i1, i1, cl);

      // tangential jump part: J(y) = (q0 - qb) x n_out as a function of the
      // five local coefficients (q0 xyz, qb in the face frame)
      const double wq =
          stabilizer_weight((m.q0 - m.qb[lf]).cross(n_out).norm(), par.p, par.eps0);
      const double cq = par.rho2 * hp * a * wq;
      Vec3 col[5];
      for (int j = 0; j < 3; ++j) col[j] = Vec3::Unit(j).cross(n_out);
      col[3] = sg * fc.frame.t2;
      col[4] = -sg * fc.frame.t1;
      int idx[5] = {dofs.q_cell(static_cast<int>(e), 0), dofs.q_cell(static_cast<int>(e), 1),
                    dofs.q_cell(static_cast<int>(e), 2), dofs.q_face(fid, 0),
                    dofs.q_face(fid, 1)};
      for (int r = 0; r < 5; ++r) {
        if (idx[r] < 0) continue;
        for (int c = 0; c < 5; ++c) {
          if (idx[c] < 0) continue;
          const double v = cq * col[r].dot(col[c]);
          if (v != 0.0) trip.emplace_back(idx[r], idx[c], v);
        }
      }
    }
  }
  SpMat A(dofs.total, dofs.total);
  A.setFromTriplets(trip.begin(), trip.end());
  return A;
}

SpMat stabilizer_s2(const Mesh& mesh, const DofMap& dofs, const SolveParams& par,
                    const Eigen::VectorXd& state) {
  const double qq = par.q();
  std::vector<Triplet> trip;
  trip.reserve(mesh.elements.size() * 16);
  for (size_t e = 0; e < mesh.elements.size(); ++e) {
    const MeshElement& el = mesh.elements[e];
    const ElementFields m = extract_fields(mesh, dofs, state, static_cast<int>(e));
    const double hq = std::pow(el.diameter, 1.0 - qq);
    for (int lf = 0; lf < 4; ++lf) {
      const int fid = el.face[lf];
      const double a = mesh.faces[fid].area;
      const double w = stabilizer_weight(m.s0 - m.sb[lf], qq, par.eps0);
      const double c = par.rho3 * hq * a * w;
      const int i0 = dofs.s_cell(static_cast<int>(e)), i1 = dofs.s_face(fid);
      trip.emplace_back(i0, i0, c);
      if (i1 >= 0) {  // face value pinned to zero on the exterior boundary
        trip.emplace_back(i0, i1, -c);
        trip.emplace_back(i1, i0, -c);
        trip.emplace_back(i1, i1, c);
      }
    }
  }
  SpMat A(dofs.total, dofs.total);
  A.setFromTriplets(trip.begin(), trip.end());
  return A;
}

SpMat mean_constraint(const Mesh& mesh, const DofMap& dofs) {
  std::vector<Triplet> trip;
  const int mu = dofs.multiplier();
  for (size_t e = 0; e < mesh.elements.size(); ++e) {
    const double v = mesh.elements[e].volume;
    trip.emplace_back(dofs.lam_cell(static_cast<int>(e)), mu, v);
    trip.emplace_back(mu, dofs.lam_cell(static_cast<int>(e)), v);
  }
  SpMat A(dofs.total, dofs.total);
  A.setFromTriplets(trip.begin(), trip.end());
  return A;
}

Eigen::VectorXd load_vector(const Mesh& mesh, const DofMap& dofs,
                            const ProblemSpec& problem, const SolveParams& par) {
  Eigen::VectorXd b = Eigen::VectorXd::Zero(dofs.total);
  const SimplexRule tet = tetrahedron_rule(par.quad_degree);
  const SimplexRule tri = triangle_rule(par.quad_degree);

  for (size_t e = 0; e < mesh.elements.size(); ++e) {
    auto verts = mesh.element_vertices(static_cast<int>(e));
    const int lev =
        touches_any_line(verts, problem.singular_lines) ? par.singular_levels : 0;
    b[dofs.lam_cell(static_cast<int>(e))] -= integrate_refined(tet, verts, lev, problem.f);
    const Vec3 gi = integrate_refined_vec(tet, verts, lev, problem.g);
    for (int j = 0; j < 3; ++j) b[dofs.q_cell(static_cast<int>(e), j)] += gi[j];
  }

  for (size_t fid = 0; fid < mesh.faces.size(); ++fid) {
    const MeshFace& fc = mesh.faces[fid];
    if (!fc.boundary()) continue;
    const MeshElement& el = mesh.elements[fc.elem[0]];
    Vec3 n_out = fc.normal;
    for (int lf = 0; lf < 4; ++lf)
      if (el.face[lf] == static_cast<int>(fid)) n_out = el.sign[lf] * fc.normal;
    auto verts = mesh.face_vertices(static_cast<int>(fid));
    const int lev =
        touches_any_line(verts, problem.singular_lines) ? par.singular_levels : 0;
    b[dofs.lam_face(static_cast<int>(fid))] += integrate_refined(
        tri, verts, lev, [&](const Vec3& x) { return problem.flux_bc(x, n_out); });
  }
  return b;
}

SaddleSystem build_system(const Mesh& mesh, const DofMap& dofs, const ProblemSpec& problem,
                          const SolveParams& par, const Eigen::VectorXd& state) {
  SpMat B = coupling_matrix(mesh, dofs, problem.eps);
  SpMat Bt = SpMat(B.transpose());
  SaddleSystem sys;
  sys.A = stabilizer_s1(mesh, dofs, par, state) + B + Bt;
  sys.A -= stabilizer_s2(mesh, dofs, par, state);
  sys.A += mean_constraint(mesh, dofs);
  sys.b = load_vector(mesh, dofs, problem, par);
  return sys;
}

}  // namespace pdwg
