#include "pdwg/dof_map.hpp"

namespace pdwg {

DofMap build_dof_map(const Mesh& mesh) {
  DofMap d;
  d.n_elems = static_cast<int>(mesh.elements.size());
  d.n_faces = static_cast<int>(mesh.faces.size());
  d.n_ifaces = mesh.n_interior_faces();
  d.n_components = static_cast<int>(mesh.boundary_components.size());

  d.iface.assign(d.n_faces, -1);
  d.fcomp.assign(d.n_faces, -1);
  int next = 0;
  for (int f = 0; f < d.n_faces; ++f) {
    if (mesh.faces[f].boundary())
      d.fcomp[f] = mesh.faces[f].component;
    else
      d.iface[f] = next++;
  }

  d.lam_cell0 = 0;
  d.lam_face0 = d.lam_cell0 + d.n_elems;
  d.q_cell0 = d.lam_face0 + d.n_faces;
  d.q_face0 = d.q_cell0 + 3 * d.n_elems;
  d.u0 = d.q_face0 + 2 * d.n_ifaces;
  d.s_cell0 = d.u0 + 3 * d.n_elems;
  d.s_face0 = d.s_cell0 + d.n_elems;
  d.s_comp0 = d.s_face0 + d.n_ifaces;
  d.total = d.s_comp0 + (d.n_components - 1) + 1;  // + mean-zero multiplier
  return d;
}

std::vector<std::pair<int, double>> scatter(const Mesh& mesh, const DofMap& dofs, int elem,
                                            const std::array<double, kLocalSlots>& local) {
  const MeshElement& el = mesh.elements[elem];
  std::vector<std::pair<int, double>> out;
  out.reserve(kLocalSlots);
  auto emit = [&](int g, double v) {
    if (g >= 0) out.emplace_back(g, v);
  };
  emit(dofs.lam_cell(elem), local[0]);
  for (int lf = 0; lf < 4; ++lf) emit(dofs.lam_face(el.face[lf]), local[1 + lf]);
  for (int k = 0; k < 3; ++k) emit(dofs.q_cell(elem, k), local[5 + k]);
  for (int lf = 0; lf < 4; ++lf)
    for (int k = 0; k < 2; ++k) emit(dofs.q_face(el.face[lf], k), local[8 + 2 * lf + k]);
  for (int k = 0; k < 3; ++k) emit(dofs.u(elem, k), local[16 + k]);
  emit(dofs.s_cell(elem), local[19]);
  for (int lf = 0; lf < 4; ++lf) emit(dofs.s_face(el.face[lf]), local[20 + lf]);
  return out;
}

}  // namespace pdwg
