#pragma once

// Global numbering for the lowest-order primal-dual unknowns.
//
// Trial fields:   u   piecewise-constant 3-vector        (3 per element)
//                 s   {cell constant, face constant}     face values vanish on
//                     the exterior boundary component and are a single shared
//                     constant on each interior boundary component
// Test/dual:      lam {cell constant, face constant}     plus one Lagrange
//                     multiplier enforcing zero mean of the cell part
//                 q   {cell 3-vector, tangential face 2-vector}
//                     face part vanishes on the whole boundary
//
// Block layout (one contiguous coefficient vector):
//   [lam_cell | lam_face | q_cell | q_face(interior) | u | s_cell |
//    s_face(interior) | s_component(1..L) | multiplier]

#include <utility>
#include <vector>

#include "pdwg/mesh.hpp"

namespace pdwg {

struct DofMap {
  int n_elems = 0;
  int n_faces = 0;
  int n_ifaces = 0;
  int n_components = 0;  // boundary components (>= 1); component 0 exterior

  // Block offsets.
  int lam_cell0 = 0, lam_face0 = 0, q_cell0 = 0, q_face0 = 0;
  int u0 = 0, s_cell0 = 0, s_face0 = 0, s_comp0 = 0;
  int total = 0;

  std::vector<int> iface;  // face id -> interior face index, -1 on boundary
  std::vector<int> fcomp;  // face id -> boundary component, -1 interior

  int lam_cell(int e) const { return lam_cell0 + e; }
  int lam_face(int f) const { return lam_face0 + f; }
  int q_cell(int e, int k) const { return q_cell0 + 3 * e + k; }
  int q_face(int f, int k) const {  // -1 when the trace is constrained to zero
    return iface[f] < 0 ? -1 : q_face0 + 2 * iface[f] + k;
  }
  int u(int e, int k) const { return u0 + 3 * e + k; }
  int s_cell(int e) const { return s_cell0 + e; }
  int s_face(int f) const {  // -1 on the exterior component (value pinned to 0)
    if (iface[f] >= 0) return s_face0 + iface[f];
    int c = fcomp[f];
    return c == 0 ? -1 : s_comp0 + (c - 1);
  }
  int multiplier() const { return total - 1; }

  // Space dimensions as usually reported (multiplier counted with lam).
  int dim_u() const { return 3 * n_elems; }
  int dim_s() const { return n_elems + n_ifaces + (n_components - 1); }
  int dim_lam() const { return n_elems + n_faces + 1; }
  int dim_q() const { return 3 * n_elems + 2 * n_ifaces; }
};

DofMap build_dof_map(const Mesh& mesh);

// Element-local slot layout used by scatter():
//   0       lam cell
//   1..4    lam on local face lf = slot-1
//   5..7    q cell (xyz)
//   8..15   q on local face lf = (slot-8)/2, frame component (slot-8)%2
//   16..18  u (xyz)
//   19      s cell
//   20..23  s on local face lf = slot-20
inline constexpr int kLocalSlots = 24;

// Map one element's local contributions to (global index, value) pairs.
// Constrained-to-zero slots are dropped; slots tied to a shared component
// constant are redirected there (so several local slots may emit the same
// global index -- callers accumulate).
std::vector<std::pair<int, double>> scatter(const Mesh& mesh, const DofMap& dofs, int elem,
                                            const std::array<double, kLocalSlots>& local);

}  // namespace pdwg
