#include <doctest.h>

#include <map>

#include <pdwg/dof_map.hpp>
#include <pdwg/mesh.hpp>

using namespace pdwg;

namespace {

Mesh cube_mesh(int level) {
  VoxelDomainSpec spec;
  spec.extents = Eigen::Vector3i(1, 1, 1);
  return build_mesh(spec, level);
}

Mesh hollow_mesh() {
  VoxelDomainSpec spec;
  spec.extents = Eigen::Vector3i(3, 3, 3);
  spec.holes.push_back({Eigen::Vector3i(1, 1, 1), Eigen::Vector3i(2, 2, 2)});
  return build_mesh(spec, 1);
}

}  // namespace

TEST_SUITE("dof_map") {
  TEST_CASE("census on the one-voxel cube") {
    Mesh mesh = cube_mesh(1);
    DofMap d = build_dof_map(mesh);
    CHECK(d.n_elems == 6);
    CHECK(d.n_faces == 18);
    CHECK(d.n_ifaces == 6);
    CHECK(d.n_components == 1);
    CHECK(d.dim_lam() == 6 + 18 + 1);
    CHECK(d.dim_q() == 3 * 6 + 2 * 6);
    CHECK(d.dim_u() == 3 * 6);
    CHECK(d.dim_s() == 6 + 6);
    CHECK(d.total == d.dim_lam() + d.dim_q() + d.dim_u() + d.dim_s());
    CHECK(d.total == 85);
    CHECK(d.multiplier() == 84);
  }

  TEST_CASE("census doubles cleanly under refinement") {
    DofMap d = build_dof_map(cube_mesh(2));
    CHECK(d.n_elems == 48);
    CHECK(d.total == 721);
  }

  TEST_CASE("blocks are contiguous and ordered") {
    DofMap d = build_dof_map(cube_mesh(2));
    CHECK(d.lam_cell0 == 0);
    CHECK(d.lam_face0 == d.n_elems);
    CHECK(d.q_cell0 == d.lam_face0 + d.n_faces);
    CHECK(d.q_face0 == d.q_cell0 + 3 * d.n_elems);
    CHECK(d.u0 == d.q_face0 + 2 * d.n_ifaces);
    CHECK(d.s_cell0 == d.u0 + 3 * d.n_elems);
    CHECK(d.s_face0 == d.s_cell0 + d.n_elems);
    CHECK(d.s_comp0 == d.s_face0 + d.n_ifaces);
    CHECK(d.total == d.s_comp0 + (d.n_components - 1) + 1);
  }

  TEST_CASE("boundary traces of q and s are constrained away") {
    Mesh mesh = cube_mesh(1);
    DofMap d = build_dof_map(mesh);
    for (int f = 0; f < d.n_faces; ++f) {
      if (mesh.faces[f].boundary()) {
        CHECK(d.q_face(f, 0) == -1);
        CHECK(d.q_face(f, 1) == -1);
        CHECK(d.s_face(f) == -1);  // exterior component: hard zero
      } else {
        CHECK(d.q_face(f, 0) >= d.q_face0);
        CHECK(d.q_face(f, 1) == d.q_face(f, 0) + 1);
        CHECK(d.s_face(f) >= d.s_face0);
      }
      CHECK(d.lam_face(f) == d.lam_face0 + f);  // lam keeps every face
    }
  }

  TEST_CASE("cavity faces share one floating constant") {
    Mesh mesh = hollow_mesh();
    DofMap d = build_dof_map(mesh);
    REQUIRE(d.n_components == 2);
    CHECK(d.dim_s() == d.n_elems + d.n_ifaces + 1);
    int shared = -1;
    for (int f : mesh.boundary_components[1]) {
      int g = d.s_face(f);
      CHECK(g == d.s_comp0);
      if (shared < 0) shared = g;
      CHECK(g == shared);
      CHECK(d.q_face(f, 0) == -1);  // q stays fully constrained there
    }
    for (int f : mesh.boundary_components[0]) CHECK(d.s_face(f) == -1);
  }

  TEST_CASE("scatter maps local slots to the documented globals") {
    Mesh mesh = cube_mesh(1);
    DofMap d = build_dof_map(mesh);
    const int e = 0;
    const MeshElement& el = mesh.elements[e];

    for (int slot = 0; slot < kLocalSlots; ++slot) {
      std::array<double, kLocalSlots> local{};
      local[slot] = 1.0;
      auto pairs = scatter(mesh, d, e, local);
      std::map<int, double> got;
      for (auto [g, v] : pairs) {
        CHECK(g >= 0);
        CHECK(g < d.total);
        got[g] += v;
      }
      double mass = 0;
      for (auto [g, v] : got) mass += v;
      bool constrained =
          (slot >= 8 && slot <= 15 && d.q_face(el.face[(slot - 8) / 2], (slot - 8) % 2) < 0) ||
          (slot >= 20 && d.s_face(el.face[slot - 20]) < 0);
      CHECK(mass == (constrained ? 0.0 : 1.0));
      if (slot == 0) CHECK(got.at(d.lam_cell(e)) == 1.0);
      if (slot >= 1 && slot <= 4) CHECK(got.at(d.lam_face(el.face[slot - 1])) == 1.0);
      if (slot >= 16 && slot <= 18) CHECK(got.at(d.u(e, slot - 16)) == 1.0);
      if (slot == 19) CHECK(got.at(d.s_cell(e)) == 1.0);
    }
  }

  TEST_CASE("scatter drops constrained slots and keeps interior ones") {
    Mesh mesh = cube_mesh(1);
    DofMap d = build_dof_map(mesh);
    const int e = 0;
    const MeshElement& el = mesh.elements[e];

    std::array<double, kLocalSlots> local{};
    for (int i = 0; i < kLocalSlots; ++i) local[i] = 1.0;
    auto pairs = scatter(mesh, d, e, local);

    int n_boundary = 0, n_interior = 0;
    for (int lf = 0; lf < 4; ++lf)
      (mesh.faces[el.face[lf]].boundary() ? n_boundary : n_interior)++;
    // Dropped: 2 q-slots and 1 s-slot per boundary face.
    CHECK((int)pairs.size() == kLocalSlots - 3 * n_boundary);
  }

  TEST_CASE("elements sharing a face scatter onto the same globals") {
    Mesh mesh = cube_mesh(1);
    DofMap d = build_dof_map(mesh);
    int f = -1;
    for (int i = 0; i < d.n_faces; ++i)
      if (!mesh.faces[i].boundary()) {
        f = i;
        break;
      }
    REQUIRE(f >= 0);
    int e0 = mesh.faces[f].elem[0], e1 = mesh.faces[f].elem[1];
    auto local_face = [&](int e) {
      for (int lf = 0; lf < 4; ++lf)
        if (mesh.elements[e].face[lf] == f) return lf;
      return -1;
    };
    std::array<double, kLocalSlots> a{}, b{};
    a[1 + local_face(e0)] = 1.0;  // lam trace from one side
    b[1 + local_face(e1)] = 1.0;  // and from the other
    auto hot = [](const std::vector<std::pair<int, double>>& pairs) {
      for (auto [g, v] : pairs)
        if (v != 0.0) return g;
      return -1;
    };
    int ga = hot(scatter(mesh, d, e0, a));
    int gb = hot(scatter(mesh, d, e1, b));
    CHECK(ga == d.lam_face(f));
    CHECK(ga == gb);
  }
}
