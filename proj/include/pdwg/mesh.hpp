#pragma once

// Tetrahedral meshes of axis-aligned voxel domains.
//
// A domain is a box of cubic voxels minus a list of excluded voxel boxes
// (through-holes, notches, L-shapes...).  Refinement level n splits every
// voxel into n^3 cubes and every cube into 6 tetrahedra sharing the main
// diagonal (Kuhn / Freudenthal subdivision), which is face-conforming across
// neighboring cubes.  All tetrahedra of a level have equal volume.

#include <array>
#include <cstdint>
#include <vector>

#include "pdwg/types.hpp"

namespace pdwg {

// Axis-aligned voxel box in lattice coordinates, half-open [lo, hi).
struct VoxelBox {
  Eigen::Vector3i lo;
  Eigen::Vector3i hi;
};

struct VoxelDomainSpec {
  Eigen::Vector3i extents;           // number of voxels per axis, all >= 1
  Vec3 origin = Vec3::Zero();        // physical position of lattice (0,0,0)
  double unit = 1.0;                 // voxel edge length
  std::vector<VoxelBox> holes;       // excluded boxes, lattice coords
};

struct MeshFace {
  std::array<int, 3> v;     // vertex ids, ascending
  double area = 0;
  Vec3 normal;              // unit normal, orientation fixed by vertex order
  Vec3 centroid;
  FaceFrame frame;          // frame_from_normal(normal)
  int elem[2] = {-1, -1};   // adjacent elements; elem[1] < 0 on the boundary
  int component = -1;       // boundary component id, -1 for interior faces

  bool boundary() const { return elem[1] < 0; }
};

struct MeshElement {
  std::array<int, 4> v;         // vertex ids, ascending
  std::array<int, 4> face;      // global face ids (opposite-vertex order)
  std::array<double, 4> sign;   // +1 if stored face normal points outward
  double volume = 0;
  double diameter = 0;          // longest edge
  Vec3 centroid;
};

struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<MeshElement> elements;
  std::vector<MeshFace> faces;
  double h = 0;                                    // max element diameter
  int n_boundary_faces = 0;
  // Boundary faces grouped by connected component (edge adjacency);
  // component 0 is the exterior one.
  std::vector<std::vector<int>> boundary_components;

  int n_interior_faces() const {
    return static_cast<int>(faces.size()) - n_boundary_faces;
  }
  Vec3 outward_normal(int e, int lf) const {
    const MeshElement& el = elements[e];
    return el.sign[lf] * faces[el.face[lf]].normal;
  }
  std::array<Vec3, 4> element_vertices(int e) const {
    const auto& v = elements[e].v;
    return {vertices[v[0]], vertices[v[1]], vertices[v[2]], vertices[v[3]]};
  }
  std::array<Vec3, 3> face_vertices(int f) const {
    const auto& v = faces[f].v;
    return {vertices[v[0]], vertices[v[1]], vertices[v[2]]};
  }
};

// Throws std::invalid_argument on empty/degenerate specs, holes out of
// bounds, or a hole cover that disconnects or empties the domain... checks
// are shape-level; geometric paradoxes (overlapping holes) are tolerated.
void validate(const VoxelDomainSpec& spec);

// Build the level-n mesh (n >= 1 cubes per voxel edge).
Mesh build_mesh(const VoxelDomainSpec& spec, int level);

// Connected components of the boundary faces under shared-edge adjacency,
// exterior component first.  build_mesh calls this and stores the result;
// exposed separately for testing.
std::vector<std::vector<int>> boundary_component_faces(const Mesh& mesh);

}  // namespace pdwg
