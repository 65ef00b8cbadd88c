#pragma once

// Legacy ASCII VTK export of tetrahedral meshes with per-cell vector fields.
//
// File layout (legacy "DataFile Version 3.0"):
//   DATASET UNSTRUCTURED_GRID
//   POINTS <n> double                 one "x y z" line per vertex
//   CELLS <m> <5m>                    "4 i0 i1 i2 i3" per tetrahedron
//   CELL_TYPES <m>                    all 10 (VTK_TETRA)
//   CELL_DATA <m>
//   VECTORS <name> double             one "x y z" line per cell, repeated
//                                     per field
// Values are printed with %.17g, so a write/read round trip is exact to
// double precision.

#include <map>
#include <string>
#include <vector>

#include "pdwg/mesh.hpp"

namespace pdwg {

void write_vtk(const std::string& path, const Mesh& mesh,
               const std::vector<std::pair<std::string, std::vector<Vec3>>>& cell_fields,
               const std::string& title = "div-curl fields");

struct VtkData {
  std::vector<Vec3> points;
  std::vector<std::array<int, 4>> cells;
  std::map<std::string, std::vector<Vec3>> cell_vectors;
};

// Minimal reader for the files produced above (used by round-trip tests).
VtkData read_vtk(const std::string& path);

}  // namespace pdwg
