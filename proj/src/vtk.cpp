#include "pdwg/vtk.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pdwg {

namespace {
void print_vec(std::FILE* fp, const Vec3& v) {
  std::fprintf(fp, "%.17g %.17g %.17g\n", v.x(), v.y(), v.z());
}
}  // namespace

void write_vtk(const std::string& path, const Mesh& mesh,
               const std::vector<std::pair<std::string, std::vector<Vec3>>>& cell_fields,
               const std::string& title) {
  std::FILE* fp = std::fopen(path.c_str(), "w");
  if (!fp) throw std::runtime_error("write_vtk: cannot open " + path);
  std::fprintf(fp, "# vtk DataFile Version 3.0\n%s\nASCII\nDATASET UNSTRUCTURED_GRID\n",
               title.c_str());
  std::fprintf(fp, "POINTS %zu double\n", mesh.vertices.size());
  for (const Vec3& v : mesh.vertices) print_vec(fp, v);
  const size_t m = mesh.elements.size();
  std::fprintf(fp, "CELLS %zu %zu\n", m, 5 * m);
  for (const MeshElement& el : mesh.elements)
    std::fprintf(fp, "4 %d %d %d %d\n", el.v[0], el.v[1], el.v[2], el.v[3]);
  std::fprintf(fp, "CELL_TYPES %zu\n", m);
  for (size_t i = 0; i < m; ++i) std::fprintf(fp, "10\n");
  if (!cell_fields.empty()) {
    std::fprintf(fp, "CELL_DATA %zu\n", m);
    for (const auto& [name, field] : cell_fields) {
      if (field.size() != m) {
        std::fclose(fp);
        throw std::invalid_argument("write_vtk: field '" + name + "' has wrong size");
      }
      std::fprintf(fp, "VECTORS %s double\n", name.c_str());
      for (const Vec3& v : field) print_vec(fp, v);
    }
  }
  std::fclose(fp);
}

VtkData read_vtk(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_vtk: cannot open " + path);
  VtkData data;
  std::string line;
  auto next_tokens = [&](const std::string& l) {
    std::istringstream ss(l);
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    return tok;
  };
  size_t ncells = 0;
  while (std::getline(in, line)) {
    auto tok = next_tokens(line);
    if (tok.empty()) continue;
    if (tok[0] == "POINTS") {
      size_t n = std::stoul(tok[1]);
      data.points.resize(n);
      for (size_t i = 0; i < n; ++i) in >> data.points[i].x() >> data.points[i].y() >>
          data.points[i].z();
    } else if (tok[0] == "CELLS") {
      ncells = std::stoul(tok[1]);
      data.cells.resize(ncells);
      for (size_t i = 0; i < ncells; ++i) {
        int k;
        in >> k;
        if (k != 4) throw std::runtime_error("read_vtk: only tetrahedra supported");
        for (int j = 0; j < 4; ++j) in >> data.cells[i][j];
      }
    } else if (tok[0] == "VECTORS") {
      auto& field = data.cell_vectors[tok[1]];
      field.resize(ncells);
      for (size_t i = 0; i < ncells; ++i)
        in >> field[i].x() >> field[i].y() >> field[i].z();
    }
  }
  return data;
}

}  // namespace pdwg
