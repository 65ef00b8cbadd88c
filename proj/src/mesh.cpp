#include "pdwg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace pdwg {

void validate(const VoxelDomainSpec& spec) {
  for (int d = 0; d < 3; ++d)
    if (spec.extents[d] < 1)
      throw std::invalid_argument("voxel domain: extents must be >= 1 per axis");
  if (!(spec.unit > 0))
    throw std::invalid_argument("voxel domain: unit edge length must be positive");
  for (const VoxelBox& b : spec.holes) {
    for (int d = 0; d < 3; ++d) {
      if (b.lo[d] < 0 || b.hi[d] > spec.extents[d] || b.lo[d] >= b.hi[d])
        throw std::invalid_argument("voxel domain: hole box outside bounding box or empty");
    }
  }
}

namespace {

struct ActiveVoxels {
  Eigen::Vector3i n;
  std::vector<uint8_t> active;
  bool at(int i, int j, int k) const {
    return active[(static_cast<size_t>(k) * n[1] + j) * n[0] + i] != 0;
  }
};

ActiveVoxels voxel_grid(const VoxelDomainSpec& spec) {
  ActiveVoxels g;
  g.n = spec.extents;
  g.active.assign(static_cast<size_t>(g.n[0]) * g.n[1] * g.n[2], 1);
  for (const VoxelBox& b : spec.holes)
    for (int k = b.lo[2]; k < b.hi[2]; ++k)
      for (int j = b.lo[1]; j < b.hi[1]; ++j)
        for (int i = b.lo[0]; i < b.hi[0]; ++i)
          g.active[(static_cast<size_t>(k) * g.n[1] + j) * g.n[0] + i] = 0;
  if (std::all_of(g.active.begin(), g.active.end(), [](uint8_t a) { return a == 0; }))
    throw std::invalid_argument("voxel domain: holes cover the whole box");
  return g;
}

struct TriKey {
  std::array<int, 3> v;
  bool operator==(const TriKey& o) const { return v == o.v; }
};
struct TriKeyHash {
  size_t operator()(const TriKey& k) const {
    size_t h = 146527;
    for (int x : k.v) h = h * 1000003u + static_cast<size_t>(x);
    return h;
  }
};

// The six Kuhn tetrahedra of the unit cube: paths from (0,0,0) to (1,1,1)
// stepping one axis at a time, one tet per permutation of the axes.
constexpr int kAxisPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

}  // namespace

Mesh build_mesh(const VoxelDomainSpec& spec, int level) {
  validate(spec);
  if (level < 1) throw std::invalid_argument("build_mesh: level must be >= 1");

  ActiveVoxels vox = voxel_grid(spec);
  const Eigen::Vector3i nc = vox.n * level;  // cubes per axis
  const double hcube = spec.unit / level;

  Mesh mesh;

  // Lattice vertex ids, allocated on first use.
  const Eigen::Vector3i nv = nc + Eigen::Vector3i::Ones();
  std::vector<int> vid(static_cast<size_t>(nv[0]) * nv[1] * nv[2], -1);
  auto vertex = [&](int i, int j, int k) {
    size_t key = (static_cast<size_t>(k) * nv[1] + j) * nv[0] + i;
    if (vid[key] < 0) {
      vid[key] = static_cast<int>(mesh.vertices.size());
      mesh.vertices.push_back(spec.origin + hcube * Vec3(i, j, k));
    }
    return vid[key];
  };

  std::unordered_map<TriKey, int, TriKeyHash> face_ids;
  auto face_of = [&](std::array<int, 3> tri, int elem) {
    std::sort(tri.begin(), tri.end());
    auto [it, inserted] = face_ids.try_emplace(TriKey{tri}, static_cast<int>(mesh.faces.size()));
    if (inserted) {
      MeshFace f;
      f.v = tri;
      const Vec3 &a = mesh.vertices[tri[0]], &b = mesh.vertices[tri[1]], &c = mesh.vertices[tri[2]];
      Vec3 cr = (b - a).cross(c - a);
      f.area = 0.5 * cr.norm();
      f.normal = cr.normalized();
      f.centroid = (a + b + c) / 3.0;
      f.frame = frame_from_normal(f.normal);
      f.elem[0] = elem;
      mesh.faces.push_back(f);
    } else {
      MeshFace& f = mesh.faces[it->second];
      if (f.elem[1] >= 0)
        throw std::runtime_error("build_mesh: face shared by more than two elements");
      f.elem[1] = elem;
    }
    return it->second;
  };

  for (int k = 0; k < nc[2]; ++k)
    for (int j = 0; j < nc[1]; ++j)
      for (int i = 0; i < nc[0]; ++i) {
        if (!vox.at(i / level, j / level, k / level)) continue;
        for (const auto& perm : kAxisPerms) {
          Eigen::Vector3i p(i, j, k);
          std::array<int, 4> ids;
          ids[0] = vertex(p[0], p[1], p[2]);
          for (int s = 0; s < 3; ++s) {
            p[perm[s]] += 1;
            ids[s + 1] = vertex(p[0], p[1], p[2]);
          }
          std::sort(ids.begin(), ids.end());

          MeshElement el;
          el.v = ids;
          const int e = static_cast<int>(mesh.elements.size());
          mesh.elements.push_back(el);  // faces filled below (vertex ids final)
          MeshElement& elref = mesh.elements.back();

          std::array<Vec3, 4> P = {mesh.vertices[ids[0]], mesh.vertices[ids[1]],
                                   mesh.vertices[ids[2]], mesh.vertices[ids[3]]};
          elref.volume = std::abs((P[1] - P[0]).cross(P[2] - P[0]).dot(P[3] - P[0])) / 6.0;
          elref.centroid = 0.25 * (P[0] + P[1] + P[2] + P[3]);
          elref.diameter = 0;
          for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
              elref.diameter = std::max(elref.diameter, (P[a] - P[b]).norm());

          for (int lf = 0; lf < 4; ++lf) {  // face lf is opposite vertex lf
            std::array<int, 3> tri;
            for (int s = 0, t = 0; s < 4; ++s)
              if (s != lf) tri[t++] = ids[s];
            int fid = face_of(tri, e);
            elref.face[lf] = fid;
            const MeshFace& f = mesh.faces[fid];
            elref.sign[lf] = (f.normal.dot(f.centroid - elref.centroid) > 0) ? 1.0 : -1.0;
          }
        }
      }

  for (const MeshElement& el : mesh.elements) mesh.h = std::max(mesh.h, el.diameter);
  for (const MeshFace& f : mesh.faces)
    if (f.boundary()) ++mesh.n_boundary_faces;

  mesh.boundary_components = boundary_component_faces(mesh);
  for (size_t c = 0; c < mesh.boundary_components.size(); ++c)
    for (int fid : mesh.boundary_components[c])
      mesh.faces[fid].component = static_cast<int>(c);

  return mesh;
}

std::vector<std::vector<int>> boundary_component_faces(const Mesh& mesh) {
  // Edge (vertex-id pair) -> incident boundary faces.
  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  std::vector<int> bfaces;
  for (size_t fid = 0; fid < mesh.faces.size(); ++fid) {
    const MeshFace& f = mesh.faces[fid];
    if (!f.boundary()) continue;
    bfaces.push_back(static_cast<int>(fid));
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        edge_faces[{f.v[a], f.v[b]}].push_back(static_cast<int>(fid));
  }

  std::unordered_map<int, int> comp;  // face id -> component
  std::vector<std::vector<int>> components;
  for (int seed : bfaces) {
    if (comp.count(seed)) continue;
    std::vector<int> stack{seed}, members;
    comp[seed] = static_cast<int>(components.size());
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      members.push_back(f);
      const MeshFace& mf = mesh.faces[f];
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
          for (int g : edge_faces[{mf.v[a], mf.v[b]}])
            if (!comp.count(g)) {
              comp[g] = comp[seed];
              stack.push_back(g);
            }
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }

  if (components.empty()) return components;

  // Exterior component: the one containing the boundary face with
  // lexicographically smallest centroid.
  int best = bfaces.front();
  auto lex_less = [&](const Vec3& a, const Vec3& b) {
    for (int d = 0; d < 3; ++d) {
      if (a[d] < b[d] - 1e-12) return true;
      if (a[d] > b[d] + 1e-12) return false;
    }
    return false;
  };
  for (int f : bfaces)
    if (lex_less(mesh.faces[f].centroid, mesh.faces[best].centroid)) best = f;
  std::swap(components[0], components[comp[best]]);
  // Deterministic order for the rest: by smallest member face id.
  std::sort(components.begin() + 1, components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

}  // namespace pdwg
