#pragma once

// Shared small types for the div-curl solver.

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <Eigen/SparseCore>

namespace pdwg {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

// Right-handed orthonormal frame attached to a face: t1 x t2 = n.
struct FaceFrame {
  Vec3 n;
  Vec3 t1;
  Vec3 t2;
};

// Deterministic tangent frame from a unit normal.  Picks the coordinate axis
// least aligned with n (ties -> smaller index) and Gram-Schmidts it, so the
// frame is stable under small perturbations of n and reproducible across runs.
FaceFrame frame_from_normal(const Vec3& n);

}  // namespace pdwg
