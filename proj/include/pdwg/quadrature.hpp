#pragma once

// Quadrature on simplices: conical-product (Duffy) rules of arbitrary degree,
// built from 1-D Gauss-Jacobi rules via the Golub-Welsch eigenvalue method.
//
// Rules are stored in barycentric coordinates on the reference simplex and
// their weights sum to the reference measure (1/2 for the triangle, 1/6 for
// the tetrahedron); mapping to a physical simplex only rescales the weights
// by |simplex| / reference measure.

#include <array>
#include <functional>

#include <Eigen/Core>

#include "pdwg/types.hpp"

namespace pdwg {

// n-point Gauss rule for  int_0^1 f(x) (1-x)^alpha dx,  alpha >= 0.
// Exact for polynomials of degree <= 2n-1.  points/weights have size n.
struct Rule1d {
  Eigen::VectorXd points;
  Eigen::VectorXd weights;
};
Rule1d gauss_jacobi(int n, int alpha);

// Quadrature on the reference simplex, points in barycentric coordinates
// (rows of `bary`, dim+1 columns, each row sums to 1).
struct SimplexRule {
  Eigen::MatrixXd bary;
  Eigen::VectorXd weights;
  int degree = 0;
};

// Conical-product rules exact for polynomials of total degree <= degree.
SimplexRule triangle_rule(int degree);
SimplexRule tetrahedron_rule(int degree);

// Integrate f over the physical simplex with the given vertices.
double integrate(const SimplexRule& rule, const std::array<Vec3, 3>& tri,
                 const std::function<double(const Vec3&)>& f);
double integrate(const SimplexRule& rule, const std::array<Vec3, 4>& tet,
                 const std::function<double(const Vec3&)>& f);
Vec3 integrate_vec(const SimplexRule& rule, const std::array<Vec3, 3>& tri,
                   const std::function<Vec3(const Vec3&)>& f);
Vec3 integrate_vec(const SimplexRule& rule, const std::array<Vec3, 4>& tet,
                   const std::function<Vec3(const Vec3&)>& f);

double triangle_area(const std::array<Vec3, 3>& tri);
double tet_volume(const std::array<Vec3, 4>& tet);  // signed

// Uniform refinement into congruence classes: 4 children of a triangle
// (edge midpoints), 8 children of a tetrahedron (corner cut + octahedron
// split along the m02-m13 diagonal).  Children partition the parent.
std::array<std::array<Vec3, 3>, 4> split_triangle(const std::array<Vec3, 3>& tri);
std::array<std::array<Vec3, 4>, 8> split_tetrahedron(const std::array<Vec3, 4>& tet);

// Integrate with `levels` rounds of uniform subdivision applied first
// (levels = 0 reduces to plain `integrate`).  Used near field singularities.
double integrate_refined(const SimplexRule& rule, const std::array<Vec3, 3>& tri,
                         int levels, const std::function<double(const Vec3&)>& f);
double integrate_refined(const SimplexRule& rule, const std::array<Vec3, 4>& tet,
                         int levels, const std::function<double(const Vec3&)>& f);
Vec3 integrate_refined_vec(const SimplexRule& rule, const std::array<Vec3, 4>& tet,
                           int levels, const std::function<Vec3(const Vec3&)>& f);
Vec3 integrate_refined_vec(const SimplexRule& rule, const std::array<Vec3, 3>& tri,
                           int levels, const std::function<Vec3(const Vec3&)>& f);

}  // namespace pdwg
