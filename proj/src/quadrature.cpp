#include "pdwg/quadrature.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace pdwg {

FaceFrame frame_from_normal(const Vec3& n) {
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(n[i]) < std::abs(n[k])) k = i;
  Vec3 e = Vec3::Unit(k);
  Vec3 t1 = (e - e.dot(n) * n).normalized();
  Vec3 t2 = n.cross(t1);
  return {n, t1, t2};
}

// Golub-Welsch for the Jacobi weight (1-x)^alpha (1+x)^0 on [-1,1], then
// mapped to [0,1].  Recurrence coefficients from the standard three-term
// relation for Jacobi polynomials with beta = 0.
Rule1d gauss_jacobi(int n, int alpha) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: need n >= 1");
  if (alpha < 0) throw std::invalid_argument("gauss_jacobi: need alpha >= 0");
  const double a = alpha;

  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    // diagonal a_k = (b^2-a^2) / ((2k+a+b)(2k+a+b+2)) with b = 0
    double den = (2 * k + a) * (2 * k + a + 2);
    J(k, k) = (den == 0.0) ? 0.0 : -a * a / den;
    if (k > 0) {
      double num = 4.0 * k * (k + a) * k * (k + a);
      double d = (2 * k + a) * (2 * k + a);
      double off = std::sqrt(num / (d * (2 * k + a + 1) * (2 * k + a - 1)));
      J(k, k - 1) = J(k - 1, k) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("gauss_jacobi: eigen decomposition failed");

  // mu0 = int_{-1}^{1} (1-x)^a dx = 2^{a+1} / (a+1)
  const double mu0 = std::pow(2.0, a + 1) / (a + 1);
  Rule1d r;
  r.points.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    r.points[i] = 0.5 * (1.0 + es.eigenvalues()[i]);  // map to [0,1]
    double v0 = es.eigenvectors()(0, i);
    // weight on [0,1] with weight function (1-x)^a picks up 1/2^{a+1}
    r.weights[i] = mu0 * v0 * v0 / std::pow(2.0, a + 1);
  }
  return r;
}

static int points_for_degree(int degree) {
  return std::max(1, (degree + 2) / 2);  // ceil((degree+1)/2)
}

SimplexRule triangle_rule(int degree) {
  if (degree < 0) throw std::invalid_argument("triangle_rule: degree < 0");
  const int m = points_for_degree(degree);
  // Duffy map (u,v) -> (x,y) = (u, v(1-u)), Jacobian (1-u).
  Rule1d ru = gauss_jacobi(m, 1);
  Rule1d rv = gauss_jacobi(m, 0);
  SimplexRule rule;
  rule.degree = degree;
  rule.bary.resize(m * m, 3);
  rule.weights.resize(m * m);
  int idx = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j, ++idx) {
      double x = ru.points[i];
      double y = rv.points[j] * (1.0 - ru.points[i]);
      rule.bary(idx, 0) = 1.0 - x - y;
      rule.bary(idx, 1) = x;
      rule.bary(idx, 2) = y;
      rule.weights[idx] = ru.weights[i] * rv.weights[j];
    }
  return rule;  // weights sum to 1/2
}

SimplexRule tetrahedron_rule(int degree) {
  if (degree < 0) throw std::invalid_argument("tetrahedron_rule: degree < 0");
  const int m = points_for_degree(degree);
  // (u,v,w) -> (x,y,z) = (u, v(1-u), w(1-u)(1-v)), Jacobian (1-u)^2 (1-v).
  Rule1d ru = gauss_jacobi(m, 2);
  Rule1d rv = gauss_jacobi(m, 1);
  Rule1d rw = gauss_jacobi(m, 0);
  SimplexRule rule;
  rule.degree = degree;
  rule.bary.resize(m * m * m, 4);
  rule.weights.resize(m * m * m);
  int idx = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k, ++idx) {
        double x = ru.points[i];
        double y = rv.points[j] * (1.0 - ru.points[i]);
        double z = rw.points[k] * (1.0 - ru.points[i]) * (1.0 - rv.points[j]);
        rule.bary(idx, 0) = 1.0 - x - y - z;
        rule.bary(idx, 1) = x;
        rule.bary(idx, 2) = y;
        rule.bary(idx, 3) = z;
        rule.weights[idx] = ru.weights[i] * rv.weights[j] * rw.weights[k];
      }
  return rule;  // weights sum to 1/6
}

double triangle_area(const std::array<Vec3, 3>& t) {
  return 0.5 * (t[1] - t[0]).cross(t[2] - t[0]).norm();
}

double tet_volume(const std::array<Vec3, 4>& t) {
  return (t[1] - t[0]).cross(t[2] - t[0]).dot(t[3] - t[0]) / 6.0;
}

template <size_t N, typename R, typename F>
static R integrate_impl(const SimplexRule& rule, const std::array<Vec3, N>& verts,
                        double measure_scale, const F& f, R zero) {
  R acc = zero;
  for (int q = 0; q < rule.weights.size(); ++q) {
    Vec3 x = Vec3::Zero();
    for (size_t v = 0; v < N; ++v) x += rule.bary(q, v) * verts[v];
    acc += measure_scale * rule.weights[q] * f(x);
  }
  return acc;
}

double integrate(const SimplexRule& rule, const std::array<Vec3, 3>& tri,
                 const std::function<double(const Vec3&)>& f) {
  return integrate_impl(rule, tri, triangle_area(tri) / 0.5, f, 0.0);
}

double integrate(const SimplexRule& rule, const std::array<Vec3, 4>& tet,
                 const std::function<double(const Vec3&)>& f) {
  return integrate_impl(rule, tet, std::abs(tet_volume(tet)) * 6.0, f, 0.0);
}

Vec3 integrate_vec(const SimplexRule& rule, const std::array<Vec3, 3>& tri,
                   const std::function<Vec3(const Vec3&)>& f) {
  return integrate_impl(rule, tri, triangle_area(tri) / 0.5, f, Vec3{Vec3::Zero()});
}

Vec3 integrate_vec(const SimplexRule& rule, const std::array<Vec3, 4>& tet,
                   const std::function<Vec3(const Vec3&)>& f) {
  return integrate_impl(rule, tet, std::abs(tet_volume(tet)) * 6.0, f, Vec3{Vec3::Zero()});
}

std::array<std::array<Vec3, 3>, 4> split_triangle(const std::array<Vec3, 3>& t) {
  Vec3 m01 = 0.5 * (t[0] + t[1]), m12 = 0.5 * (t[1] + t[2]), m02 = 0.5 * (t[0] + t[2]);
  return {{{t[0], m01, m02}, {m01, t[1], m12}, {m02, m12, t[2]}, {m01, m12, m02}}};
}

// Red refinement (Bey): four corner tets plus the interior octahedron cut
// along the m02-m13 diagonal.  The children tile the parent exactly.
std::array<std::array<Vec3, 4>, 8> split_tetrahedron(const std::array<Vec3, 4>& t) {
  auto m = [&](int i, int j) { return Vec3(0.5 * (t[i] + t[j])); };
  Vec3 m01 = m(0, 1), m02 = m(0, 2), m03 = m(0, 3);
  Vec3 m12 = m(1, 2), m13 = m(1, 3), m23 = m(2, 3);
  return {{{t[0], m01, m02, m03},
           {m01, t[1], m12, m13},
           {m02, m12, t[2], m23},
           {m03, m13, m23, t[3]},
           {m01, m02, m03, m13},
           {m01, m02, m12, m13},
           {m02, m03, m13, m23},
           {m02, m12, m13, m23}}};
}

template <typename R, typename IntFn, typename SplitFn, typename Simplex>
static R refined_impl(const Simplex& s, int levels, const IntFn& integ,
                      const SplitFn& split, R zero) {
  if (levels <= 0) return integ(s);
  R acc = zero;
  for (const auto& child : split(s)) acc += refined_impl(child, levels - 1, integ, split, zero);
  return acc;
}

double integrate_refined(const SimplexRule& rule, const std::array<Vec3, 3>& tri,
                         int levels, const std::function<double(const Vec3&)>& f) {
  auto integ = [&](const std::array<Vec3, 3>& s) { return integrate(rule, s, f); };
  return refined_impl(tri, levels, integ, split_triangle, 0.0);
}

double integrate_refined(const SimplexRule& rule, const std::array<Vec3, 4>& tet,
                         int levels, const std::function<double(const Vec3&)>& f) {
  auto integ = [&](const std::array<Vec3, 4>& s) { return integrate(rule, s, f); };
  return refined_impl(tet, levels, integ, split_tetrahedron, 0.0);
}

Vec3 integrate_refined_vec(const SimplexRule& rule, const std::array<Vec3, 4>& tet,
                           int levels, const std::function<Vec3(const Vec3&)>& f) {
  auto integ = [&](const std::array<Vec3, 4>& s) { return integrate_vec(rule, s, f); };
  return refined_impl(tet, levels, integ, split_tetrahedron, Vec3{Vec3::Zero()});
}

Vec3 integrate_refined_vec(const SimplexRule& rule, const std::array<Vec3, 3>& tri,
                           int levels, const std::function<Vec3(const Vec3&)>& f) {
  auto integ = [&](const std::array<Vec3, 3>& s) { return integrate_vec(rule, s, f); };
  return refined_impl(tri, levels, integ, split_triangle, Vec3{Vec3::Zero()});
}

}  // namespace pdwg
