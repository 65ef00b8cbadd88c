#include <doctest.h>

#include <cmath>
#include <random>

#include <pdwg/quadrature.hpp>
#include <pdwg/types.hpp>

using namespace pdwg;

namespace {

// Exact value of  int_0^1 x^k (1-x)^alpha dx  =  B(k+1, alpha+1).
double beta_integral(int k, int alpha) {
  return std::exp(std::lgamma(k + 1.0) + std::lgamma(alpha + 1.0) -
                  std::lgamma(k + alpha + 2.0));
}

// Exact monomial integrals over the reference simplices:
//   int_tri  x^a y^b     dA = a! b! / (a+b+2)!
//   int_tet  x^a y^b z^c dV = a! b! c! / (a+b+c+3)!
double tri_monomial(int a, int b) {
  return std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(a + b + 3.0));
}
double tet_monomial(int a, int b, int c) {
  return std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) + std::lgamma(c + 1.0) -
                  std::lgamma(a + b + c + 4.0));
}

const std::array<Vec3, 3> kRefTri = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0)};
const std::array<Vec3, 4> kRefTet = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0),
                                     Vec3(0, 0, 1)};

}  // namespace

TEST_SUITE("quadrature") {
  TEST_CASE("one-dimensional Gauss-Jacobi rules hit the Beta integrals") {
    for (int alpha = 0; alpha <= 2; ++alpha) {
      for (int n = 1; n <= 6; ++n) {
        Rule1d rule = gauss_jacobi(n, alpha);
        REQUIRE(rule.points.size() == n);
        REQUIRE(rule.weights.size() == n);
        for (int k = 0; k <= 2 * n - 1; ++k) {
          double got = 0;
          for (int i = 0; i < n; ++i) got += rule.weights[i] * std::pow(rule.points[i], k);
          CHECK(got == doctest::Approx(beta_integral(k, alpha)).epsilon(1e-13));
        }
      }
    }
  }

  TEST_CASE("Gauss-Jacobi nodes are interior, sorted, with positive weights") {
    for (int alpha = 0; alpha <= 2; ++alpha) {
      Rule1d rule = gauss_jacobi(5, alpha);
      for (int i = 0; i < 5; ++i) {
        CHECK(rule.points[i] > 0.0);
        CHECK(rule.points[i] < 1.0);
        CHECK(rule.weights[i] > 0.0);
        if (i) CHECK(rule.points[i] > rule.points[i - 1]);
      }
    }
  }

  TEST_CASE("simplex rule weights sum to the reference measure") {
    for (int degree = 0; degree <= 8; ++degree) {
      CHECK(triangle_rule(degree).weights.sum() == doctest::Approx(0.5).epsilon(1e-14));
      CHECK(tetrahedron_rule(degree).weights.sum() ==
            doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    }
  }

  TEST_CASE("barycentric rows sum to one") {
    SimplexRule tri = triangle_rule(4);
    SimplexRule tet = tetrahedron_rule(4);
    for (int i = 0; i < tri.bary.rows(); ++i)
      CHECK(tri.bary.row(i).sum() == doctest::Approx(1.0).epsilon(1e-14));
    for (int i = 0; i < tet.bary.rows(); ++i)
      CHECK(tet.bary.row(i).sum() == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("triangle rules integrate monomials exactly up to their degree") {
    for (int degree = 0; degree <= 6; ++degree) {
      SimplexRule rule = triangle_rule(degree);
      for (int a = 0; a + 0 <= degree; ++a)
        for (int b = 0; a + b <= degree; ++b) {
          double got = integrate(rule, kRefTri, [&](const Vec3& x) {
            return std::pow(x.x(), a) * std::pow(x.y(), b);
          });
          CHECK(got == doctest::Approx(tri_monomial(a, b)).epsilon(1e-12));
        }
    }
  }

  TEST_CASE("tetrahedron rules integrate monomials exactly up to their degree") {
    for (int degree = 0; degree <= 6; ++degree) {
      SimplexRule rule = tetrahedron_rule(degree);
      for (int a = 0; a <= degree; ++a)
        for (int b = 0; a + b <= degree; ++b)
          for (int c = 0; a + b + c <= degree; ++c) {
            double got = integrate(rule, kRefTet, [&](const Vec3& x) {
              return std::pow(x.x(), a) * std::pow(x.y(), b) * std::pow(x.z(), c);
            });
            CHECK(got == doctest::Approx(tet_monomial(a, b, c)).epsilon(1e-12));
          }
    }
  }

  TEST_CASE("integration is affine covariant") {
    std::array<Vec3, 4> tet = {Vec3(1, 2, 3), Vec3(1.7, 2.1, 3.2), Vec3(0.9, 2.9, 3.1),
                               Vec3(1.2, 2.2, 4.0)};
    SimplexRule rule = tetrahedron_rule(2);
    double vol = std::abs(tet_volume(tet));
    CHECK(integrate(rule, tet, [](const Vec3&) { return 1.0; }) ==
          doctest::Approx(vol).epsilon(1e-13));
    // A linear integrand averages to its centroid value.
    Vec3 centroid = 0.25 * (tet[0] + tet[1] + tet[2] + tet[3]);
    double got = integrate(rule, tet, [](const Vec3& x) { return 2 * x.x() - x.z() + 1; });
    CHECK(got == doctest::Approx(vol * (2 * centroid.x() - centroid.z() + 1)).epsilon(1e-13));
  }

  TEST_CASE("vector integration matches three scalar integrations") {
    SimplexRule rule = triangle_rule(3);
    std::array<Vec3, 3> tri = {Vec3(0, 0, 1), Vec3(2, 0, 1), Vec3(0, 1, 2)};
    auto field = [](const Vec3& x) { return Vec3(x.x() * x.y(), x.z(), 1.0); };
    Vec3 v = integrate_vec(rule, tri, field);
    for (int k = 0; k < 3; ++k) {
      double s = integrate(rule, tri, [&](const Vec3& x) { return field(x)[k]; });
      CHECK(v[k] == doctest::Approx(s).epsilon(1e-14));
    }
  }

  TEST_CASE("subdivision partitions the parent simplex") {
    std::array<Vec3, 4> tet = {Vec3(0, 0, 0), Vec3(1, 0.1, 0), Vec3(0.2, 1.3, 0),
                               Vec3(0.1, 0.4, 0.9)};
    double parent = std::abs(tet_volume(tet));
    double sum = 0;
    for (const auto& child : split_tetrahedron(tet)) {
      double v = std::abs(tet_volume(child));
      CHECK(v == doctest::Approx(parent / 8).epsilon(1e-12));  // Bey children are equal
      sum += v;
    }
    CHECK(sum == doctest::Approx(parent).epsilon(1e-13));

    std::array<Vec3, 3> tri = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0.3, 0.8, 0)};
    double tri_parent = triangle_area(tri);
    double tri_sum = 0;
    for (const auto& child : split_triangle(tri)) {
      CHECK(triangle_area(child) == doctest::Approx(tri_parent / 4).epsilon(1e-12));
      tri_sum += triangle_area(child);
    }
    CHECK(tri_sum == doctest::Approx(tri_parent).epsilon(1e-13));
  }

  TEST_CASE("refined integration agrees with plain integration on polynomials") {
    SimplexRule rule = tetrahedron_rule(3);
    auto f = [](const Vec3& x) { return x.x() * x.x() * x.y() + x.z(); };
    double plain = integrate(rule, kRefTet, f);
    for (int levels = 1; levels <= 3; ++levels)
      CHECK(integrate_refined(rule, kRefTet, levels, f) ==
            doctest::Approx(plain).epsilon(1e-12));
  }

  TEST_CASE("refinement converges on an edge-singular integrand") {
    // r^{-1/2} about the z-axis edge of the reference tetrahedron: integrable,
    // but badly approximated by fixed-order rules.
    auto f = [](const Vec3& x) { return std::pow(x.head<2>().squaredNorm(), -0.25); };
    SimplexRule rule = tetrahedron_rule(4);
    double reference = integrate_refined(rule, kRefTet, 7, f);
    double e0 = std::abs(integrate(rule, kRefTet, f) - reference);
    double e2 = std::abs(integrate_refined(rule, kRefTet, 2, f) - reference);
    double e4 = std::abs(integrate_refined(rule, kRefTet, 4, f) - reference);
    CHECK(e2 < 0.5 * e0);
    CHECK(e4 < 0.5 * e2);
    CHECK(e4 < 1e-4 * reference);
  }

  TEST_CASE("face frames are orthonormal and right-handed") {
    std::mt19937 gen(7);
    std::normal_distribution<double> dist;
    for (int trial = 0; trial < 100; ++trial) {
      Vec3 n(dist(gen), dist(gen), dist(gen));
      if (n.norm() < 1e-3) continue;
      n.normalize();
      FaceFrame fr = frame_from_normal(n);
      CHECK(fr.n.isApprox(n, 1e-14));
      CHECK(fr.t1.norm() == doctest::Approx(1.0).epsilon(1e-13));
      CHECK(fr.t2.norm() == doctest::Approx(1.0).epsilon(1e-13));
      CHECK(std::abs(fr.t1.dot(n)) < 1e-13);
      CHECK(std::abs(fr.t2.dot(n)) < 1e-13);
      CHECK(fr.t1.cross(fr.t2).isApprox(n, 1e-12));
    }
  }

  TEST_CASE("the frame is deterministic in the normal") {
    FaceFrame a = frame_from_normal(Vec3(0, 0, 1));
    FaceFrame b = frame_from_normal(Vec3(0, 0, 1));
    CHECK(a.t1 == b.t1);
    CHECK(a.t2 == b.t2);
  }
}
