#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include <pdwg/solver.hpp>

using namespace pdwg;

namespace {

Mesh cube_mesh(int level) {
  VoxelDomainSpec spec;
  spec.extents = Eigen::Vector3i(1, 1, 1);
  return build_mesh(spec, level);
}

Mesh lshape_mesh(int level) {
  VoxelDomainSpec spec;
  spec.extents = Eigen::Vector3i(2, 2, 1);
  spec.origin = Vec3(-1, -1, 0);
  spec.holes.push_back({Eigen::Vector3i(1, 0, 0), Eigen::Vector3i(2, 1, 1)});
  return build_mesh(spec, level);
}

// Constant exact solution: both volume equations vanish, so the discrete
// scheme must reproduce it with zero dual variables on any mesh.
ProblemSpec constant_problem(const Vec3& eps, const Vec3& u0, double p) {
  ProblemSpec prob;
  prob.eps = eps;
  prob.p = p;
  prob.exact_u = [u0](const Vec3&) { return u0; };
  prob.f = [](const Vec3&) { return 0.0; };
  prob.g = [](const Vec3&) { return Vec3::Zero(); };
  prob.flux_bc = [eps, u0](const Vec3&, const Vec3& n) {
    return (eps.asDiagonal() * u0).dot(n);
  };
  return prob;
}

void check_constant_exact(const Mesh& mesh, double p, int max_sweeps) {
  Vec3 eps(2.0, 1.0, 0.5), u0(1.0, -2.0, 3.0);
  ProblemSpec prob = constant_problem(eps, u0, p);
  SolveParams par = SolveParams::from(prob);

  SolveReport rep = run_solver(prob, mesh, par);
  CHECK(rep.converged);
  CHECK(rep.iterations <= max_sweeps);

  const DofMap& d = rep.dofs;
  double dual = 0;
  for (int i = 0; i < d.u0; ++i) dual = std::max(dual, std::abs(rep.x[i]));
  for (int i = d.s_cell0; i < d.total; ++i) dual = std::max(dual, std::abs(rep.x[i]));
  CHECK(dual < 1e-9);
  for (int e = 0; e < d.n_elems; ++e)
    for (int k = 0; k < 3; ++k)
      CHECK(rep.x[d.u(e, k)] == doctest::Approx(u0[k]).epsilon(1e-9));
}

}  // namespace

TEST_SUITE("solver") {
  TEST_CASE("diagonal system solves exactly") {
    SpMat A(2, 2);
    std::vector<Triplet> trip = {{0, 0, 2.0}, {1, 1, -3.0}};
    A.setFromTriplets(trip.begin(), trip.end());
    Eigen::VectorXd b(2);
    b << 2.0, 3.0;
    Eigen::VectorXd x = solve_linear(A, b);
    CHECK(x[0] == 1.0);
    CHECK(x[1] == -1.0);
  }

  TEST_CASE("zero right-hand side gives the zero vector") {
    SpMat A(3, 3);
    std::vector<Triplet> trip = {{0, 0, 4.0}, {1, 1, 1.0}, {2, 2, 0.5},
                                 {0, 1, 1.0}, {1, 0, 1.0}};
    A.setFromTriplets(trip.begin(), trip.end());
    Eigen::VectorXd x = solve_linear(A, Eigen::VectorXd::Zero(3));
    CHECK(x.cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("a rank-deficient matrix is reported") {
    SpMat A(2, 2);
    std::vector<Triplet> trip = {{0, 0, 1.0}, {0, 1, 1.0}, {1, 0, 2.0}, {1, 1, 2.0}};
    A.setFromTriplets(trip.begin(), trip.end());
    Eigen::VectorXd b(2);
    b << 1.0, 2.0;
    CHECK_THROWS_AS(solve_linear(A, b), std::runtime_error);
  }

  TEST_CASE("the linear solve is linear in the data") {
    std::mt19937 gen(7);
    std::normal_distribution<double> dist;
    const int n = 40;
    std::vector<Triplet> trip;
    for (int i = 0; i < n; ++i) {
      trip.emplace_back(i, i, 10.0);
      int j = static_cast<int>(gen() % n);
      double v = dist(gen);
      trip.emplace_back(i, j, v);
      trip.emplace_back(j, i, v);
    }
    SpMat A(n, n);
    A.setFromTriplets(trip.begin(), trip.end());
    Eigen::VectorXd b1(n), b2(n);
    for (int i = 0; i < n; ++i) {
      b1[i] = dist(gen);
      b2[i] = dist(gen);
    }
    Eigen::VectorXd lhs = solve_linear(A, b1 + 2.0 * b2);
    Eigen::VectorXd rhs = solve_linear(A, b1) + 2.0 * solve_linear(A, b2);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10 * rhs.cwiseAbs().maxCoeff());
  }

  TEST_CASE("constant fields are reproduced exactly") {
    check_constant_exact(cube_mesh(2), 2.0, 1);
    check_constant_exact(lshape_mesh(1), 2.0, 1);
  }

  TEST_CASE("reweighted sweeps settle on a constant field immediately") {
    check_constant_exact(cube_mesh(1), 3.0, 3);
  }

  TEST_CASE("quadratic case needs a single sweep") {
    ProblemSpec prob = example(1, 2.0);
    Mesh mesh = cube_mesh(2);
    SolveReport rep = run_solver(prob, mesh, SolveParams::from(prob));
    CHECK(rep.iterations == 1);
    CHECK(rep.converged);
    CHECK(rep.updates.size() == 1);
    CHECK(rep.residual < 1e-9);
  }

  TEST_CASE("repeated runs are bitwise identical") {
    ProblemSpec prob = example(1, 3.0);
    Mesh mesh = cube_mesh(1);
    SolveParams par = SolveParams::from(prob);
    par.max_iters = 5;
    SolveReport a = run_solver(prob, mesh, par);
    SolveReport b = run_solver(prob, mesh, par);
    REQUIRE(a.x.size() == b.x.size());
    CHECK((a.x - b.x).cwiseAbs().maxCoeff() == 0.0);
    CHECK(a.iterations == b.iterations);
  }

  TEST_CASE("the update history shrinks under reweighting") {
    ProblemSpec prob = example(1, 3.0);
    Mesh mesh = cube_mesh(1);
    SolveParams par = SolveParams::from(prob);
    par.max_iters = 40;
    SolveReport rep = run_solver(prob, mesh, par);
    REQUIRE(rep.updates.size() >= 3);
    // Tail of the sweep-to-sweep update sequence decreases.
    size_t m = rep.updates.size();
    CHECK(rep.updates[m - 1] < rep.updates[m - 2]);
    CHECK(rep.updates[m - 1] < rep.updates[2]);
  }
}
