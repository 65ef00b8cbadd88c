#include "pdwg/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pdwg {

namespace {
constexpr double kPi = std::numbers::pi;

struct Polar {
  double r, theta;
};
Polar polar_about(const PolarTerm& t, const Vec3& x) {
  double dx = x.x() - t.x0, dy = x.y() - t.y0;
  double th = std::atan2(dy, dx);
  if (t.wrap && th < 0) th += 2 * kPi;
  return {std::hypot(dx, dy), th};
}
}  // namespace

Vec3 potential_field(const PolarTerm& t, const Vec3& x) {
  auto [r, th] = polar_about(t, x);
  double rg = std::pow(r, t.gamma - 1);
  double sa = std::sin(t.a * th), ca = std::cos(t.a * th);
  return {rg * (t.gamma * sa * std::sin(th) + t.a * ca * std::cos(th)),
          rg * (-t.gamma * sa * std::cos(th) + t.a * ca * std::sin(th)), 0.0};
}

Vec3 potential_curl(const PolarTerm& t, const Vec3& x) {
  auto [r, th] = polar_about(t, x);
  double c = t.a * t.a - t.gamma * t.gamma;
  if (c == 0.0) return Vec3::Zero();  // harmonic potential, curl-free field
  return {0.0, 0.0, c * std::pow(r, t.gamma - 2) * std::sin(t.a * th)};
}

bool contains(const VoxelDomainSpec& spec, const Vec3& x) {
  Vec3 lc = (x - spec.origin) / spec.unit;
  Eigen::Vector3i cell;
  for (int d = 0; d < 3; ++d) {
    cell[d] = static_cast<int>(std::floor(lc[d]));
    if (cell[d] < 0 || cell[d] >= spec.extents[d]) return false;
  }
  for (const VoxelBox& b : spec.holes) {
    bool inside = true;
    for (int d = 0; d < 3; ++d)
      inside = inside && cell[d] >= b.lo[d] && cell[d] < b.hi[d];
    if (inside) return false;
  }
  return true;
}

namespace {

void attach_flux_bc(ProblemSpec& ps) {
  auto u = ps.exact_u;
  Vec3 eps = ps.eps;
  ps.flux_bc = [u, eps](const Vec3& x, const Vec3& n) {
    return (eps.asDiagonal() * u(x)).dot(n);
  };
}

double rho_geometric(double p) {  // 1 at p=2, 9*10^{p-1} beyond
  return p <= 2 ? 1.0 : 9.0 * std::pow(10.0, p - 1);
}

ProblemSpec make_ex1(double p) {
  ProblemSpec ps;
  ps.name = "ex1";
  ps.description =
      "unit cube, eps = diag(3,2,1), smooth trigonometric + linear field";
  ps.domain = {.extents = {1, 1, 1}, .origin = {0, 0, 0}, .unit = 1.0, .holes = {}};
  ps.eps = {3, 2, 1};
  ps.exact_u = [](const Vec3& x) {
    return Vec3(std::sin(kPi * x.x()) * std::cos(kPi * x.y()) + x.x(),
                -std::sin(kPi * x.y()) * std::cos(kPi * x.x()) + x.y(), x.z());
  };
  ps.f = [](const Vec3& x) {
    return kPi * std::cos(kPi * x.x()) * std::cos(kPi * x.y()) + 6.0;
  };
  ps.g = [](const Vec3& x) {
    return Vec3(0, 0, 2 * kPi * std::sin(kPi * x.x()) * std::sin(kPi * x.y()));
  };
  ps.rho1 = ps.rho2 = rho_geometric(p);
  return ps;
}

ProblemSpec make_ex2(double p) {
  ProblemSpec ps;
  ps.name = "ex2";
  ps.description =
      "L-shaped prism (reentrant edge at x=y=0), curl-free potential field "
      "r^{2/3} sin(2 theta / 3), driven purely by the flux boundary data";
  ps.domain = {.extents = {2, 2, 1},
               .origin = {-1, -1, 0},
               .unit = 1.0,
               .holes = {{{1, 0, 0}, {2, 1, 1}}}};  // removes (0,1)x(-1,0)x(0,1)
  PolarTerm t{.x0 = 0, .y0 = 0, .gamma = 2.0 / 3.0, .a = 2.0 / 3.0, .wrap = true};
  ps.exact_u = [t](const Vec3& x) { return potential_field(t, x); };
  ps.f = [](const Vec3&) { return 0.0; };
  ps.g = [](const Vec3&) { return Vec3::Zero(); };
  ps.singular_lines = {{0, 0}};
  ps.rho1 = ps.rho2 = rho_geometric(p);
  return ps;
}

VoxelDomainSpec two_hole_domain() {
  // (-1,3/2)^2 x (0,1/2) minus two z-through-holes -> two toroidal handles.
  return {.extents = {5, 5, 1},
          .origin = {-1, -1, 0},
          .unit = 0.5,
          .holes = {{{1, 1, 0}, {2, 2, 1}},    // (-1/2,0)^2
                    {{3, 1, 0}, {4, 2, 1}}}};  // (1/2,1) x (-1/2,0)
}

VoxelDomainSpec one_hole_domain() {
  // (-1,1/2)^2 x (0,1/2) minus one z-through-hole.
  return {.extents = {3, 3, 1},
          .origin = {-1, -1, 0},
          .unit = 0.5,
          .holes = {{{1, 1, 0}, {2, 2, 1}}}};  // (-1/2,0)^2
}

ProblemSpec make_ex3(double p) {
  ProblemSpec ps;
  ps.name = "ex3";
  ps.description =
      "slab with two through-holes, field with r^{1/2} and r^{2/3} potential "
      "singularities at two reentrant hole edges";
  ps.domain = two_hole_domain();
  PolarTerm t1{.x0 = 0, .y0 = 0, .gamma = 0.5, .a = 2, .wrap = false};
  PolarTerm t2{.x0 = 1, .y0 = 0, .gamma = 2.0 / 3.0, .a = 2, .wrap = false};
  ps.exact_u = [t1, t2](const Vec3& x) {
    return Vec3(potential_field(t1, x) + potential_field(t2, x));
  };
  ps.f = [](const Vec3&) { return 0.0; };
  ps.g = [t1, t2](const Vec3& x) {
    return Vec3(potential_curl(t1, x) + potential_curl(t2, x));
  };
  ps.singular_lines = {{0, 0}, {1, 0}};
  ps.rho1 = ps.rho2 = rho_geometric(p);
  return ps;
}

ProblemSpec make_ex4(double p, double gamma) {
  bool known = std::abs(gamma - 1.25) < 1e-12 || std::abs(gamma - 1.0) < 1e-12 ||
               std::abs(gamma - 2.0 / 3.0) < 1e-12;
  if (!known) throw std::invalid_argument("example 4: gamma must be 5/4, 1 or 2/3");
  ProblemSpec ps;
  ps.name = "ex4";
  ps.description =
      "slab with one through-hole, potential r^gamma sin(2 theta) about the "
      "reentrant hole edge; curl data as strong as r^{gamma-2}";
  ps.domain = one_hole_domain();
  PolarTerm t{.x0 = 0, .y0 = 0, .gamma = gamma, .a = 2, .wrap = false};
  ps.exact_u = [t](const Vec3& x) { return potential_field(t, x); };
  ps.f = [](const Vec3&) { return 0.0; };
  ps.g = [t](const Vec3& x) { return potential_curl(t, x); };
  ps.singular_lines = {{0, 0}};
  ps.rho1 = ps.rho2 = p <= 2 ? 1.0 : (p < 4 ? 3e3 : 3e4);
  return ps;
}

ProblemSpec make_ex5(double p) {
  ProblemSpec ps;
  ps.name = "ex5";
  ps.description =
      "two-hole slab; singular potential parts (gamma = 4/5, 2/3, a = 1) plus "
      "a smooth exponential component; exercises harmonic-field content";
  ps.domain = two_hole_domain();
  static constexpr double beta = 1.0 / 40.0;
  PolarTerm t1{.x0 = 0, .y0 = 0, .gamma = 0.8, .a = 1, .wrap = false};
  PolarTerm t2{.x0 = 1, .y0 = 0, .gamma = 2.0 / 3.0, .a = 1, .wrap = false};
  ps.exact_u = [t1, t2](const Vec3& x) {
    Vec3 smooth(std::exp(x.y()) * std::sin(x.z()), std::exp(x.x()) * std::sin(x.z()),
                x.z());
    return Vec3(potential_field(t1, x) + potential_field(t2, x) + beta * smooth);
  };
  ps.f = [](const Vec3&) { return beta; };
  ps.g = [t1, t2](const Vec3& x) {
    Vec3 smooth(-std::exp(x.x()) * std::cos(x.z()), std::exp(x.y()) * std::cos(x.z()),
                (std::exp(x.x()) - std::exp(x.y())) * std::sin(x.z()));
    return Vec3(potential_curl(t1, x) + potential_curl(t2, x) + beta * smooth);
  };
  ps.singular_lines = {{0, 0}, {1, 0}};
  ps.rho1 = ps.rho2 = p <= 2 ? 1.0 : 5e4;
  return ps;
}

ProblemSpec make_ex6(double p) {
  ProblemSpec ps;
  ps.name = "ex6";
  ps.description =
      "one-hole slab; r^{2/3} sin(theta) potential part plus a smooth "
      "trigonometric component; exercises harmonic-field content";
  ps.domain = one_hole_domain();
  static constexpr double beta = 1.0 / 8.0;
  PolarTerm t{.x0 = 0, .y0 = 0, .gamma = 2.0 / 3.0, .a = 1, .wrap = false};
  ps.exact_u = [t](const Vec3& x) {
    Vec3 smooth(std::sin(kPi * x.x()) * std::cos(kPi * x.y()) * std::sin(kPi * x.z()),
                std::cos(kPi * x.x()) * std::sin(kPi * x.y()) * std::sin(kPi * x.z()),
                0.0);
    return Vec3(potential_field(t, x) + beta * smooth);
  };
  ps.f = [](const Vec3& x) {
    return beta * 2 * kPi * std::cos(kPi * x.x()) * std::cos(kPi * x.y()) *
           std::sin(kPi * x.z());
  };
  ps.g = [t](const Vec3& x) {
    Vec3 smooth(-kPi * std::cos(kPi * x.x()) * std::sin(kPi * x.y()) * std::cos(kPi * x.z()),
                kPi * std::sin(kPi * x.x()) * std::cos(kPi * x.y()) * std::cos(kPi * x.z()),
                0.0);
    return Vec3(potential_curl(t, x) + beta * smooth);
  };
  ps.singular_lines = {{0, 0}};
  ps.rho1 = ps.rho2 = p <= 2 ? 1.0 : 5e4;
  return ps;
}

}  // namespace

ProblemSpec example(int id, double p, double gamma) {
  if (!(p > 1.0)) throw std::invalid_argument("example: need p > 1");
  ProblemSpec ps;
  switch (id) {
    case 1: ps = make_ex1(p); break;
    case 2: ps = make_ex2(p); break;
    case 3: ps = make_ex3(p); break;
    case 4: ps = make_ex4(p, gamma); break;
    case 5: ps = make_ex5(p); break;
    case 6: ps = make_ex6(p); break;
    default: throw std::invalid_argument("example: id must be 1..6");
  }
  ps.p = p;
  ps.rho3 = 1.0;
  attach_flux_bc(ps);
  return ps;
}

std::string describe_example(int id) {
  ProblemSpec ps = example(id, 2.0);
  std::string out = ps.name + ": " + ps.description + "\n";
  const auto& d = ps.domain;
  out += "  bounding box: " + std::to_string(d.extents[0] * d.unit) + " x " +
         std::to_string(d.extents[1] * d.unit) + " x " +
         std::to_string(d.extents[2] * d.unit) + " at origin (" +
         std::to_string(d.origin.x()) + ", " + std::to_string(d.origin.y()) + ", " +
         std::to_string(d.origin.z()) + "), " + std::to_string(d.holes.size()) +
         " hole box(es)\n";
  out += "  eps = diag(" + std::to_string(ps.eps.x()) + ", " + std::to_string(ps.eps.y()) +
         ", " + std::to_string(ps.eps.z()) + ")\n";
  out += "  singular vertical edges: " + std::to_string(ps.singular_lines.size()) + "\n";
  out += "  default rho1 = rho2 at p = 2,3,4: " + std::to_string(example(id, 2).rho1) +
         ", " + std::to_string(example(id, 3).rho1) + ", " +
         std::to_string(example(id, 4).rho1) + "; rho3 = 1\n";
  return out;
}

}  // namespace pdwg
