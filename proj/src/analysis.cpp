#include "pdwg/analysis.hpp"

#include <cmath>
#include <cstdio>

namespace pdwg {

double error_lq(const Mesh& mesh, const DofMap& dofs, const Eigen::VectorXd& x,
                const std::function<Vec3(const Vec3&)>& ref, const Vec3& eps, double q,
                const SimplexRule& rule, const std::vector<SingularLine>& lines,
                int levels) {
  const Vec3 w = eps.array().pow(1.0 / q).matrix();
  double total = 0;
  for (size_t e = 0; e < mesh.elements.size(); ++e) {
    const Vec3 uh(x[dofs.u(static_cast<int>(e), 0)], x[dofs.u(static_cast<int>(e), 1)],
                  x[dofs.u(static_cast<int>(e), 2)]);
    auto verts = mesh.element_vertices(static_cast<int>(e));
    const int lev = touches_any_line(verts, lines) ? levels : 0;
    total += integrate_refined(rule, verts, lev, [&](const Vec3& p) {
      return std::pow((w.asDiagonal() * Vec3(ref(p) - uh)).norm(), q);
    });
  }
  return std::pow(total, 1.0 / q);
}

std::vector<Vec3> projection_gap(const Mesh& mesh, const DofMap& dofs,
                                 const Eigen::VectorXd& x,
                                 const std::function<Vec3(const Vec3&)>& ref,
                                 const SimplexRule& rule,
                                 const std::vector<SingularLine>& lines, int levels) {
  std::vector<Vec3> gap(mesh.elements.size());
  for (size_t e = 0; e < mesh.elements.size(); ++e) {
    auto verts = mesh.element_vertices(static_cast<int>(e));
    const int lev = touches_any_line(verts, lines) ? levels : 0;
    Vec3 mean = cell_mean_vec(mesh, static_cast<int>(e), rule, ref, lev);
    gap[e] = mean - Vec3(x[dofs.u(static_cast<int>(e), 0)], x[dofs.u(static_cast<int>(e), 1)],
                         x[dofs.u(static_cast<int>(e), 2)]);
  }
  return gap;
}

double constant_field_lq(const Mesh& mesh, const std::vector<Vec3>& field,
                         const Vec3& eps, double q) {
  const Vec3 w = eps.array().pow(1.0 / q).matrix();
  double total = 0;
  for (size_t e = 0; e < mesh.elements.size(); ++e)
    total += mesh.elements[e].volume *
             std::pow((w.asDiagonal() * field[e]).norm(), q);
  return std::pow(total, 1.0 / q);
}

double s1_power(const Mesh& mesh, const DofMap& dofs, const Eigen::VectorXd& x,
                const SolveParams& par) {
  double total = 0;
  for (size_t e = 0; e < mesh.elements.size(); ++e) {
    const MeshElement& el = mesh.elements[e];
    const ElementFields F = extract_fields(mesh, dofs, x, static_cast<int>(e));
    const double hp = std::pow(el.diameter, 1.0 - par.p);
    for (int lf = 0; lf < 4; ++lf) {
      const double a = mesh.faces[el.face[lf]].area;
      const Vec3 n_out = mesh.outward_normal(static_cast<int>(e), lf);
      total += par.rho1 * hp * a * std::pow(std::abs(F.lam0 - F.lamb[lf]), par.p);
      total += par.rho2 * hp * a *
               std::pow((F.q0 - F.qb[lf]).cross(n_out).norm(), par.p);
    }
  }
  return total;
}

double s2_power(const Mesh& mesh, const DofMap& dofs, const Eigen::VectorXd& x,
                const SolveParams& par) {
  const double qq = par.q();
  double total = 0;
  for (size_t e = 0; e < mesh.elements.size(); ++e) {
    const MeshElement& el = mesh.elements[e];
    const ElementFields F = extract_fields(mesh, dofs, x, static_cast<int>(e));
    const double hq = std::pow(el.diameter, 1.0 - qq);
    for (int lf = 0; lf < 4; ++lf) {
      const double a = mesh.faces[el.face[lf]].area;
      total += par.rho3 * hq * a * std::pow(std::abs(F.s0 - F.sb[lf]), qq);
    }
  }
  return total;
}

double dual_norm(const Mesh& mesh, const DofMap& dofs, const Eigen::VectorXd& x,
                 const SolveParams& par) {
  return std::pow(s1_power(mesh, dofs, x, par), 1.0 / par.p);
}

double s_norm(const Mesh& mesh, const DofMap& dofs, const Eigen::VectorXd& x,
              const SolveParams& par) {
  return std::pow(s2_power(mesh, dofs, x, par), 1.0 / par.q());
}

double rate(double err_coarse, double err_fine) {
  return std::log2(err_coarse / err_fine);
}

namespace {
std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4e", v);
  return buf;
}
std::string fmt_rate(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}
}  // namespace

std::string to_csv(const StudyTable& t) {
  std::string out =
      "inv_h,iterations,err_u,rate_u,err_eta,rate_eta,dual_norm,rate_dual,s_norm,rate_s\n";
  for (size_t i = 0; i < t.rows.size(); ++i) {
    const StudyRow& r = t.rows[i];
    auto rt = [&](double cur, double prev) {
      return i == 0 ? std::string() : fmt_rate(rate(prev, cur));
    };
    const StudyRow& pr = t.rows[i == 0 ? 0 : i - 1];
    out += std::to_string(r.inv_h) + "," + std::to_string(r.iterations) + "," +
           fmt(r.err_u) + "," + rt(r.err_u, pr.err_u) + "," + fmt(r.err_eta) + "," +
           rt(r.err_eta, pr.err_eta) + "," + fmt(r.dual) + "," + rt(r.dual, pr.dual) +
           "," + fmt(r.s) + "," + rt(r.s, pr.s) + "\n";
  }
  return out;
}

std::string to_markdown(const StudyTable& t) {
  std::string out = "### " + t.label + " (p = " + fmt_rate(t.p) + ")\n\n";
  out +=
      "| 1/h | It. | err(u) | rate | err(eta) | rate | dual norm | rate | s norm | "
      "rate |\n|---|---|---|---|---|---|---|---|---|---|\n";
  for (size_t i = 0; i < t.rows.size(); ++i) {
    const StudyRow& r = t.rows[i];
    const StudyRow& pr = t.rows[i == 0 ? 0 : i - 1];
    auto rt = [&](double cur, double prev) {
      return i == 0 ? std::string("-") : fmt_rate(rate(prev, cur));
    };
    out += "| " + std::to_string(r.inv_h) + " | " + std::to_string(r.iterations) +
           " | " + fmt(r.err_u) + " | " + rt(r.err_u, pr.err_u) + " | " +
           fmt(r.err_eta) + " | " + rt(r.err_eta, pr.err_eta) + " | " + fmt(r.dual) +
           " | " + rt(r.dual, pr.dual) + " | " + fmt(r.s) + " | " + rt(r.s, pr.s) +
           " |\n";
  }
  return out;
}

}  // namespace pdwg
