#include "pdwg/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "pdwg/vtk.hpp"

namespace pdwg {

using nlohmann::json;

namespace {

std::vector<double> as_double_list(const json& j, const char* what) {
  std::vector<double> out;
  if (j.is_number())
    out.push_back(j.get<double>());
  else if (j.is_array())
    for (const auto& v : j) out.push_back(v.get<double>());
  else
    throw std::invalid_argument(std::string("config: ") + what +
                                " must be a number or an array");
  if (out.empty())
    throw std::invalid_argument(std::string("config: ") + what + " is empty");
  return out;
}

std::string compact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

ExperimentConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: not valid JSON: ") + e.what());
  }
  ExperimentConfig c;
  c.example = j.value("example", 1);
  if (c.example < 1 || c.example > 6)
    throw std::invalid_argument("config: example must be 1..6");
  c.gamma = j.value("gamma", 2.0 / 3.0);
  if (j.contains("p")) c.p_values = as_double_list(j["p"], "p");
  for (double p : c.p_values)
    if (!(p > 1)) throw std::invalid_argument("config: p must be > 1");
  if (j.contains("inv_h")) {
    c.inv_h.clear();
    for (double v : as_double_list(j["inv_h"], "inv_h")) {
      int n = static_cast<int>(std::lround(v));
      if (n < 1 || std::abs(v - n) > 1e-9)
        throw std::invalid_argument("config: inv_h entries must be positive integers");
      c.inv_h.push_back(n);
    }
  }
  auto opt = [&](const char* key, std::optional<double>& dst) {
    if (j.contains(key)) dst = j[key].get<double>();
  };
  opt("rho1", c.rho1);
  opt("rho2", c.rho2);
  opt("rho3", c.rho3);
  opt("eps0", c.eps0);
  opt("tol", c.tol);
  c.max_iters = j.value("max_iters", c.max_iters);
  c.quad_degree = j.value("quad_degree", c.quad_degree);
  c.singular_levels = j.value("singular_levels", c.singular_levels);
  c.report_levels = j.value("report_levels", c.report_levels);
  c.out_dir = j.value("out_dir", c.out_dir);
  c.threads = j.value("threads", c.threads);
  c.write_fields = j.value("write_fields", c.write_fields);
  if (c.threads < 1) throw std::invalid_argument("config: threads must be >= 1");
  if (c.quad_degree < 1) throw std::invalid_argument("config: quad_degree must be >= 1");
  return c;
}

int refinement_level(const VoxelDomainSpec& domain, int inv_h) {
  const double lv = inv_h * domain.unit;
  const int l = static_cast<int>(std::lround(lv));
  if (l < 1 || std::abs(lv - l) > 1e-9)
    throw std::invalid_argument(
        "inv_h " + std::to_string(inv_h) + " does not tile voxels of edge " +
        std::to_string(domain.unit) + " into an integer number of cubes");
  return l;
}

namespace {

GridPointLog run_grid_point(const ExperimentConfig& cfg, double p, int inv_h,
                            const std::string& stem) {
  const ProblemSpec problem = example(cfg.example, p, cfg.gamma);
  SolveParams par = SolveParams::from(problem);
  if (cfg.rho1) par.rho1 = *cfg.rho1;
  if (cfg.rho2) par.rho2 = *cfg.rho2;
  if (cfg.rho3) par.rho3 = *cfg.rho3;
  if (cfg.eps0) par.eps0 = *cfg.eps0;
  if (cfg.tol) par.tol = *cfg.tol;
  par.max_iters = cfg.max_iters;
  par.quad_degree = cfg.quad_degree;
  par.singular_levels = cfg.singular_levels;

  GridPointLog gp;
  gp.p = p;
  gp.inv_h = inv_h;
  gp.level = refinement_level(problem.domain, inv_h);
  gp.params = par;

  const auto t0 = std::chrono::steady_clock::now();
  const Mesh mesh = build_mesh(problem.domain, gp.level);
  const SolveReport rep = run_solver(problem, mesh, par);
  gp.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  gp.elements = static_cast<int>(mesh.elements.size());
  gp.dofs = rep.dofs.total;
  gp.iterations = rep.iterations;
  gp.converged = rep.converged;
  gp.residual = rep.residual;
  gp.updates = rep.updates;

  const SimplexRule rule = tetrahedron_rule(par.quad_degree);
  gp.row.inv_h = inv_h;
  gp.row.iterations = rep.iterations;
  gp.row.err_u = error_lq(mesh, rep.dofs, rep.x, problem.exact_u, problem.eps, par.q(),
                          rule, problem.singular_lines, cfg.report_levels);
  const std::vector<Vec3> eta = projection_gap(mesh, rep.dofs, rep.x, problem.exact_u,
                                               rule, problem.singular_lines,
                                               cfg.report_levels);
  gp.row.err_eta = constant_field_lq(mesh, eta, problem.eps, par.q());
  gp.row.dual = dual_norm(mesh, rep.dofs, rep.x, par);
  gp.row.s = s_norm(mesh, rep.dofs, rep.x, par);

  if (cfg.write_fields) {
    std::vector<Vec3> uh(mesh.elements.size());
    for (size_t e = 0; e < uh.size(); ++e)
      uh[e] = Vec3(rep.x[rep.dofs.u(static_cast<int>(e), 0)],
                   rep.x[rep.dofs.u(static_cast<int>(e), 1)],
                   rep.x[rep.dofs.u(static_cast<int>(e), 2)]);
    const std::string path = cfg.out_dir + "/" + stem + "_p" + compact(p) + "_ih" +
                             std::to_string(inv_h) + ".vtk";
    write_vtk(path, mesh, {{"u_h", uh}, {"eta", eta}});
  }
  return gp;
}

json params_to_json(const SolveParams& par) {
  return {{"p", par.p},       {"rho1", par.rho1},
          {"rho2", par.rho2}, {"rho3", par.rho3},
          {"eps0", par.eps0}, {"tol", par.tol},
          {"max_iters", par.max_iters}, {"quad_degree", par.quad_degree},
          {"singular_levels", par.singular_levels}};
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  ExperimentResult res;
  res.config = cfg;
  res.file_stem = "ex" + std::to_string(cfg.example) +
                  (cfg.example == 4 ? "-g" + compact(cfg.gamma) : "");
  std::filesystem::create_directories(cfg.out_dir);

  struct Task {
    double p;
    int inv_h;
  };
  std::vector<Task> tasks;
  for (double p : cfg.p_values)
    for (int ih : cfg.inv_h) tasks.push_back({p, ih});
  for (const Task& t : tasks)  // validate sizes before any heavy work
    refinement_level(example(cfg.example, t.p, cfg.gamma).domain, t.inv_h);

  std::vector<GridPointLog> logs(tasks.size());
  std::mutex next_mutex;
  size_t next = 0;
  auto worker = [&]() {
    for (;;) {
      size_t mine;
      {
        std::lock_guard<std::mutex> lk(next_mutex);
        if (next >= tasks.size()) return;
        mine = next++;
      }
      logs[mine] = run_grid_point(cfg, tasks[mine].p, tasks[mine].inv_h, res.file_stem);
    }
  };
  const int nthreads = std::max(1, std::min<int>(cfg.threads, tasks.size()));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  res.log = std::move(logs);

  for (double p : cfg.p_values) {
    StudyTable table;
    table.label = res.file_stem;
    table.p = p;
    for (const GridPointLog& gp : res.log)
      if (gp.p == p) table.rows.push_back(gp.row);
    res.tables.push_back(std::move(table));
  }

  // Artifacts: one CSV per p, one Markdown with all tables, one JSON log.
  std::string md;
  for (const StudyTable& t : res.tables) {
    std::ofstream(cfg.out_dir + "/" + res.file_stem + "_p" + compact(t.p) + ".csv")
        << to_csv(t);
    md += to_markdown(t) + "\n";
  }
  std::ofstream(cfg.out_dir + "/" + res.file_stem + ".md") << md;

  json jlog;
  jlog["example"] = cfg.example;
  jlog["file_stem"] = res.file_stem;
  jlog["gamma"] = cfg.gamma;
  jlog["out_dir"] = cfg.out_dir;
  jlog["grid"] = json::array();
  for (const GridPointLog& gp : res.log) {
    json row = {{"p", gp.p},
                {"inv_h", gp.inv_h},
                {"level", gp.level},
                {"elements", gp.elements},
                {"dofs", gp.dofs},
                {"iterations", gp.iterations},
                {"converged", gp.converged},
                {"residual", gp.residual},
                {"updates", gp.updates},
                {"seconds", gp.seconds},
                {"params", params_to_json(gp.params)},
                {"err_u", gp.row.err_u},
                {"err_eta", gp.row.err_eta},
                {"dual_norm", gp.row.dual},
                {"s_norm", gp.row.s}};
    jlog["grid"].push_back(row);
  }
  std::ofstream(cfg.out_dir + "/" + res.file_stem + "_log.json") << jlog.dump(2) << "\n";
  return res;
}

}  // namespace pdwg
