#pragma once

// Experiment driver: runs a (p, mesh-size) grid for one catalog problem and
// writes the reporting artifacts (per-p CSV rate tables, a combined Markdown
// file, a JSON run log, and per-grid-point VTK exports of the computed field
// and its deviation from the cell-mean projection).

#include <optional>
#include <string>
#include <vector>

#include "pdwg/analysis.hpp"
#include "pdwg/solver.hpp"

namespace pdwg {

struct ExperimentConfig {
  int example = 1;
  double gamma = 2.0 / 3.0;          // catalog entry 4 only
  std::vector<double> p_values = {2.0};
  std::vector<int> inv_h = {2, 4};   // coarse to fine, halving
  // Optional overrides of the per-problem defaults.
  std::optional<double> rho1, rho2, rho3, eps0, tol;
  int max_iters = 100;
  int quad_degree = 4;
  int singular_levels = 1;           // assembly-side refinement near singular edges
  int report_levels = 3;             // error-norm-side refinement
  std::string out_dir = ".";
  int threads = 1;
  bool write_fields = true;
};

// Parse + validate a JSON config ("p" and "inv_h" accept scalars or arrays).
// Throws std::invalid_argument with a descriptive message on bad input.
ExperimentConfig config_from_json(const std::string& json_text);

// Mesh refinement level realizing target 1/h for this domain's voxel size;
// throws when inv_h * unit is not a positive integer.
int refinement_level(const VoxelDomainSpec& domain, int inv_h);

struct GridPointLog {
  double p = 2;
  int inv_h = 0;
  int level = 0;
  int elements = 0;
  int dofs = 0;
  SolveParams params;
  int iterations = 0;
  bool converged = false;
  double residual = 0;
  std::vector<double> updates;
  double seconds = 0;
  StudyRow row;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::string file_stem;             // e.g. "ex4-g0.6667"
  std::vector<StudyTable> tables;    // one per p, rows ordered by inv_h
  std::vector<GridPointLog> log;
};

// Runs the grid (optionally in parallel over grid points) and writes all
// artifacts under config.out_dir.  Returns the in-memory results for tests.
ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace pdwg
