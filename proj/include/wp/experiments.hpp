#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "wp/poisson_solver.hpp"

namespace wp {

// Tabular result of one experiment command.  Cells are preformatted so a
// report serializes the same way everywhere; metadata rides along as
// comment lines.  exit_code is 0 for a PASS verdict, 1 otherwise.
struct ExperimentReport {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> metadata;
  int exit_code = 0;
};

// Shortest round-trip decimal form (17 significant digits).
std::string format_real(double v);

// Comment-prefixed metadata, then a header row, then data rows; LF line
// endings.  The timestamp metadata line is the only part allowed to differ
// between identical runs.
void write_csv(const ExperimentReport& report, std::ostream& out);
std::string csv_string(const ExperimentReport& report);

// Named catalog of boundary data: "one", "cos" (first coordinate),
// "identity", "twisted" (perturbed angle, n = 2), "rotated" (rotated
// identity, n = 3), "holder" (chord power, exponent beta).
BoundaryFunction named_boundary(const std::string& name, int n,
                                double beta = 0.5);

// Heinz-type boundary difference quotients against the theoretical floor:
// alpha/2 + 1 - n/2 beyond the critical index, the Kalaj constant at
// alpha = 0.
struct HeinzParams {
  int n = 2;
  double alpha = 1.0;
  std::string phi = "identity";
  std::vector<double> ladder = {0.9, 0.99, 0.999};
  int zeta_count = 16;
  std::uint64_t seed = 1;
  int base_nodes = 0;
};
ExperimentReport run_heinz(const HeinzParams& params);

// Closed-form constant of the planar Heinz bound and its n-dimensional
// generalization.
double kalaj_constant(int n);
ExperimentReport run_kalaj(int n);

// Lipschitz-transfer ladder: boundary seminorm of a Hoelder datum vs
// interior seminorm of its extension as r_max approaches 1.
struct HardyLittlewoodParams {
  int n = 2;
  double alpha = 1.0;
  double beta = 0.5;
  std::string phi = "holder";
  long pairs = 2000;
  std::vector<double> ladder = {0.9, 0.99, 0.999};
  std::uint64_t seed = 1;
  int base_nodes = 0;
};
ExperimentReport run_hardy_littlewood(const HardyLittlewoodParams& params);

// Scaled gradient ladder: max over directions of |grad| (1-r)/w(1-r).
struct GradientBoundParams {
  int n = 2;
  double alpha = 1.0;
  double beta = 0.5;
  std::string phi = "holder";
  int directions = 32;
  std::vector<double> ladder = {0.9, 0.99, 0.999};
  std::uint64_t seed = 1;
  int base_nodes = 0;
};
ExperimentReport run_gradient_bound(const GradientBoundParams& params);

// Weighted-operator residual of the solved extension under joint step
// halving and node doubling.
struct ResidualParams {
  int n = 2;
  double alpha = 1.0;
  std::string phi = "cos";
  double grid_radius = 0.8;
  int grid_count = 25;
  double h = 1e-3;
  int refinements = 4;
  int base_nodes = 0;
  std::uint64_t seed = 1;
};
ExperimentReport run_residual(const ResidualParams& params);

// Cross-module invariant sweep; one PASS/FAIL row per check.  The perturb
// flag skews the kernel constant inside the normalization check to prove
// the check can fail.
ExperimentReport run_selftest(bool perturb_c_alpha = false);

}  // namespace wp
