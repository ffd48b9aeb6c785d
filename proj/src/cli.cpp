#include "wp/cli.hpp"

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wp/errors.hpp"
#include "wp/experiments.hpp"

namespace wp {

namespace {

int emit(const ExperimentReport& report, const std::string& out_path,
         bool echo_csv) {
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + out_path);
    write_csv(report, out);
    if (echo_csv) write_csv(report, std::cout);
  } else {
    write_csv(report, std::cout);
  }
  return report.exit_code;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"weighted Dirichlet extensions on the unit ball"};
  app.require_subcommand(1);
  // keep -h free: the residual command exposes the step size as --h
  app.set_help_flag("--help", "print help and exit");

  std::string out_path;
  bool echo_csv = false;
  app.add_option("--out", out_path, "write the report CSV to this file");
  app.add_flag("--csv", echo_csv,
               "echo the CSV to stdout even when --out is given");

  HeinzParams heinz;
  auto* cmd_heinz = app.add_subcommand(
      "heinz", "boundary difference quotients against the theoretical floor");
  cmd_heinz->add_option("--n", heinz.n, "ambient dimension");
  cmd_heinz->add_option("--alpha", heinz.alpha, "weight exponent");
  cmd_heinz->add_option("--phi", heinz.phi, "boundary datum name");
  cmd_heinz->add_option("--ladder", heinz.ladder, "radius ladder");
  cmd_heinz->add_option("--zetas", heinz.zeta_count, "boundary sample count");
  cmd_heinz->add_option("--seed", heinz.seed, "stream seed");
  cmd_heinz->add_option("--nodes", heinz.base_nodes, "node budget");

  int kalaj_n = 2;
  auto* cmd_kalaj = app.add_subcommand(
      "kalaj", "closed-form constant of the planar quotient bound");
  cmd_kalaj->add_option("--n", kalaj_n, "ambient dimension");

  HardyLittlewoodParams hl;
  auto* cmd_hl = app.add_subcommand(
      "hl", "boundary-to-interior seminorm transfer ladder");
  cmd_hl->add_option("--n", hl.n, "ambient dimension");
  cmd_hl->add_option("--alpha", hl.alpha, "weight exponent");
  cmd_hl->add_option("--beta", hl.beta, "Hoelder exponent");
  cmd_hl->add_option("--phi", hl.phi, "boundary datum name");
  cmd_hl->add_option("--pairs", hl.pairs, "sample pairs per seminorm");
  cmd_hl->add_option("--ladder", hl.ladder, "radius ladder");
  cmd_hl->add_option("--seed", hl.seed, "stream seed");
  cmd_hl->add_option("--nodes", hl.base_nodes, "node budget");

  GradientBoundParams gb;
  auto* cmd_gb = app.add_subcommand(
      "gradbound", "scaled gradient sup along a radius ladder");
  cmd_gb->add_option("--n", gb.n, "ambient dimension");
  cmd_gb->add_option("--alpha", gb.alpha, "weight exponent");
  cmd_gb->add_option("--beta", gb.beta, "modulus exponent");
  cmd_gb->add_option("--phi", gb.phi, "boundary datum name");
  cmd_gb->add_option("--directions", gb.directions, "direction count");
  cmd_gb->add_option("--ladder", gb.ladder, "radius ladder");
  cmd_gb->add_option("--seed", gb.seed, "stream seed");
  cmd_gb->add_option("--nodes", gb.base_nodes, "node budget");

  ResidualParams rs;
  auto* cmd_rs = app.add_subcommand(
      "residual", "weighted-operator residual under joint refinement");
  cmd_rs->set_help_flag("--help", "print help and exit");
  cmd_rs->add_option("--n", rs.n, "ambient dimension");
  cmd_rs->add_option("--alpha", rs.alpha, "weight exponent");
  cmd_rs->add_option("--phi", rs.phi, "boundary datum name");
  cmd_rs->add_option("--grid-radius", rs.grid_radius, "sampling radius cap");
  cmd_rs->add_option("--grid-count", rs.grid_count, "sample point count");
  cmd_rs->add_option("--h", rs.h, "initial finite-difference step");
  cmd_rs->add_option("--refinements", rs.refinements, "halving steps");
  cmd_rs->add_option("--seed", rs.seed, "stream seed");
  cmd_rs->add_option("--nodes", rs.base_nodes, "node budget");

  bool perturb = false;
  auto* cmd_self = app.add_subcommand(
      "selftest", "cross-module invariant sweep");
  cmd_self->add_flag("--perturb", perturb,
                     "skew the kernel constant to prove a check can fail");

  for (CLI::App* sub :
       {cmd_heinz, cmd_kalaj, cmd_hl, cmd_gb, cmd_rs, cmd_self})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ExperimentReport report;
    if (cmd_heinz->parsed())
      report = run_heinz(heinz);
    else if (cmd_kalaj->parsed())
      report = run_kalaj(kalaj_n);
    else if (cmd_hl->parsed())
      report = run_hardy_littlewood(hl);
    else if (cmd_gb->parsed())
      report = run_gradient_bound(gb);
    else if (cmd_rs->parsed())
      report = run_residual(rs);
    else
      report = run_selftest(perturb);
    return emit(report, out_path, echo_csv);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const PoleError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const NonConvergenceError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const AccuracyError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const DivergenceError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace wp
