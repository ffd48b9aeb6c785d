#include "wp/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <limits>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>

#include <Eigen/Geometry>

#include "wp/delta_alpha.hpp"
#include "wp/errors.hpp"
#include "wp/majorant.hpp"
#include "wp/special_functions.hpp"
#include "wp/sphere_quadrature.hpp"

#ifndef WP_BUILD_ID
#define WP_BUILD_ID "dev"
#endif

namespace wp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string timestamp_utc() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string format_int(long v) { return std::to_string(v); }

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Eigen::VectorXd sphere_draw(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v(n);
  double norm = 0.0;
  do {
    for (int i = 0; i < n; ++i) v[i] = gauss(rng);
    norm = v.norm();
  } while (norm < 1e-12);
  return v / norm;
}

// Accelerated limit of the last three ladder values; falls back to the
// last value when the acceleration is degenerate or leaves the bracket.
double aitken_limit(const std::vector<double>& q) {
  if (q.empty()) throw DomainError("aitken_limit: empty ladder");
  if (q.size() < 3) return q.back();
  const double q1 = q[q.size() - 3], q2 = q[q.size() - 2], q3 = q.back();
  const double d1 = q2 - q1, d2 = q3 - q2;
  const double den = d2 - d1;
  if (std::abs(den) < 1e-14 * (1.0 + std::abs(q3))) return q3;
  const double extra = q3 - d2 * d2 / den;
  if (!std::isfinite(extra)) return q3;
  const double lo = std::min({q1, q2, q3});
  const double hi = std::max({q1, q2, q3});
  const double span = hi - lo;
  if (extra < lo - 5.0 * span || extra > hi + 5.0 * span) return q3;
  return extra;
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const auto k = v.size();
  if (k == 0) throw DomainError("median_of: empty sample");
  return k % 2 == 1 ? v[k / 2] : 0.5 * (v[k / 2 - 1] + v[k / 2]);
}

int default_budget(int n) {
  if (n == 2) return 64;
  if (n <= 4) return 4096;
  return 20000;
}

const char* growth_name(NodeGrowth g) {
  return g == NodeGrowth::InverseGap ? "inverse-gap" : "fixed";
}

void push_common_metadata(ExperimentReport& report, const SolverConfig& cfg) {
  report.metadata.emplace_back("command", report.command);
  report.metadata.emplace_back("n", format_int(cfg.dim));
  report.metadata.emplace_back("alpha", format_real(cfg.alpha));
  report.metadata.emplace_back("seed", format_int(static_cast<long>(cfg.seed)));
  report.metadata.emplace_back(
      "base_nodes",
      format_int(cfg.base_nodes > 0 ? cfg.base_nodes : default_budget(cfg.dim)));
  report.metadata.emplace_back("node_growth", growth_name(cfg.node_growth));
  report.metadata.emplace_back("build", WP_BUILD_ID);
}

void seal_report(ExperimentReport& report, bool pass) {
  report.metadata.emplace_back("verdict", pass ? "PASS" : "FAIL");
  report.metadata.emplace_back("timestamp", timestamp_utc());
  report.exit_code = pass ? 0 : 1;
}

std::vector<double> checked_ladder(const std::vector<double>& ladder) {
  if (ladder.empty()) throw ConfigError("radius ladder must be non-empty");
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (!(ladder[i] > 0.0 && ladder[i] < 1.0))
      throw ConfigError("ladder radii must lie in (0, 1)");
    if (i > 0 && ladder[i] <= ladder[i - 1])
      throw ConfigError("ladder radii must increase");
  }
  return ladder;
}

// Floor branch shared by the quotient experiments: the linear-in-alpha
// slope past the critical index, the closed-form constant at alpha = 0.
double heinz_floor(int n, double alpha) {
  if (alpha == 0.0) return kalaj_constant(n);
  if (alpha > n - 2.0) return alpha / 2.0 + 1.0 - n / 2.0;
  throw ConfigError(
      "quotient floor requires alpha = 0 or alpha > n-2; got alpha = " +
      format_real(alpha) + " at n = " + format_int(n));
}

double clamped_cap_epsilon(double r_top) {
  return std::min(0.45, std::max(1e-6, 1.0 - r_top));
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const ExperimentReport& report, std::ostream& out) {
  for (const auto& [key, value] : report.metadata)
    out << "# " << key << ": " << value << "\n";
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    if (i > 0) out << ',';
    out << report.columns[i];
  }
  out << "\n";
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << row[i];
    }
    out << "\n";
  }
}

std::string csv_string(const ExperimentReport& report) {
  std::ostringstream out;
  write_csv(report, out);
  return out.str();
}

BoundaryFunction named_boundary(const std::string& name, int n, double beta) {
  if (n < 2) throw ConfigError("boundary data need n >= 2");
  if (name == "one") {
    return scalar_boundary(n, [](const UnitVector&) { return 1.0; });
  }
  if (name == "cos") {
    return scalar_boundary(n, [](const UnitVector& z) { return z[0]; });
  }
  if (name == "identity") {
    BoundaryFunction phi;
    phi.dim = n;
    phi.target_dim = n;
    phi.unit_norm = true;
    phi.eval = [](const UnitVector& z) { return z; };
    return phi;
  }
  if (name == "twisted") {
    if (n != 2) throw ConfigError("twisted datum is planar (n = 2)");
    BoundaryFunction phi;
    phi.dim = 2;
    phi.target_dim = 2;
    phi.unit_norm = true;
    phi.eval = [](const UnitVector& z) {
      const double theta = std::atan2(z[1], z[0]);
      const double psi = theta + 0.5 * std::sin(theta);
      Eigen::VectorXd out(2);
      out << std::cos(psi), std::sin(psi);
      return out;
    };
    return phi;
  }
  if (name == "rotated") {
    if (n != 3) throw ConfigError("rotated datum needs n = 3");
    Eigen::Matrix3d rot =
        (Eigen::AngleAxisd(0.6, Eigen::Vector3d::UnitZ()) *
         Eigen::AngleAxisd(0.35, Eigen::Vector3d::UnitX()))
            .toRotationMatrix();
    BoundaryFunction phi;
    phi.dim = 3;
    phi.target_dim = 3;
    phi.unit_norm = true;
    phi.eval = [rot](const UnitVector& z) -> Eigen::VectorXd { return rot * z; };
    return phi;
  }
  if (name == "holder") {
    if (!(beta > 0.0 && beta <= 1.0))
      throw ConfigError("holder datum exponent must lie in (0, 1]");
    const double scale = std::pow(2.0, -beta);
    return scalar_boundary(n, [n, beta, scale](const UnitVector& z) {
      Eigen::VectorXd pole = Eigen::VectorXd::Zero(n);
      pole[0] = 1.0;
      return scale * std::pow((z - pole).norm(), beta);
    });
  }
  throw ConfigError("unknown boundary datum: " + name);
}

double kalaj_constant(int n) {
  if (n < 2) throw DomainError("kalaj_constant needs n >= 2");
  const double f = hyp2f1(0.5, 1.0, (n + 3) / 2.0, -1.0);
  const double num = gamma(n + 1.0) * (1.0 + n - (n - 2.0) * f);
  const double den = std::pow(2.0, 1.5 * n) * gamma((n + 1) / 2.0) *
                     gamma((n + 3) / 2.0);
  return num / den;
}

ExperimentReport run_kalaj(int n) {
  ExperimentReport report;
  report.command = "kalaj";
  const double value = kalaj_constant(n);
  SolverConfig cfg;
  cfg.dim = n;
  cfg.alpha = 0.0;
  push_common_metadata(report, cfg);
  report.columns = {"n", "value"};
  report.rows.push_back({format_int(n), format_real(value)});
  seal_report(report, true);
  return report;
}

ExperimentReport run_heinz(const HeinzParams& params) {
  if (params.zeta_count < 1) throw ConfigError("heinz needs zeta_count >= 1");
  const auto ladder = checked_ladder(params.ladder);
  const double floor = heinz_floor(params.n, params.alpha);
  BoundaryFunction phi = named_boundary(params.phi, params.n);
  if (phi.target_dim != params.n)
    throw ConfigError("heinz datum must map the sphere into the same space");

  SolverConfig cfg;
  cfg.dim = params.n;
  cfg.alpha = params.alpha;
  cfg.base_nodes = params.base_nodes;
  cfg.seed = params.seed;
  cfg.boundary_cap_epsilon = clamped_cap_epsilon(ladder.back());
  DirichletSolution u = solve(phi, cfg);

  ExperimentReport report;
  report.command = "heinz";
  push_common_metadata(report, cfg);
  report.metadata.emplace_back("phi", params.phi);
  report.metadata.emplace_back("zeta_count", format_int(params.zeta_count));
  report.metadata.emplace_back("floor", format_real(floor));

  const double f0 = u(Eigen::VectorXd::Zero(params.n)).norm();
  report.metadata.emplace_back("f0_norm", format_real(f0));
  if (params.alpha == 0.0)
    report.metadata.emplace_back("f0_hypothesis",
                                 f0 <= 1e-8 ? "satisfied" : "violated");

  report.columns = {"zeta_index", "r",     "quotient",
                    "extrapolated", "floor", "margin"};
  std::mt19937_64 rng(mix_seed(params.seed, 7));
  double min_margin = kInf;
  for (int i = 0; i < params.zeta_count; ++i) {
    const Eigen::VectorXd zeta = sphere_draw(params.n, rng);
    const Eigen::VectorXd target = phi.eval(zeta);
    std::vector<double> quotients;
    quotients.reserve(ladder.size());
    for (double r : ladder)
      quotients.push_back((target - u(r * zeta)).norm() / (1.0 - r));
    const double extrapolated = aitken_limit(quotients);
    const double margin = extrapolated - floor;
    min_margin = std::min(min_margin, margin);
    for (std::size_t j = 0; j < ladder.size(); ++j)
      report.rows.push_back({format_int(i), format_real(ladder[j]),
                             format_real(quotients[j]),
                             format_real(extrapolated), format_real(floor),
                             format_real(margin)});
  }
  report.metadata.emplace_back("min_margin", format_real(min_margin));
  seal_report(report, min_margin >= -0.02);
  return report;
}

ExperimentReport run_hardy_littlewood(const HardyLittlewoodParams& params) {
  if (!(params.beta > 0.0 && params.beta < 1.0))
    throw ConfigError("Hoelder exponent must lie in (0, 1)");
  heinz_floor(params.n, params.alpha);  // same admissible alpha branch
  const auto ladder = checked_ladder(params.ladder);
  const Majorant w = Majorant::power(params.beta);
  BoundaryFunction phi = named_boundary(params.phi, params.n, params.beta);

  SolverConfig base_cfg;
  base_cfg.dim = params.n;
  base_cfg.alpha = params.alpha;
  base_cfg.base_nodes = params.base_nodes;
  base_cfg.seed = params.seed;

  ExperimentReport report;
  report.command = "hl";
  push_common_metadata(report, base_cfg);
  report.metadata.emplace_back("phi", params.phi);
  report.metadata.emplace_back("beta", format_real(params.beta));
  report.metadata.emplace_back("pairs", format_int(params.pairs));

  const SeminormEstimate bsem = boundary_seminorm(phi, w, params.pairs,
                                                  params.seed);
  report.metadata.emplace_back("boundary_seminorm", format_real(bsem.value));

  report.columns = {"r_max", "boundary_seminorm", "interior_seminorm",
                    "ratio"};
  std::vector<double> ratios;
  for (double r : ladder) {
    SolverConfig cfg = base_cfg;
    cfg.boundary_cap_epsilon = clamped_cap_epsilon(r);
    auto sol = std::make_shared<DirichletSolution>(solve(phi, cfg));
    FieldMap um = [sol](const BallPoint& x) { return (*sol)(x); };
    const SeminormEstimate isem =
        interior_seminorm(um, params.n, w, r, params.pairs, params.seed);
    double ratio;
    if (bsem.value < 1e-15)
      ratio = isem.value < 1e-9 ? 0.0 : kInf;
    else
      ratio = isem.value / bsem.value;
    ratios.push_back(ratio);
    report.rows.push_back({format_real(r), format_real(bsem.value),
                           format_real(isem.value), format_real(ratio)});
  }
  const double median = median_of(ratios);
  const double final_ratio = ratios.back();
  report.metadata.emplace_back("median_ratio", format_real(median));
  report.metadata.emplace_back("final_ratio", format_real(final_ratio));
  seal_report(report, final_ratio <= 2.0 * median);
  return report;
}

ExperimentReport run_gradient_bound(const GradientBoundParams& params) {
  if (!(params.beta > 0.0 && params.beta <= 1.0))
    throw ConfigError("gradient bound exponent must lie in (0, 1]");
  if (params.directions < 1)
    throw ConfigError("gradbound needs directions >= 1");
  heinz_floor(params.n, params.alpha);  // same admissible alpha branch
  const auto ladder = checked_ladder(params.ladder);
  BoundaryFunction phi = named_boundary(params.phi, params.n, params.beta);

  SolverConfig base_cfg;
  base_cfg.dim = params.n;
  base_cfg.alpha = params.alpha;
  base_cfg.base_nodes = params.base_nodes;
  base_cfg.seed = params.seed;

  ExperimentReport report;
  report.command = "gradbound";
  push_common_metadata(report, base_cfg);
  report.metadata.emplace_back("phi", params.phi);
  report.metadata.emplace_back("beta", format_real(params.beta));
  report.metadata.emplace_back("directions", format_int(params.directions));

  std::mt19937_64 rng(mix_seed(params.seed, 13));
  std::vector<Eigen::VectorXd> directions;
  directions.reserve(params.directions);
  for (int i = 0; i < params.directions; ++i)
    directions.push_back(sphere_draw(params.n, rng));

  report.columns = {"r", "scaled_sup"};
  std::vector<double> sups;
  for (double r : ladder) {
    SolverConfig cfg = base_cfg;
    cfg.boundary_cap_epsilon = clamped_cap_epsilon(r);
    const double gap = 1.0 - r;
    const double scale = gap / eval_majorant(Majorant::power(params.beta), gap);
    double sup = 0.0;
    for (const auto& xi : directions) {
      const Eigen::MatrixXd jac = gradient(phi, cfg, r * xi);
      sup = std::max(sup, jac.norm() * scale);
    }
    sups.push_back(sup);
    report.rows.push_back({format_real(r), format_real(sup)});
  }
  const double median = median_of(sups);
  const double final_sup = sups.back();
  report.metadata.emplace_back("median_scaled_sup", format_real(median));
  report.metadata.emplace_back("final_scaled_sup", format_real(final_sup));
  seal_report(report, final_sup <= 2.0 * median);
  return report;
}

ExperimentReport run_residual(const ResidualParams& params) {
  if (!(params.grid_radius > 0.0 && params.grid_radius <= 0.9))
    throw ConfigError("grid_radius must lie in (0, 0.9]");
  if (params.grid_count < 1) throw ConfigError("grid_count must be >= 1");
  if (!(params.h >= 1e-5 && params.h <= 1e-2))
    throw ConfigError("initial step must lie in [1e-5, 1e-2]");
  if (params.refinements < 0)
    throw ConfigError("refinements must be >= 0");
  BoundaryFunction phi = named_boundary(params.phi, params.n);

  SolverConfig base_cfg;
  base_cfg.dim = params.n;
  base_cfg.alpha = params.alpha;
  base_cfg.base_nodes =
      params.base_nodes > 0 ? params.base_nodes : default_budget(params.n);
  base_cfg.seed = params.seed;

  ExperimentReport report;
  report.command = "residual";
  push_common_metadata(report, base_cfg);
  report.metadata.emplace_back("phi", params.phi);
  report.metadata.emplace_back("grid_radius", format_real(params.grid_radius));
  report.metadata.emplace_back("grid_count", format_int(params.grid_count));

  report.columns = {"step", "h", "nodes", "residual", "ratio"};
  std::vector<double> residuals;
  for (int k = 0; k <= params.refinements; ++k) {
    const double h = params.h / std::pow(2.0, k);
    if (h < 1e-5) break;
    SolverConfig cfg = base_cfg;
    cfg.fd_step = h;
    cfg.base_nodes = base_cfg.base_nodes << k;
    const double res =
        residual_sup(phi, cfg, params.grid_radius, params.grid_count);
    const double ratio =
        residuals.empty() ? std::numeric_limits<double>::quiet_NaN()
                          : res / residuals.back();
    residuals.push_back(res);
    report.rows.push_back({format_int(k), format_real(h),
                           format_int(cfg.base_nodes), format_real(res),
                           format_real(ratio)});
    if (res <= 1e-6) break;  // measurement floor reached
  }
  bool pass = true;
  for (std::size_t k = 1; k < residuals.size(); ++k)
    if (!(residuals[k] <= 0.5 * residuals[k - 1] || residuals[k] <= 1e-6))
      pass = false;
  report.metadata.emplace_back("final_residual",
                               format_real(residuals.back()));
  seal_report(report, pass);
  return report;
}

namespace {

struct SelftestSink {
  ExperimentReport* report;
  bool all_pass = true;

  void row(const char* module, const char* check, bool pass, double observed,
           double bound) {
    all_pass = all_pass && pass;
    report->rows.push_back({module, check, pass ? "PASS" : "FAIL",
                            format_real(observed), format_real(bound)});
  }
};

double gauss_value_oracle(double a, double b, double c) {
  return std::exp(std::lgamma(c) + std::lgamma(c - a - b) - std::lgamma(c - a) -
                  std::lgamma(c - b));
}

}  // namespace

ExperimentReport run_selftest(bool perturb_c_alpha) {
  ExperimentReport report;
  report.command = "selftest";
  report.columns = {"module", "check", "status", "observed", "bound"};
  report.metadata.emplace_back("command", report.command);
  report.metadata.emplace_back("perturbed", perturb_c_alpha ? "yes" : "no");
  report.metadata.emplace_back("build", WP_BUILD_ID);
  SelftestSink sink{&report};

  {
    const double err = std::abs(gamma(0.5) - std::sqrt(M_PI)) +
                       std::abs(gamma(5.0) - 24.0) / 24.0;
    sink.row("special_functions", "gamma reference values", err <= 1e-13, err,
             1e-13);
  }
  {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> uni(0.1, 2.0);
    std::uniform_real_distribution<double> gap(0.1, 5.0);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const double a = uni(rng), b = uni(rng), c = a + b + gap(rng);
      const double want = gauss_value_oracle(a, b, c);
      worst = std::max(worst, std::abs(hyp2f1(a, b, c, 1.0) - want) /
                                  std::abs(want));
    }
    sink.row("special_functions", "terminal value matches gamma ratio",
             worst <= 1e-12, worst, 1e-12);
  }
  {
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const double lhs = pochhammer(1.7, k + 1);
      const double rhs = pochhammer(1.7, k) * (1.7 + k);
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
    sink.row("special_functions", "rising factorial recurrence",
             worst <= 1e-12, worst, 1e-12);
  }
  {
    double worst = 0.0;
    bool positive = true;
    for (const QuadratureRule& rule :
         {circle_rule(128), product_rule(3, 32), product_rule(4, 16),
          monte_carlo_rule(5, 5000, 1)}) {
      worst = std::max(worst, std::abs(rule.weights.sum() - 1.0));
      positive = positive && rule.weights.minCoeff() > 0.0;
    }
    sink.row("sphere_quadrature", "weights sum to one", worst <= 1e-12,
             worst, 1e-12);
    sink.row("sphere_quadrature", "weights stay positive", positive,
             positive ? 1.0 : 0.0, 1.0);
  }
  {
    const QuadratureRule rule = product_rule(3, 64);
    const double moment =
        integrate(rule, [](const UnitVector& z) { return z[2] * z[2]; });
    const double err = std::abs(moment - 1.0 / 3.0);
    sink.row("sphere_quadrature", "second moment of a coordinate",
             err <= 1e-10, err, 1e-10);
  }
  {
    const double skew = perturb_c_alpha ? 1.0 + 1e-5 : 1.0;
    Eigen::VectorXd x2(2);
    x2 << 0.6, 0.0;
    const double got2 =
        skew * integrate(circle_rule(512),
                         [&](const UnitVector& z) { return kernel(x2, z, 1.0); });
    const double err2 = std::abs(got2 - p_alpha_one(x2, 1.0));
    Eigen::VectorXd x3(3);
    x3 << 0.0, 0.6, 0.0;
    const double got3 =
        skew * integrate(product_rule(3, 160),
                         [&](const UnitVector& z) { return kernel(x3, z, 2.0); });
    const double err3 = std::abs(got3 - p_alpha_one(x3, 2.0));
    sink.row("poisson_solver", "kernel normalization",
             err2 <= 1e-8 && err3 <= 1e-8, std::max(err2, err3), 1e-8);
  }
  {
    double worst = 0.0;
    for (int i = 1; i <= 200; ++i) {
      const double r = i / 201.0;
      worst = std::max(worst, p_alpha_one(2, r, 2.5) - 1.0);
    }
    sink.row("poisson_solver", "kernel integral stays below one",
             worst <= 1e-12, worst, 1e-12);
  }
  {
    const double err = std::abs(p_alpha_one(2, 1.0 - 1e-6, 2.0) - 1.0);
    sink.row("poisson_solver", "kernel integral boundary limit",
             err <= 1e-3, err, 1e-3);
  }
  {
    const double r = 1.0 - 1e-4;
    const double slope = (1.0 - p_alpha_one(2, r, 2.0)) / (1.0 - r);
    const double err = std::abs(slope - 1.0);
    sink.row("poisson_solver", "boundary decay slope", err <= 0.01, err,
             0.01);
  }
  {
    ScalarField saddle{2, [](const BallPoint& x) {
                         return x[0] * x[0] - x[1] * x[1];
                       }};
    Eigen::VectorXd x(2);
    x << 0.3, 0.2;
    const double res0 = std::abs(apply(saddle, x, 0.0, 1e-3));
    ScalarField radial{2, [](const BallPoint& p) {
                         return p_alpha_one(2, p.norm(), 1.0);
                       }};
    const double res1 = std::abs(apply(radial, x, 1.0, 1e-3));
    sink.row("delta_alpha", "annihilates harmonic polynomial",
             res0 <= 1e-8, res0, 1e-8);
    sink.row("delta_alpha", "annihilates closed-form radial solution",
             res1 <= 1e-4, res1, 1e-4);
  }
  {
    const auto grid = log_lambda_grid();
    const double fast = fast_constant(Majorant::power(0.5), grid);
    const double slow = slow_constant(Majorant::power(0.5), grid, 1e6);
    const double err = std::abs(fast - 2.0) + std::abs(slow - 2.0);
    sink.row("majorant", "half-power transform constants", err <= 1e-5,
             err, 1e-5);
  }
  {
    const SeminormEstimate est = boundary_seminorm(
        named_boundary("identity", 2), Majorant::power(1.0), 1000, 2);
    const double err = std::abs(est.value - 1.0);
    sink.row("majorant", "identity seminorm", err <= 0.02, err, 0.02);
  }
  {
    const double err = std::abs(kalaj_constant(2) - 2.0 / M_PI);
    sink.row("experiments", "planar constant reduction", err <= 1e-12, err,
             1e-12);
  }

  report.metadata.emplace_back("verdict", sink.all_pass ? "PASS" : "FAIL");
  report.metadata.emplace_back("timestamp", timestamp_utc());
  report.exit_code = sink.all_pass ? 0 : 1;
  return report;
}

}  // namespace wp
