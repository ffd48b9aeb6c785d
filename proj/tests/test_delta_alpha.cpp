#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "wp/delta_alpha.hpp"
#include "wp/errors.hpp"
#include "wp/poisson_solver.hpp"

namespace {

Eigen::VectorXd vec2(double a, double b) {
  Eigen::VectorXd v(2);
  v << a, b;
  return v;
}

// Divergence-form oracle: differentiate the flux (1-|y|^2)^(-alpha) grad(u)
// itself by central differences, then add the zeroth-order term.  One more
// differentiation level than the expanded form, kept only for cross-checks.
double nested_divergence(const wp::ScalarField& u, const Eigen::VectorXd& x,
                         double alpha, double h) {
  const int n = u.n;
  const auto flux = [&](const Eigen::VectorXd& y, int j) {
    Eigen::VectorXd hi = y;
    Eigen::VectorXd lo = y;
    hi[j] += h;
    lo[j] -= h;
    const double dj = (u.eval(hi) - u.eval(lo)) / (2.0 * h);
    return std::pow(1.0 - y.squaredNorm(), -alpha) * dj;
  };
  double div = 0.0;
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd hi = x;
    Eigen::VectorXd lo = x;
    hi[j] += h;
    lo[j] -= h;
    div += (flux(hi, j) - flux(lo, j)) / (2.0 * h);
  }
  const double zeroth = alpha * (n - 2.0 - alpha) *
                        std::pow(1.0 - x.squaredNorm(), -alpha - 1.0) *
                        u.eval(x);
  return div + zeroth;
}

wp::ScalarField plane_field(std::function<double(double, double)> f) {
  wp::ScalarField u;
  u.n = 2;
  u.eval = [f = std::move(f)](const wp::BallPoint& x) {
    return f(x[0], x[1]);
  };
  return u;
}

}  // namespace

TEST_CASE("weight values") {
  CHECK(wp::weight(Eigen::VectorXd::Zero(2), 3.0) == 1.0);
  CHECK(wp::weight(Eigen::VectorXd::Zero(3), -0.5) == 1.0);
  CHECK(wp::weight(vec2(0.3, -0.2), 0.0) == 1.0);
  CHECK(std::abs(wp::weight(vec2(0.6, 0.0), 2.0) - 0.4096) < 1e-15);
  CHECK_THROWS_AS(wp::weight(vec2(1.0, 0.0), -1.0), wp::DomainError);
  CHECK(wp::weight(vec2(0.99, 0.0), 2.0) > 0.0);
}

TEST_CASE("linear and harmonic fields are annihilated at alpha zero") {
  const wp::ScalarField linear = plane_field([](double a, double) {
    return a;
  });
  CHECK(std::abs(wp::apply(linear, vec2(0.2, -0.3), 0.0, 1e-3)) < 1e-9);

  const wp::ScalarField saddle = plane_field([](double a, double b) {
    return a * a - b * b;
  });
  CHECK(std::abs(wp::apply(saddle, vec2(0.4, 0.1), 0.0, 1e-3)) < 1e-8);
}

TEST_CASE("alpha zero reduces to the plain FD Laplacian") {
  const wp::ScalarField u = plane_field([](double a, double b) {
    return std::exp(a) * std::cos(2.0 * b) + a * a * b;
  });
  const Eigen::VectorXd x = vec2(0.3, 0.1);
  const double h = 1e-3;
  double lap = 0.0;
  for (int j = 0; j < 2; ++j) {
    Eigen::VectorXd hi = x;
    Eigen::VectorXd lo = x;
    hi[j] += h;
    lo[j] -= h;
    lap += (u.eval(hi) - 2.0 * u.eval(x) + u.eval(lo)) / (h * h);
  }
  CHECK(std::abs(wp::apply(u, x, 0.0, h) - lap) < 1e-14);
}

TEST_CASE("expanded form agrees with the nested divergence oracle") {
  const wp::ScalarField u = plane_field([](double a, double b) {
    return std::exp(a) * std::cos(b) + a * a * b;
  });
  const double h = 1e-3;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coord(-0.45, 0.45);
  for (double alpha : {0.5, 1.0, 2.7}) {
    for (int k = 0; k < 100; ++k) {
      const Eigen::VectorXd x = vec2(coord(rng), coord(rng));
      const double got = wp::apply(u, x, alpha, h);
      const double want = nested_divergence(u, x, alpha, h);
      // Two FD derivatives may land on the weight, bringing factors up to
      // alpha(alpha+1)(1-|x|^2)^(-alpha-2); size the tolerance accordingly.
      const double scale = (1.0 + alpha) * (1.0 + alpha) *
                           (1.0 + std::abs(u.eval(x))) *
                           std::pow(1.0 - x.squaredNorm(), -alpha - 2.0);
      CHECK(std::abs(got - want) <= 10.0 * h * h * scale);
    }
  }
  // The discrepancy itself is second order in h.
  const Eigen::VectorXd x = vec2(0.4, 0.3);
  const double coarse =
      std::abs(wp::apply(u, x, 2.7, 1e-3) - nested_divergence(u, x, 2.7, 1e-3));
  const double fine = std::abs(wp::apply(u, x, 2.7, 5e-4) -
                               nested_divergence(u, x, 2.7, 5e-4));
  REQUIRE(coarse > 1e-8);
  CHECK(coarse / fine >= 3.0);
}

TEST_CASE("halving the step cuts the FD error by at least three") {
  const wp::ScalarField quartic = plane_field([](double a, double b) {
    return a * a * a * a + b * b * b * b;
  });
  const Eigen::VectorXd x = vec2(0.3, 0.2);
  for (double alpha : {0.0, 1.0}) {
    const double a1 = wp::apply(quartic, x, alpha, 4e-3);
    const double a2 = wp::apply(quartic, x, alpha, 2e-3);
    const double a3 = wp::apply(quartic, x, alpha, 1e-3);
    const double d1 = std::abs(a1 - a2);
    const double d2 = std::abs(a2 - a3);
    REQUIRE(d2 > 0.0);
    CHECK(d1 / d2 >= 3.0);
  }
}

TEST_CASE("closed-form kernel integral is annihilated") {
  wp::ScalarField u;
  u.n = 2;
  u.eval = [](const wp::BallPoint& x) {
    return wp::p_alpha_one(2, x.norm(), 1.0);
  };
  CHECK(std::abs(wp::apply(u, vec2(0.3, 0.2), 1.0, 1e-3)) < 1e-4);
}

TEST_CASE("apply guards") {
  const wp::ScalarField u = plane_field([](double a, double) { return a; });
  CHECK_THROWS_AS(wp::apply(u, vec2(0.2, 0.0), 1.0, 1e-6), wp::DomainError);
  CHECK_THROWS_AS(wp::apply(u, vec2(0.2, 0.0), 1.0, 0.1), wp::DomainError);
  CHECK_THROWS_AS(wp::apply(u, vec2(0.995, 0.0), 1.0, 5e-3),
                  wp::DomainError);
  wp::ScalarField three;
  three.n = 3;
  three.eval = [](const wp::BallPoint&) { return 0.0; };
  CHECK_THROWS_AS(wp::apply(three, vec2(0.1, 0.1), 1.0, 1e-3),
                  wp::DomainError);
}

TEST_CASE("solver output has a small weighted residual") {
  {
    wp::SolverConfig cfg;
    cfg.dim = 2;
    cfg.alpha = 0.0;
    const wp::BoundaryFunction phi = wp::scalar_boundary(
        2, [](const wp::UnitVector& z) { return z[0]; });
    CHECK(wp::residual_sup(phi, cfg, 0.8, 16) <= 1e-6);
  }
  {
    wp::SolverConfig cfg;
    cfg.dim = 2;
    cfg.alpha = 2.0;
    const wp::BoundaryFunction one = wp::scalar_boundary(
        2, [](const wp::UnitVector&) { return 1.0; });
    CHECK(wp::residual_sup(one, cfg, 0.8, 16) <= 1e-4);
  }
  {
    wp::SolverConfig cfg;
    cfg.dim = 3;
    cfg.alpha = 1.5;
    const wp::BoundaryFunction phi = wp::scalar_boundary(
        3, [](const wp::UnitVector& z) { return z[0]; });
    CHECK(wp::residual_sup(phi, cfg, 0.8, 8) <= 5e-4);
  }
}

TEST_CASE("residual shrinks under joint step and node refinement") {
  wp::SolverConfig cfg;
  cfg.dim = 2;
  cfg.alpha = 1.0;
  cfg.base_nodes = 64;
  cfg.fd_step = 2e-3;
  const wp::BoundaryFunction phi = wp::scalar_boundary(
      2, [](const wp::UnitVector& z) { return z[0]; });
  const double floor = 1e-6;
  double prev = wp::residual_sup(phi, cfg, 0.8, 10);
  for (int step = 0; step < 2; ++step) {
    cfg.fd_step /= 2.0;
    cfg.base_nodes *= 2;
    const double next = wp::residual_sup(phi, cfg, 0.8, 10);
    CHECK(next <= std::max(0.5 * prev, floor));
    prev = next;
  }
}

TEST_CASE("residual grid is deterministic and guards its arguments") {
  wp::SolverConfig cfg;
  cfg.dim = 2;
  cfg.alpha = 1.0;
  cfg.seed = 11;
  const wp::BoundaryFunction phi = wp::scalar_boundary(
      2, [](const wp::UnitVector& z) { return z[0]; });
  const double a = wp::residual_sup(phi, cfg, 0.8, 6);
  const double b = wp::residual_sup(phi, cfg, 0.8, 6);
  CHECK(a == b);
  CHECK_THROWS_AS(wp::residual_sup(phi, cfg, 0.95, 6), wp::DomainError);
  CHECK_THROWS_AS(wp::residual_sup(phi, cfg, 0.8, 0), wp::DomainError);
}
