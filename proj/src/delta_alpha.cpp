#include "wp/delta_alpha.hpp"

#include <cmath>
#include <random>

#include "wp/errors.hpp"

namespace wp {

double weight(const BallPoint& x, double alpha) {
  const double r2 = x.squaredNorm();
  if (r2 >= 1.0 && alpha < 0.0) {
    throw DomainError("weight: negative power undefined on |x| >= 1");
  }
  return std::pow(1.0 - r2, alpha);
}

double apply(const ScalarField& u, const BallPoint& x, double alpha,
             double h) {
  if (!u.eval || u.n != x.size()) {
    throw DomainError("apply: field and point dimensions differ");
  }
  if (!(h >= 1e-5 && h <= 1e-2)) {
    throw DomainError("apply: step must lie in [1e-5, 1e-2]");
  }
  if (!(x.norm() + 2.0 * h < 1.0)) {
    throw DomainError("apply: FD stencil exits the ball");
  }
  const int n = u.n;
  const double center = u.eval(x);
  double lap = 0.0;
  double advect = 0.0;
  for (int j = 0; j < n; ++j) {
    BallPoint hi = x;
    BallPoint lo = x;
    hi[j] += h;
    lo[j] -= h;
    const double up = u.eval(hi);
    const double down = u.eval(lo);
    lap += (up - 2.0 * center + down) / (h * h);
    advect += x[j] * (up - down) / (2.0 * h);
  }
  const double one_minus = 1.0 - x.squaredNorm();
  const double inv_next = std::pow(one_minus, -alpha - 1.0);
  return std::pow(one_minus, -alpha) * lap +
         2.0 * alpha * inv_next * advect +
         alpha * (n - 2.0 - alpha) * inv_next * center;
}

double residual_sup(const BoundaryFunction& phi, const SolverConfig& cfg,
                    double grid_radius, int grid_count) {
  if (!(grid_radius > 0.0 && grid_radius <= 0.9)) {
    throw DomainError("residual_sup: grid radius must lie in (0, 0.9]");
  }
  if (grid_count < 1) {
    throw DomainError("residual_sup: grid must hold at least one point");
  }
  const DirichletSolution u = solve(phi, cfg);
  const int n = cfg.dim;

  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  const auto uniform = [&rng]() {
    return ((rng() >> 11) + 1.0) * 0x1.0p-53;
  };
  // Box-Muller directions, radii with the ball volume law.
  const auto draw_point = [&]() {
    BallPoint p(n);
    int i = 0;
    while (i < n) {
      const double a = uniform();
      const double b = uniform();
      const double m = std::sqrt(-2.0 * std::log(a));
      p[i++] = m * std::cos(2.0 * M_PI * b);
      if (i < n) {
        p[i++] = m * std::sin(2.0 * M_PI * b);
      }
    }
    const double norm = p.norm();
    if (norm < 1e-12) {
      return BallPoint(BallPoint::Zero(n));
    }
    const double r = grid_radius * std::pow(uniform(), 1.0 / n);
    return BallPoint(r / norm * p);
  };

  double worst = 0.0;
  for (int k = 0; k < grid_count; ++k) {
    const BallPoint x = draw_point();
    for (int comp = 0; comp < phi.target_dim; ++comp) {
      ScalarField field;
      field.n = n;
      field.eval = [&u, comp](const BallPoint& y) { return u(y)[comp]; };
      worst = std::max(worst,
                       std::abs(apply(field, x, cfg.alpha, cfg.fd_step)));
    }
  }
  return worst;
}

}  // namespace wp
