#include "wp/sphere_quadrature.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "wp/errors.hpp"

namespace wp {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Uniform double in (0, 1] from the top 53 bits of a generator draw; keeps
// node streams identical across platforms.
double uniform01(std::mt19937_64& rng) {
  return ((rng() >> 11) + 1) * 0x1.0p-53;
}

// Box-Muller pair; written out explicitly because the distribution adapters
// in the standard library do not pin down their algorithm.
void gaussian_pair(std::mt19937_64& rng, double& z0, double& z1) {
  const double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  z0 = radius * std::cos(2.0 * kPi * u2);
  z1 = radius * std::sin(2.0 * kPi * u2);
}

void normalize_weights(QuadratureRule& rule) {
  rule.weights /= rule.weights.sum();
}

}  // namespace

std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int k) {
  if (k < 1) {
    throw DomainError("gauss_legendre: order must be positive");
  }
  Eigen::VectorXd x(k);
  Eigen::VectorXd w(k);
  const int half = (k + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-based starting guess, then Newton on P_k.
    double z = std::cos(kPi * (i + 0.75) / (k + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 0; j < k; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = k * (z * p0 - p1) / (z * z - 1.0);
      const double step = p0 / pp;
      z -= step;
      if (std::abs(step) < 1e-15) {
        break;
      }
    }
    x[i] = -z;
    x[k - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[k - 1 - i] = w[i];
  }
  return {x, w};
}

QuadratureRule circle_rule(int m) {
  if (m < 4) {
    throw DomainError("circle_rule: need at least 4 nodes");
  }
  QuadratureRule rule;
  rule.dim = 2;
  rule.kind = RuleKind::CircleUniform;
  rule.nodes.resize(m, 2);
  rule.weights = Eigen::VectorXd::Constant(m, 1.0 / m);
  for (int i = 0; i < m; ++i) {
    const double theta = 2.0 * kPi * i / m;
    rule.nodes(i, 0) = std::cos(theta);
    rule.nodes(i, 1) = std::sin(theta);
  }
  return rule;
}

QuadratureRule product_rule(int n, int k) {
  if (n != 3 && n != 4) {
    throw DomainError("product_rule: only n in {3, 4} is supported");
  }
  if (k < 8) {
    throw DomainError("product_rule: need at least 8 nodes per axis");
  }
  const auto [u, wu] = gauss_legendre(k);
  const int az = 2 * k;
  QuadratureRule rule;
  rule.dim = n;
  rule.kind = RuleKind::ProductGauss;
  if (n == 3) {
    rule.nodes.resize(k * az, 3);
    rule.weights.resize(k * az);
    int row = 0;
    for (int i = 0; i < k; ++i) {
      const double s = std::sqrt(std::max(0.0, 1.0 - u[i] * u[i]));
      for (int j = 0; j < az; ++j) {
        const double theta = 2.0 * kPi * j / az;
        rule.nodes(row, 0) = u[i];
        rule.nodes(row, 1) = s * std::cos(theta);
        rule.nodes(row, 2) = s * std::sin(theta);
        rule.weights[row] = wu[i];
        ++row;
      }
    }
  } else {
    rule.nodes.resize(k * k * az, 4);
    rule.weights.resize(k * k * az);
    int row = 0;
    for (int i = 0; i < k; ++i) {
      const double s1 = std::sqrt(std::max(0.0, 1.0 - u[i] * u[i]));
      for (int l = 0; l < k; ++l) {
        const double s2 = std::sqrt(std::max(0.0, 1.0 - u[l] * u[l]));
        for (int j = 0; j < az; ++j) {
          const double theta = 2.0 * kPi * j / az;
          rule.nodes(row, 0) = u[i];
          rule.nodes(row, 1) = s1 * u[l];
          rule.nodes(row, 2) = s1 * s2 * std::cos(theta);
          rule.nodes(row, 3) = s1 * s2 * std::sin(theta);
          // sin^2(theta_1) d theta_1 = sqrt(1-u^2) du under u = cos(theta_1).
          rule.weights[row] = wu[i] * s1 * wu[l];
          ++row;
        }
      }
    }
  }
  normalize_weights(rule);
  return rule;
}

QuadratureRule monte_carlo_rule(int n, int m, std::uint64_t seed) {
  if (n < 2) {
    throw DomainError("monte_carlo_rule: dimension must be at least 2");
  }
  if (m < 100) {
    throw DomainError("monte_carlo_rule: need at least 100 nodes");
  }
  QuadratureRule rule;
  rule.dim = n;
  rule.kind = RuleKind::MonteCarlo;
  rule.seed = seed;
  rule.nodes.resize(m, n);
  rule.weights = Eigen::VectorXd::Constant(m, 1.0 / m);
  std::mt19937_64 rng(seed);
  Eigen::VectorXd g(n);
  for (int i = 0; i < m; ++i) {
    do {
      for (int j = 0; j < n; j += 2) {
        double z0;
        double z1;
        gaussian_pair(rng, z0, z1);
        g[j] = z0;
        if (j + 1 < n) {
          g[j + 1] = z1;
        }
      }
    } while (g.norm() < 1e-12);
    rule.nodes.row(i) = g / g.norm();
  }
  return rule;
}

QuadratureRule polar_graded_rule(const UnitVector& pole, double gap,
                                 int azimuth_nodes, int panel_nodes) {
  if (pole.size() != 3) {
    throw DomainError("polar_graded_rule: only n = 3 is supported");
  }
  if (!(gap > 0.0 && gap <= 1.0)) {
    throw DomainError("polar_graded_rule: gap must lie in (0, 1]");
  }
  // Panels in t = 1 - cos(theta_1), geometric from the cap scale outward.
  const double t0 = std::min(0.5 * gap * gap, 0.5);
  std::vector<double> edges{0.0, t0};
  while (edges.back() < 2.0) {
    edges.push_back(std::min(4.0 * edges.back(), 2.0));
  }
  const auto [gx, gw] = gauss_legendre(panel_nodes);
  const int panels = static_cast<int>(edges.size()) - 1;
  const int az = azimuth_nodes;
  QuadratureRule rule;
  rule.dim = 3;
  rule.kind = RuleKind::ProductGauss;
  rule.nodes.resize(panels * panel_nodes * az, 3);
  rule.weights.resize(panels * panel_nodes * az);

  // Householder reflection taking e1 to the pole.
  Eigen::Vector3d v = Eigen::Vector3d::UnitX() - Eigen::Vector3d(pole);
  const bool reflect = v.squaredNorm() > 1e-24;
  if (reflect) {
    v.normalize();
  }
  int row = 0;
  for (int p = 0; p < panels; ++p) {
    const double lo = edges[p];
    const double hi = edges[p + 1];
    for (int i = 0; i < panel_nodes; ++i) {
      const double t = 0.5 * (hi + lo) + 0.5 * (hi - lo) * gx[i];
      const double wt = 0.5 * (hi - lo) * gw[i];
      const double u = 1.0 - t;
      const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
      for (int j = 0; j < az; ++j) {
        const double theta = 2.0 * kPi * j / az;
        Eigen::Vector3d node(u, s * std::cos(theta), s * std::sin(theta));
        if (reflect) {
          node -= 2.0 * v.dot(node) * v;
        }
        rule.nodes.row(row) = node;
        rule.weights[row] = wt;
        ++row;
      }
    }
  }
  normalize_weights(rule);
  return rule;
}

double cap_measure(const QuadratureRule& rule, const UnitVector& xi,
                   double t) {
  detail::CompensatedSum acc;
  for (Eigen::Index i = 0; i < rule.nodes.rows(); ++i) {
    if ((rule.nodes.row(i).transpose() - xi).norm() <= t) {
      acc.add(rule.weights[i]);
    }
  }
  return acc.value();
}

}  // namespace wp
