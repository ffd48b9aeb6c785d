#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>

namespace wp {

// Points on the unit sphere S^{n-1} are plain dense vectors with
// | |v| - 1 | <= 1e-12.
using UnitVector = Eigen::VectorXd;

enum class RuleKind { CircleUniform, ProductGauss, MonteCarlo };

// Finite realization of the normalized rotation-invariant surface measure:
// positive weights summing to 1, one node per row.
struct QuadratureRule {
  int dim = 2;
  Eigen::MatrixXd nodes;
  Eigen::VectorXd weights;
  RuleKind kind = RuleKind::CircleUniform;
  std::optional<std::uint64_t> seed;
};

// Gauss-Legendre nodes and weights on [-1, 1] (weights sum to 2).
std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int k);

// m equally spaced angles on the circle, equal weights 1/m.  Exact for
// trigonometric polynomials of degree < m.  Requires m >= 4.
QuadratureRule circle_rule(int m);

// Tensor rule for n in {3, 4}: Gauss-Legendre in each polar cosine with the
// leftover Jacobian factor folded into the weight, 2k uniform azimuthal
// nodes, weights normalized to total 1.  Requires k >= 8.
QuadratureRule product_rule(int n, int k);

// m i.i.d. uniform points (normalized Gaussian vectors), equal weights.
// Fully deterministic per seed.  Requires m >= 100.
QuadratureRule monte_carlo_rule(int n, int m, std::uint64_t seed);

// Composite rule for n = 3 with polar panels geometrically refined toward
// the given pole, sized to resolve integrands that peak in a cap of chord
// scale `gap` around it.  Used by the solver close to the boundary, where a
// plain tensor rule would need an impractical per-axis count.
QuadratureRule polar_graded_rule(const UnitVector& pole, double gap,
                                 int azimuth_nodes = 256,
                                 int panel_nodes = 24);

namespace detail {

// Neumaier compensated accumulator; keeps the node sum order-independent
// to ~1e-14 regardless of how callers partition it.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

}  // namespace detail

// Sum of w_i f(node_i) with compensated accumulation.
template <class F>
double integrate(const QuadratureRule& rule, F&& f) {
  detail::CompensatedSum acc;
  const auto count = rule.nodes.rows();
  for (Eigen::Index i = 0; i < count; ++i) {
    acc.add(rule.weights[i] * f(UnitVector(rule.nodes.row(i))));
  }
  return acc.value();
}

// Componentwise variant for vector-valued integrands of dimension m.
template <class F>
Eigen::VectorXd integrate_vector(const QuadratureRule& rule, F&& f, int m) {
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd comp = Eigen::VectorXd::Zero(m);
  const auto count = rule.nodes.rows();
  for (Eigen::Index i = 0; i < count; ++i) {
    const Eigen::VectorXd v = rule.weights[i] * f(UnitVector(rule.nodes.row(i)));
    for (int j = 0; j < m; ++j) {
      const double t = sum[j] + v[j];
      if (std::abs(sum[j]) >= std::abs(v[j])) {
        comp[j] += (sum[j] - t) + v[j];
      } else {
        comp[j] += (v[j] - t) + sum[j];
      }
      sum[j] = t;
    }
  }
  return sum + comp;
}

// Estimated measure of the spherical cap {|zeta - xi| <= t} by integrating
// its indicator.  t in (0, 2].
double cap_measure(const QuadratureRule& rule, const UnitVector& xi, double t);

}  // namespace wp
