#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <memory>

#include "wp/sphere_quadrature.hpp"

namespace wp {

// Points of the open unit ball are plain dense vectors with |x| < 1.
using BallPoint = Eigen::VectorXd;

// Boundary datum phi: S^{n-1} -> R^m.  unit_norm marks data promised to
// take values on the unit sphere of R^m.
struct BoundaryFunction {
  int dim = 2;
  int target_dim = 1;
  std::function<Eigen::VectorXd(const UnitVector&)> eval;
  bool unit_norm = false;
};

// Wraps a scalar datum as a 1-vector boundary function.
BoundaryFunction scalar_boundary(int n, std::function<double(const UnitVector&)> f);

enum class NodeGrowth { Fixed, InverseGap };

struct SolverConfig {
  int dim = 2;
  double alpha = 0.0;
  // Total node budget at moderate radii; 0 picks a per-dimension default
  // (64 for n = 2, 4096 for n = 3 and 4, 20000 beyond).
  int base_nodes = 0;
  double boundary_cap_epsilon = 1e-3;
  NodeGrowth node_growth = NodeGrowth::InverseGap;
  double fd_step = 1e-3;
  std::uint64_t seed = 0;
};

// Weighted Poisson kernel c_alpha(n, alpha) (1-|x|^2)^(1+alpha) / |x-zeta|^(n+alpha).
// Evaluated in log space for alpha > 10.  alpha = 0 gives the classical
// Poisson kernel.
double kernel(const BallPoint& x, const UnitVector& zeta, double alpha);

// Gradient of the kernel in x.  First term differentiates the power of
// 1-|x|^2 (factor -2(1+alpha) x_j), second the inverse distance power.
Eigen::VectorXd kernel_gradient(const BallPoint& x, const UnitVector& zeta,
                                double alpha);

// Closed form of the kernel's own integral over the sphere:
// c_alpha * F(-alpha/2, n/2-1-alpha/2; n/2; |x|^2).  Tends to 1 at the
// boundary and stays <= 1 when alpha > n-2.
double p_alpha_one(const BallPoint& x, double alpha);
double p_alpha_one(int n, double r, double alpha);

// d/dr of p_alpha_one along a ray, from the contiguous-parameter derivative
// of the hypergeometric factor:
// 2 c_alpha (ab/c) r F(a+1, b+1; c+1; r^2) with a = -alpha/2,
// b = n/2-1-alpha/2, c = n/2.
double p_alpha_one_radial_derivative(double r, int n, double alpha);

// Evaluator for the Dirichlet solution: componentwise quadrature of
// kernel x phi over the sphere.  Node counts follow cfg.node_growth: the
// budget grows like 1/(1-|x|) toward the boundary (circle rule for n = 2,
// tensor or cap-graded rule for n = 3, tensor for n = 4, Monte Carlo
// beyond).  Evaluations are pure; the rule cache behind the evaluator is
// internal and thread-safe.
class DirichletSolution {
 public:
  DirichletSolution(BoundaryFunction phi, SolverConfig cfg);
  Eigen::VectorXd operator()(const BallPoint& x) const;
  const SolverConfig& config() const { return cfg_; }
  const BoundaryFunction& boundary() const { return phi_; }

 private:
  struct RuleCache;
  const QuadratureRule& rule_for(double r, const BallPoint& x,
                                 QuadratureRule& scratch) const;
  friend Eigen::MatrixXd gradient(const BoundaryFunction& phi,
                                  const SolverConfig& cfg, const BallPoint& x);
  BoundaryFunction phi_;
  SolverConfig cfg_;
  std::shared_ptr<RuleCache> cache_;
};

DirichletSolution solve(BoundaryFunction phi, SolverConfig cfg);

// Jacobian of the solution at x: row i holds the gradient of component i,
// computed by integrating kernel_gradient x phi.
Eigen::MatrixXd gradient(const BoundaryFunction& phi, const SolverConfig& cfg,
                         const BallPoint& x);

// |phi(zeta) - u(r zeta)| / (1-r) with u the solved extension; the
// boundary value is read off the datum itself (the extension is continuous
// up to the closure).  r in (0, 1 - cfg.boundary_cap_epsilon].
double difference_quotient(const BoundaryFunction& phi,
                           const SolverConfig& cfg, const UnitVector& zeta,
                           double r);

// Largest deviation of |phi| from 1 over the rule's nodes.
double unit_norm_defect(const BoundaryFunction& phi,
                        const QuadratureRule& rule);

}  // namespace wp
