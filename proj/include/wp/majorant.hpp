#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "wp/poisson_solver.hpp"

namespace wp {

// Modulus of continuity: increasing, zero at zero, with t -> w(t)/t
// non-increasing.  Power moduli t^beta carry their exponent so the
// integral transforms below can use closed-form tails.
struct Majorant {
  enum class Kind { Power, Custom };
  Kind kind = Kind::Power;
  double beta = 1.0;
  std::function<double(double)> fn;
  std::string label;

  static Majorant power(double beta);
  static Majorant custom(std::function<double(double)> fn, std::string label);
};

double eval_majorant(const Majorant& w, double t);

// Default log-spaced scale grid on [1e-6, 1].
std::vector<double> log_lambda_grid(int count = 25);

// sup over the grid of (int_0^lambda w(t)/t dt) / w(lambda).  The integral
// runs in the variable s = log(lambda/t) with unit panels of Gauss nodes,
// extending the range until the increments are negligible; +infinity marks
// a divergent (non-fast) modulus or a ratio beyond 1e6.
double fast_constant(const Majorant& w, const std::vector<double>& lambda_grid);

// sup over the grid of lambda * (int_lambda^t_max w(t)/t^2 dt + tail)
// / w(lambda).  Power moduli close the tail analytically
// (t_max^(beta-1)/(1-beta)); beta = 1 is divergent by inspection.  Custom
// moduli extend t_max geometrically and extrapolate the remainder;
// +infinity marks divergence.
double slow_constant(const Majorant& w, const std::vector<double>& lambda_grid,
                     double t_max);

struct SeminormEstimate {
  double value = 0.0;
  long pair_count = 0;
  std::pair<Eigen::VectorXd, Eigen::VectorXd> argmax_pair;
  std::uint64_t seed = 0;
};

// Randomized estimate of sup |phi(x)-phi(y)| / w(|x-y|) over sphere pairs:
// a seeded base sample, plus eight rounds of resampling at halving scales
// around the argmax of every thousand-draw block.  Deterministic per seed,
// and non-decreasing in `pairs` at block granularity.
SeminormEstimate boundary_seminorm(const BoundaryFunction& phi,
                                   const Majorant& w, long pairs,
                                   std::uint64_t seed);

using FieldMap = std::function<Eigen::VectorXd(const BallPoint&)>;

// Same estimator over pairs in the closed ball of radius r_max.  Half the
// base pairs put both endpoints at radii beyond 0.9 r_max, where the
// extension bound is at stake.
SeminormEstimate interior_seminorm(const FieldMap& u, int n, const Majorant& w,
                                   double r_max, long pairs,
                                   std::uint64_t seed);

}  // namespace wp
