#pragma once

#include <functional>

#include "wp/poisson_solver.hpp"

namespace wp {

// Scalar field on the open unit ball, finite on every closed sub-ball.
struct ScalarField {
  int n = 2;
  std::function<double(const BallPoint&)> eval;
};

// Standard weight (1-|x|^2)^alpha.
double weight(const BallPoint& x, double alpha);

// Weighted operator applied at x via the expanded product rule
//   (1-|x|^2)^(-alpha) lap(u)
//   + 2 alpha (1-|x|^2)^(-alpha-1) <x, grad(u)>
//   + alpha (n-2-alpha) (1-|x|^2)^(-alpha-1) u,
// with Laplacian and gradient by second-order central differences of step h.
// Reduces to the plain FD Laplacian at alpha = 0.
double apply(const ScalarField& u, const BallPoint& x, double alpha, double h);

// Largest |apply| of the solved extension of phi over a seeded, deterministic
// interior grid of grid_count points with radii up to grid_radius.  Vector
// data are measured componentwise.
double residual_sup(const BoundaryFunction& phi, const SolverConfig& cfg,
                    double grid_radius, int grid_count);

}  // namespace wp
