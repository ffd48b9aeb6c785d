#pragma once

#include <cstdint>

namespace wp {

// Gamma function on the reals, Lanczos approximation (g = 7, 9 coefficients)
// with the reflection formula below 0.5.  Throws PoleError at 0, -1, -2, ...
double gamma(double x);

// 1/Gamma(x); returns 0 at the poles instead of throwing.
double rgamma(double x);

// Rising factorial (a)_k = a (a+1) ... (a+k-1), computed as a plain product.
// (a)_0 = 1.  k must be >= 0.
double pochhammer(double a, int k);

// Parameter triple of the Gauss hypergeometric series.  c must not be zero
// or a negative integer.
struct HypergeometricParams {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
};

// Raw power series sum_k (a)_k (b)_k / ((c)_k k!) x^k, stopping once two
// consecutive terms fall below tol * |partial sum| or max_terms is hit
// (NonConvergenceError in the latter case).  Converges for |x| < 1 and is
// exact when a or b is a non-positive integer.
double hyp2f1_series(const HypergeometricParams& p, double x,
                     double tol = 1e-15, std::int64_t max_terms = 1000000);

// Gauss hypergeometric function F(a, b; c; x) on x in [-1, 1].
//
// Routing: terminating series summed directly; x = 1 by the closed form
// Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)) (requires c-a-b > 0);
// x < -0.5 through the Pfaff transformation F = (1-x)^(-a) F(a, c-b; c;
// x/(x-1)); x near 1 with c-a-b away from an integer through the 1-x
// connection formula; x in (0.5, 1) otherwise through the Euler
// transformation F = (1-x)^(c-a-b) F(c-a, c-b; c; x).
double hyp2f1(const HypergeometricParams& p, double x);
double hyp2f1(double a, double b, double c, double x);

// Normalizing constant of the weighted Poisson kernel on the unit ball in
// R^n:  Gamma((n+alpha)/2) Gamma(1+alpha/2) / (Gamma(n/2) Gamma(1+alpha)).
// Requires n >= 2 and alpha > -1.  Equals 1 at alpha = 0.
double c_alpha(int n, double alpha);

}  // namespace wp
