#include "wp/special_functions.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "wp/errors.hpp"

namespace wp {
namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_nonpositive_integer(double x, double tol = 1e-12) {
  return x <= tol && std::abs(x - std::round(x)) <= tol;
}

void validate_params(const HypergeometricParams& p) {
  if (is_nonpositive_integer(p.c, 0.0)) {
    throw DomainError("hyp2f1: c must not be zero or a negative integer");
  }
}

// Lanczos coefficients for g = 7.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

}  // namespace

double gamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) {
    throw PoleError("gamma: pole at non-positive integer");
  }
  if (x < 0.5) {
    return kPi / (std::sin(kPi * x) * gamma(1.0 - x));
  }
  const double z = x - 1.0;
  double sum = kLanczos[0];
  for (int i = 1; i < 9; ++i) {
    sum += kLanczos[i] / (z + i);
  }
  const double base = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(base, z + 0.5) * std::exp(-base) * sum;
}

double rgamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) {
    return 0.0;
  }
  return 1.0 / gamma(x);
}

double pochhammer(double a, int k) {
  if (k < 0) {
    throw DomainError("pochhammer: k must be non-negative");
  }
  double result = 1.0;
  for (int i = 0; i < k; ++i) {
    result *= a + i;
  }
  return result;
}

double hyp2f1_series(const HypergeometricParams& p, double x, double tol,
                     std::int64_t max_terms) {
  validate_params(p);
  if (std::abs(x) > 1.0) {
    throw DomainError("hyp2f1_series: x outside [-1, 1]");
  }
  // An exactly terminating series is summed in full so the result does not
  // depend on the tolerance knob.
  const bool terminating = is_nonpositive_integer(p.a, 0.0) ||
                           is_nonpositive_integer(p.b, 0.0);
  double sum = 1.0;
  double term = 1.0;
  int small_run = 0;
  for (std::int64_t k = 0; k < max_terms; ++k) {
    term *= (p.a + k) * (p.b + k) / ((p.c + k) * (k + 1)) * x;
    sum += term;
    if (term == 0.0) {
      return sum;
    }
    if (!terminating && std::abs(term) < tol * std::abs(sum)) {
      if (++small_run >= 2) {
        return sum;
      }
    } else {
      small_run = 0;
    }
  }
  throw NonConvergenceError("hyp2f1_series: term budget exhausted");
}

namespace {

// Finite sum for a terminating series; a (rounded to its integer) is the
// non-positive one of the upper parameters.
double hyp2f1_terminating(double a, double b, double c, double x) {
  const int count = static_cast<int>(-std::round(a));
  double sum = 1.0;
  double term = 1.0;
  for (int k = 0; k < count; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * x;
    sum += term;
  }
  return sum;
}

double hyp2f1_at_one(double a, double b, double c) {
  const double s = c - a - b;
  if (s <= 0.0) {
    throw DivergenceError("hyp2f1: divergent at x = 1 for c - a - b <= 0");
  }
  return gamma(c) * gamma(s) * rgamma(c - a) * rgamma(c - b);
}

// Connection formula in powers of 1 - x, valid when c - a - b is not an
// integer.  Both inner series run at 1 - x < 0.05 and converge quickly.
double hyp2f1_near_one(double a, double b, double c, double x) {
  const double s = c - a - b;
  const double w = 1.0 - x;
  const double t1 = gamma(c) * gamma(s) * rgamma(c - a) * rgamma(c - b) *
                    hyp2f1_series({a, b, 1.0 - s}, w);
  const double t2 = std::pow(w, s) * gamma(c) * gamma(-s) * rgamma(a) *
                    rgamma(b) * hyp2f1_series({c - a, c - b, 1.0 + s}, w);
  return t1 + t2;
}

}  // namespace

double hyp2f1(const HypergeometricParams& p, double x) {
  validate_params(p);
  if (std::abs(x) > 1.0) {
    throw DomainError("hyp2f1: x outside [-1, 1]");
  }
  const double a = p.a;
  const double b = p.b;
  const double c = p.c;
  const double s = c - a - b;

  if (x == 0.0) {
    return 1.0;
  }
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
    const bool pick_a =
        is_nonpositive_integer(a) &&
        (!is_nonpositive_integer(b) || std::round(-a) <= std::round(-b));
    return pick_a ? hyp2f1_terminating(a, b, c, x)
                  : hyp2f1_terminating(b, a, c, x);
  }
  if (x == 1.0) {
    return hyp2f1_at_one(a, b, c);
  }
  if (x == -1.0 && s <= -1.0) {
    throw DivergenceError("hyp2f1: divergent at x = -1 for c - a - b <= -1");
  }
  if (x < -0.5) {
    // Pfaff transformation; the argument moves to x/(x-1) in (0, 1/2].
    const double y = x / (x - 1.0);
    if (std::abs(a) <= std::abs(b)) {
      return std::pow(1.0 - x, -a) * hyp2f1_series({a, c - b, c}, y);
    }
    return std::pow(1.0 - x, -b) * hyp2f1_series({b, c - a, c}, y);
  }
  if (x > 0.95 && std::abs(s - std::round(s)) > 0.05) {
    return hyp2f1_near_one(a, b, c, x);
  }
  if (x > 0.5) {
    // Euler transformation; the transformed series keeps term counts small
    // on (0.5, 1).
    return std::pow(1.0 - x, s) * hyp2f1_series({c - a, c - b, c}, x);
  }
  return hyp2f1_series(p, x);
}

double hyp2f1(double a, double b, double c, double x) {
  return hyp2f1({a, b, c}, x);
}

double c_alpha(int n, double alpha) {
  if (n < 2) {
    throw DomainError("c_alpha: dimension must be at least 2");
  }
  if (alpha <= -1.0) {
    throw DomainError("c_alpha: alpha must exceed -1");
  }
  return gamma(0.5 * (n + alpha)) * gamma(1.0 + 0.5 * alpha) /
         (gamma(0.5 * n) * gamma(1.0 + alpha));
}

}  // namespace wp
