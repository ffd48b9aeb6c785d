#include "wp/majorant.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "wp/errors.hpp"
#include "wp/sphere_quadrature.hpp"

namespace wp {
namespace {

const double kInf = std::numeric_limits<double>::infinity();

// Unit-panel Gauss nodes shared by both integral transforms.
const std::pair<Eigen::VectorXd, Eigen::VectorXd>& panel_nodes() {
  static const auto gl = gauss_legendre(16);
  return gl;
}

// Integral of g over [a, b] by one Gauss panel.
template <typename G>
double panel(const G& g, double a, double b) {
  const auto& [nodes, weights] = panel_nodes();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  detail::CompensatedSum acc;
  for (int i = 0; i < nodes.size(); ++i) {
    acc.add(weights[i] * g(mid + half * nodes[i]));
  }
  return half * acc.value();
}

double mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& rng) {
  return ((rng() >> 11) + 1.0) * 0x1.0p-53;
}

Eigen::VectorXd gaussian_vector(std::mt19937_64& rng, int n) {
  Eigen::VectorXd v(n);
  int i = 0;
  while (i < n) {
    const double a = uniform01(rng);
    const double b = uniform01(rng);
    const double m = std::sqrt(-2.0 * std::log(a));
    v[i++] = m * std::cos(2.0 * M_PI * b);
    if (i < n) {
      v[i++] = m * std::sin(2.0 * M_PI * b);
    }
  }
  return v;
}

Eigen::VectorXd sphere_point(std::mt19937_64& rng, int n) {
  while (true) {
    Eigen::VectorXd v = gaussian_vector(rng, n);
    const double norm = v.norm();
    if (norm > 1e-12) {
      return v / norm;
    }
  }
}

bool lexicographic_less(const Eigen::VectorXd& ax, const Eigen::VectorXd& ay,
                        const Eigen::VectorXd& bx, const Eigen::VectorXd& by) {
  for (int i = 0; i < ax.size(); ++i) {
    if (ax[i] != bx[i]) return ax[i] < bx[i];
  }
  for (int i = 0; i < ay.size(); ++i) {
    if (ay[i] != by[i]) return ay[i] < by[i];
  }
  return false;
}

struct ArgmaxTracker {
  double value = 0.0;
  Eigen::VectorXd x, y;
  bool has = false;

  void offer(double v, const Eigen::VectorXd& px, const Eigen::VectorXd& py) {
    if (!std::isfinite(v)) return;
    if (!has || v > value ||
        (v == value && lexicographic_less(px, py, x, y))) {
      value = v;
      x = px;
      y = py;
      has = true;
    }
  }
};

}  // namespace

Majorant Majorant::power(double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw DomainError("Majorant::power: exponent must lie in (0, 1]");
  }
  Majorant w;
  w.kind = Kind::Power;
  w.beta = beta;
  w.label = "power";
  return w;
}

Majorant Majorant::custom(std::function<double(double)> fn,
                          std::string label) {
  if (!fn) {
    throw DomainError("Majorant::custom: evaluator required");
  }
  Majorant w;
  w.kind = Kind::Custom;
  w.fn = std::move(fn);
  w.label = std::move(label);
  return w;
}

double eval_majorant(const Majorant& w, double t) {
  if (t < 0.0) {
    throw DomainError("eval_majorant: argument must be nonnegative");
  }
  if (w.kind == Majorant::Kind::Power) {
    return std::pow(t, w.beta);
  }
  return w.fn(t);
}

std::vector<double> log_lambda_grid(int count) {
  if (count < 2) {
    throw DomainError("log_lambda_grid: need at least two scales");
  }
  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i) {
    grid[i] = std::pow(10.0, -6.0 + 6.0 * i / (count - 1));
  }
  return grid;
}

double fast_constant(const Majorant& w,
                     const std::vector<double>& lambda_grid) {
  if (lambda_grid.empty()) {
    throw DomainError("fast_constant: empty scale grid");
  }
  double sup = 0.0;
  for (double lambda : lambda_grid) {
    if (!(lambda > 0.0 && lambda <= 1.0)) {
      throw DomainError("fast_constant: scales must lie in (0, 1]");
    }
    const double wl = eval_majorant(w, lambda);
    // int_0^lambda w(t)/t dt = int_0^inf w(lambda e^-s) ds.
    const auto g = [&](double s) {
      return eval_majorant(w, lambda * std::exp(-s));
    };
    double total = 0.0;
    int s = 0;
    bool converged = false;
    for (int stage = 32; stage <= 1024; stage *= 2) {
      double block = 0.0;
      for (; s < stage; ++s) {
        block += panel(g, s, s + 1.0);
      }
      total += block;
      if (block <= 1e-10 * std::max(total, wl)) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      return kInf;
    }
    sup = std::max(sup, total / wl);
    if (sup > 1e6) {
      return kInf;
    }
  }
  return sup;
}

double slow_constant(const Majorant& w, const std::vector<double>& lambda_grid,
                     double t_max) {
  if (lambda_grid.empty()) {
    throw DomainError("slow_constant: empty scale grid");
  }
  double grid_max = 0.0;
  for (double lambda : lambda_grid) {
    if (!(lambda > 0.0)) {
      throw DomainError("slow_constant: scales must be positive");
    }
    grid_max = std::max(grid_max, lambda);
  }
  if (!(t_max >= 1e3 * grid_max)) {
    throw DomainError("slow_constant: t_max must dominate the grid");
  }
  if (w.kind == Majorant::Kind::Power && w.beta == 1.0) {
    return kInf;
  }

  double sup = 0.0;
  for (double lambda : lambda_grid) {
    const double wl = eval_majorant(w, lambda);
    // lambda int_lambda^T w(t)/t^2 dt = int_0^log(T/lambda) w(lambda e^s)
    // e^-s ds.
    const auto g = [&](double s) {
      return eval_majorant(w, lambda * std::exp(s)) * std::exp(-s);
    };
    const auto integral_to = [&](double s_hi, double s_lo) {
      double total = 0.0;
      double s = s_lo;
      while (s + 1.0 <= s_hi) {
        total += panel(g, s, s + 1.0);
        s += 1.0;
      }
      if (s < s_hi) {
        total += panel(g, s, s_hi);
      }
      return total;
    };

    const double s_max = std::log(t_max / lambda);
    double total = integral_to(s_max, 0.0);
    if (w.kind == Majorant::Kind::Power) {
      // lambda int_T^inf t^(beta-2) dt = lambda T^(beta-1)/(1-beta).
      total += lambda * std::pow(t_max, w.beta - 1.0) / (1.0 - w.beta);
    } else {
      // Extend the horizon geometrically and extrapolate the remainder.
      double horizon = s_max;
      double prev_inc = -1.0;
      bool closed = false;
      for (int round = 0; round < 60; ++round) {
        const double inc = integral_to(horizon + std::log(2.0), horizon);
        horizon += std::log(2.0);
        if (inc <= 1e-12 * std::max(total, wl)) {
          closed = true;
          break;
        }
        if (prev_inc > 0.0) {
          const double rho = inc / prev_inc;
          if (rho < 0.995) {
            const double remainder = inc * rho / (1.0 - rho);
            if (remainder <= 1e-8 * std::max(total, wl)) {
              total += remainder;
              closed = true;
              break;
            }
          }
        }
        total += inc;
        prev_inc = inc;
      }
      if (!closed) {
        return kInf;
      }
    }
    sup = std::max(sup, total / wl);
    if (sup > 1e6) {
      return kInf;
    }
  }
  return sup;
}

namespace {

constexpr long kSeminormBlock = 1000;

// Shared estimator core.  Base pairs come from one nested stream; each
// complete block of 1000 draws contributes an argmax that is refined by 8
// rounds of resampling at halving scales, with streams keyed by (seed,
// block, round).  The reported value is a max over a family that only
// grows with the pair count, so it is non-decreasing in `pairs` at block
// granularity for a fixed seed.
template <typename Ratio, typename Draw, typename Perturb>
SeminormEstimate estimate_seminorm(long pairs, std::uint64_t seed,
                                   std::uint64_t salt, const Ratio& ratio,
                                   Draw& draw, const Perturb& perturb) {
  ArgmaxTracker best;
  long count = pairs;

  const auto climb = [&](const ArgmaxTracker& start, long block) {
    if (!start.has) return;
    ArgmaxTracker local = start;
    for (int round = 0; round < 8; ++round) {
      const double scale = std::pow(0.5, round + 1);
      std::mt19937_64 rr(
          mix_seed(seed, salt + 1000 + 16 * block + round));
      for (int k = 0; k < 64; ++k) {
        Eigen::VectorXd x = local.x;
        Eigen::VectorXd y = local.y;
        if (!perturb(rr, scale, x, y)) continue;
        local.offer(ratio(x, y), x, y);
        ++count;
      }
    }
    best.offer(local.value, local.x, local.y);
  };

  ArgmaxTracker block_best;
  long block = 0;
  for (long i = 0; i < pairs; ++i) {
    Eigen::VectorXd x, y;
    draw(i, x, y);
    const double v = ratio(x, y);
    best.offer(v, x, y);
    block_best.offer(v, x, y);
    if ((i + 1) % kSeminormBlock == 0 || i + 1 == pairs) {
      climb(block_best, block++);
      block_best = ArgmaxTracker{};
    }
  }

  SeminormEstimate est;
  est.value = best.has ? best.value : 0.0;
  est.pair_count = count;
  if (best.has) {
    est.argmax_pair = {best.x, best.y};
  }
  est.seed = seed;
  return est;
}

}  // namespace

SeminormEstimate boundary_seminorm(const BoundaryFunction& phi,
                                   const Majorant& w, long pairs,
                                   std::uint64_t seed) {
  if (pairs < 1000) {
    throw DomainError("boundary_seminorm: need at least 1000 pairs");
  }
  if (!phi.eval) {
    throw DomainError("boundary_seminorm: boundary function not callable");
  }
  const int n = phi.dim;
  const auto ratio = [&](const Eigen::VectorXd& x,
                         const Eigen::VectorXd& y) -> double {
    const double d = (x - y).norm();
    if (d < 1e-14) {
      return -1.0;
    }
    return (phi.eval(x) - phi.eval(y)).norm() / eval_majorant(w, d);
  };

  std::mt19937_64 rng(mix_seed(seed, 0));
  const auto draw = [&](long, Eigen::VectorXd& x, Eigen::VectorXd& y) {
    x = sphere_point(rng, n);
    y = sphere_point(rng, n);
  };
  const auto perturb = [&](std::mt19937_64& rr, double scale,
                           Eigen::VectorXd& x, Eigen::VectorXd& y) {
    x += scale * gaussian_vector(rr, n);
    y += scale * gaussian_vector(rr, n);
    const double nx = x.norm();
    const double ny = y.norm();
    if (nx < 1e-12 || ny < 1e-12) return false;
    x /= nx;
    y /= ny;
    return true;
  };
  return estimate_seminorm(pairs, seed, 0, ratio, draw, perturb);
}

SeminormEstimate interior_seminorm(const FieldMap& u, int n, const Majorant& w,
                                   double r_max, long pairs,
                                   std::uint64_t seed) {
  if (pairs < 1000) {
    throw DomainError("interior_seminorm: need at least 1000 pairs");
  }
  if (!(r_max > 0.0 && r_max < 1.0)) {
    throw DomainError("interior_seminorm: radius must lie in (0, 1)");
  }
  if (!u) {
    throw DomainError("interior_seminorm: field not callable");
  }
  const auto ratio = [&](const Eigen::VectorXd& x,
                         const Eigen::VectorXd& y) -> double {
    const double d = (x - y).norm();
    if (d < 1e-14) {
      return -1.0;
    }
    return (u(x) - u(y)).norm() / eval_majorant(w, d);
  };

  std::mt19937_64 rng(mix_seed(seed, 100));
  const auto draw_point = [&](bool near_boundary) {
    const Eigen::VectorXd dir = sphere_point(rng, n);
    const double r =
        near_boundary
            ? r_max * (0.9 + 0.1 * uniform01(rng))
            : r_max * std::pow(uniform01(rng), 1.0 / n);
    return Eigen::VectorXd(r * dir);
  };
  const auto draw = [&](long i, Eigen::VectorXd& x, Eigen::VectorXd& y) {
    const bool biased = (i % 2) == 1;
    x = draw_point(biased);
    y = draw_point(biased);
  };
  const auto perturb = [&](std::mt19937_64& rr, double scale,
                           Eigen::VectorXd& x, Eigen::VectorXd& y) {
    x += r_max * scale * gaussian_vector(rr, n);
    y += r_max * scale * gaussian_vector(rr, n);
    const double nx = x.norm();
    const double ny = y.norm();
    if (nx > r_max) x *= r_max / nx;
    if (ny > r_max) y *= r_max / ny;
    return true;
  };
  return estimate_seminorm(pairs, seed, 100, ratio, draw, perturb);
}

}  // namespace wp
