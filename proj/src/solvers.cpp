#include "relax/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "relax/errors.hpp"

namespace relax {

double golden_section(const std::function<double(double)>& f, double lo, double hi,
                      int iterations) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iterations && b - a > 1e-15; ++i) {
    if (fc < fd) {
      b = d; d = c; fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    }
  }
  return (fc < fd) ? c : d;
}

Vec simplex_ball_project(const Vec& v, double radius) {
  double total = 0.0;
  for (double x : v) total += std::max(0.0, x);
  Vec clipped(v.size());
  for (size_t i = 0; i < v.size(); ++i) clipped[i] = std::max(0.0, v[i]);
  if (total <= radius) return clipped;

  // Water-filling threshold for the l1 projection of a nonnegative vector.
  Vec sorted = clipped;
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  double cum = 0.0, theta = 0.0;
  for (size_t k = 0; k < sorted.size(); ++k) {
    cum += sorted[k];
    double candidate = (cum - radius) / static_cast<double>(k + 1);
    if (k + 1 == sorted.size() || sorted[k + 1] <= candidate) {
      theta = candidate;
      break;
    }
  }
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = std::max(0.0, clipped[i] - theta);
  return out;
}

Vec project_ball(const Vec& v, const NormBall& ball) {
  Vec out = v;
  switch (ball.norm) {
    case Norm::l2: {
      double n = norm_l2(v);
      if (n > ball.radius)
        for (double& x : out) x *= ball.radius / n;
      break;
    }
    case Norm::linf:
      for (double& x : out) x = std::clamp(x, -ball.radius, ball.radius);
      break;
    case Norm::l1: {
      if (norm_l1(v) <= ball.radius) break;
      Vec mags(v.size());
      for (size_t i = 0; i < v.size(); ++i) mags[i] = std::fabs(v[i]);
      Vec proj = simplex_ball_project(mags, ball.radius);
      for (size_t i = 0; i < v.size(); ++i)
        out[i] = std::copysign(proj[i], v[i]);
      break;
    }
  }
  return out;
}

SubgradientResult projected_subgradient(
    const std::function<double(const Vec&)>& objective,
    const std::function<Vec(const Vec&)>& subgradient, const NormBall& ball,
    Vec start, int iterations, double step_c) {
  Vec x = project_ball(start, ball);
  Vec best = x;
  double best_val = objective(x);
  for (int i = 1; i <= iterations; ++i) {
    Vec g = subgradient(x);
    double step = step_c / std::sqrt(static_cast<double>(i));
    for (size_t j = 0; j < x.size(); ++j) x[j] -= step * g[j];
    x = project_ball(x, ball);
    double v = objective(x);
    if (v < best_val) {
      best_val = v;
      best = x;
    }
  }
  return {best, best_val};
}

Vec convex_erm(const OnlineGame& game, const std::vector<Move>& outcomes,
               const NormBall& ball) {
  const LossModel& lm = game.loss_model;
  std::vector<Vec> params;
  params.reserve(outcomes.size());
  for (const Move& x : outcomes)
    params.push_back(element_param(game.outcomes, x));

  if (lm.erm) return project_ball(lm.erm(params), ball);

  auto total = [&](const Vec& f) {
    double s = 0.0;
    for (const Vec& p : params) s += lm.eval(f, p);
    return s;
  };
  if (ball.dim == 1) {
    double f = golden_section([&](double v) { return total(Vec{v}); },
                              -ball.radius, ball.radius);
    return Vec{f};
  }
  auto grad_total = [&](const Vec& f) {
    Vec g(f.size(), 0.0);
    for (const Vec& p : params) {
      Vec gi = lm.grad(f, p);
      for (size_t j = 0; j < g.size(); ++j) g[j] += gi[j];
    }
    return g;
  };
  SubgradientResult r = projected_subgradient(total, grad_total, ball,
                                              Vec(ball.dim, 0.0), 1000,
                                              ball.radius / std::max(1.0, lm.lipschitz));
  return r.minimizer;
}

}  // namespace relax
