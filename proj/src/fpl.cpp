#include "relax/fpl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "relax/errors.hpp"
#include "relax/solvers.hpp"
#include "relax/zero_sum.hpp"

namespace relax {

PlayoutDraw make_draw(const PerturbationSpec& spec, int dim, int remaining,
                      RngStream& rng) {
  PlayoutDraw draw;
  draw.future_outcomes.reserve(remaining);
  draw.signs.reserve(remaining);
  for (int i = 0; i < remaining; ++i) {
    Vec x(dim);
    switch (spec.distribution) {
      case PerturbationSpec::Distribution::rademacher_cube:
        for (double& v : x) v = rng.sign();
        break;
      case PerturbationSpec::Distribution::gaussian_iid:
        for (double& v : x) v = rng.gaussian();
        break;
      case PerturbationSpec::Distribution::unit_sphere_uniform:
        x = unit_sphere_draw(dim, rng);
        break;
      case PerturbationSpec::Distribution::user_symmetric:
        for (double& v : x) v = spec.user_draw(rng);
        break;
    }
    draw.future_outcomes.push_back(std::move(x));
    draw.signs.push_back(rng.sign());
  }
  return draw;
}

namespace {

// Global maximization over a ball by coarse grid plus local refinement
// (desk scale, dim ≤ 2).
double grid_max(const std::function<double(const Vec&)>& fn,
                const NormBall& ball) {
  if (ball.dim > 2) throw TooLarge("grid maximization supports dim ≤ 2");
  double R = ball.radius;
  double best = -std::numeric_limits<double>::infinity();
  Vec best_p(ball.dim, 0.0);
  auto consider = [&](const Vec& p) {
    if (norm_of(p, ball.norm) > R + 1e-12) return;
    double v = fn(p);
    if (v > best) {
      best = v;
      best_p = p;
    }
  };
  int n = (ball.dim == 1) ? 2001 : 301;
  double step = 2.0 * R / (n - 1);
  if (ball.dim == 1) {
    for (int i = 0; i < n; ++i) consider(Vec{-R + i * step});
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) consider(Vec{-R + i * step, -R + j * step});
  }
  for (int level = 0; level < 3; ++level) {
    double h = step;
    step /= 10.0;
    Vec c = best_p;
    if (ball.dim == 1) {
      for (double u = c[0] - h; u <= c[0] + h + 1e-15; u += step)
        consider(Vec{u});
    } else {
      for (double u = c[0] - h; u <= c[0] + h + 1e-15; u += step)
        for (double v = c[1] - h; v <= c[1] + h + 1e-15; v += step)
          consider(Vec{u, v});
    }
  }
  return best;
}

double grid_min(const std::function<double(const Vec&)>& fn,
                const NormBall& ball, Vec* argmin) {
  if (ball.dim > 2) throw TooLarge("grid minimization supports dim ≤ 2");
  Vec best_p(ball.dim, 0.0);
  double best = std::numeric_limits<double>::infinity();
  double R = ball.radius;
  int n = (ball.dim == 1) ? 2001 : 301;
  double step = 2.0 * R / (n - 1);
  auto consider = [&](const Vec& p) {
    if (norm_of(p, ball.norm) > R + 1e-12) return;
    double v = fn(p);
    if (v < best) {
      best = v;
      best_p = p;
    }
  };
  if (ball.dim == 1)
    for (int i = 0; i < n; ++i) consider(Vec{-R + i * step});
  else
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) consider(Vec{-R + i * step, -R + j * step});
  for (int level = 0; level < 3; ++level) {
    double h = step;
    step /= 10.0;
    Vec c = best_p;
    if (ball.dim == 1) {
      for (double u = c[0] - h; u <= c[0] + h + 1e-15; u += step)
        consider(Vec{u});
    } else {
      for (double u = c[0] - h; u <= c[0] + h + 1e-15; u += step)
        for (double v = c[1] - h; v <= c[1] + h + 1e-15; v += step)
          consider(Vec{u, v});
    }
  }
  if (argmin) *argmin = best_p;
  return best;
}

double model_loss(const OnlineGame& game, const Vec& f, const Vec& xparam) {
  const LossModel& lm = game.loss_model;
  if (lm.kind == LossModel::Kind::linear) return dot(f, xparam);
  if (lm.kind == LossModel::Kind::convex_callback) return lm.eval(f, xparam);
  if (lm.kind == LossModel::Kind::absolute) return std::fabs(f[0] - xparam[0]);
  throw DomainError("playout needs a vector loss model");
}

}  // namespace

Vec generic_playout_step(const OnlineGame& game, const History& history,
                         const PerturbationSpec& spec, const PlayoutDraw& draw) {
  if (!is_finite_set(game.outcomes))
    throw NoClosedForm("generic playout enumerates finite X only");
  const NormBall& fball = ball_of(game.decisions);
  const int nx = finite_size(game.outcomes);
  std::vector<Vec> xparams(nx);
  for (int x = 0; x < nx; ++x)
    xparams[x] = element_param(game.outcomes, Move::finite(x));

  std::vector<Vec> past;
  for (const Move& m : history.outcomes())
    past.push_back(element_param(game.outcomes, m));

  // Φ(x) = sup_f { C Σ_i ε_i ℓ(f, x_i) − Σ_{s<t} ℓ(f, x_s) − ℓ(f, x) }.
  Vec phi(nx);
  for (int x = 0; x < nx; ++x) {
    phi[x] = grid_max(
        [&](const Vec& f) {
          double v = 0.0;
          for (size_t i = 0; i < draw.future_outcomes.size(); ++i)
            v += spec.C * draw.signs[i] *
                 model_loss(game, f, draw.future_outcomes[i]);
          for (const Vec& xp : past) v -= model_loss(game, f, xp);
          return v - model_loss(game, f, xparams[x]);
        },
        fball);
  }

  Vec f_t;
  grid_min(
      [&](const Vec& g) {
        double worst = -std::numeric_limits<double>::infinity();
        for (int x = 0; x < nx; ++x)
          worst = std::max(worst, model_loss(game, g, xparams[x]) + phi[x]);
        return worst;
      },
      fball, &f_t);
  return f_t;
}

Vec fpl_l1_linf_step(const Vec& prefix_sum, const PlayoutDraw& draw, double C) {
  Vec w = prefix_sum;
  for (size_t i = 0; i < draw.future_outcomes.size(); ++i)
    for (size_t j = 0; j < w.size(); ++j)
      w[j] -= C * draw.signs[i] * draw.future_outcomes[i][j];
  size_t jstar = 0;
  for (size_t j = 1; j < w.size(); ++j)
    if (std::fabs(w[j]) > std::fabs(w[jstar]) + 1e-15) jstar = j;
  Vec f(w.size(), 0.0);
  f[jstar] = (w[jstar] > 0.0) ? -1.0 : 1.0;
  return f;
}

Vec fpl_l2_l2_step(const Vec& prefix_sum, const PlayoutDraw& draw, double C) {
  // The perturbation enters numerator and denominator as the same signed
  // vector (ε_i x_i is one symmetric draw); this keeps ‖f‖ < 1.
  const size_t d = prefix_sum.size();
  Vec v(d);
  for (size_t j = 0; j < d; ++j) v[j] = -prefix_sum[j];
  for (size_t i = 0; i < draw.future_outcomes.size(); ++i)
    for (size_t j = 0; j < d; ++j)
      v[j] += C * draw.signs[i] * draw.future_outcomes[i][j];
  double scale = std::sqrt(dot(v, v) + 1.0);
  Vec f(d);
  for (size_t j = 0; j < d; ++j) f[j] = v[j] / scale;
  return f;
}

double supervised_playout_step(
    const std::function<double(double, double)>& loss_fn,
    const std::function<double(double)>& continuation, const Vec& label_set,
    double B) {
  auto objective = [&](double yhat) {
    double worst = -std::numeric_limits<double>::infinity();
    for (double y : label_set)
      worst = std::max(worst, loss_fn(yhat, y) + continuation(y));
    return worst;
  };
  // Convex in ŷ (max of convex functions): golden section is exact.
  double yhat = golden_section(objective, -B, B);
  return std::clamp(yhat, -B, B);
}

MixedStrategy treewalk_step(const OnlineGame& game, const History& history,
                            const std::vector<int>& signs) {
  const int T = game.horizon;
  const int t = history.length() + 1;  // round being played
  const int depth = T - t;
  if (static_cast<int>(signs.size()) != depth)
    throw DomainError("sign draw length must equal T − t");

  // Worst-case tree of depth T−t for the prefix x_1..x_{t−1}: evaluate the
  // conditional complexity with the horizon shortened by one.
  OnlineGame shortened = game;
  shortened.horizon = T - 1;
  std::vector<Move> prefix = history.outcomes();
  BinaryTree tree = seq_rademacher_tree(shortened, prefix, 2.0);

  std::vector<Move> path;
  for (int level = 0; level < depth; ++level)
    path.push_back(tree.at(level, signs));

  const int nf = finite_size(game.decisions);
  const int nx = finite_size(game.outcomes);
  Vec L = cumulative_losses(game, prefix);
  std::vector<Vec> M(nf, Vec(nx, 0.0));
  for (int x = 0; x < nx; ++x) {
    double phi = -std::numeric_limits<double>::infinity();
    for (int f = 0; f < nf; ++f) {
      double inner = -L[f] - loss(game, Move::finite(f), Move::finite(x));
      for (int i = 0; i < depth; ++i)
        inner += 2.0 * signs[i] * loss(game, Move::finite(f), path[i]);
      phi = std::max(phi, inner);
    }
    for (int f = 0; f < nf; ++f)
      M[f][x] = loss(game, Move::finite(f), Move::finite(x)) + phi;
  }
  ZeroSumSolution sol = zero_sum_solve(M);
  return MixedStrategy::distribution(sol.q);
}

MixedStrategy FplL1LinfLearner::next(const OnlineGame& game,
                                     const History& history, RngStream& rng) {
  int remaining = game.horizon - history.length() - 1;  // x_{t+1..T}
  RngStream round_rng = rng.derive(static_cast<uint64_t>(history.length()) + 101);
  PlayoutDraw draw =
      make_draw(spec_, ball_of(game.outcomes).dim, remaining, round_rng);
  return MixedStrategy::sampled(
      Move::vec(fpl_l1_linf_step(history.prefix_sum(), draw, spec_.C)));
}

MixedStrategy FplL2L2Learner::next(const OnlineGame& game,
                                   const History& history, RngStream& rng) {
  int remaining = game.horizon - history.length() - 1;
  RngStream round_rng = rng.derive(static_cast<uint64_t>(history.length()) + 201);
  PlayoutDraw draw =
      make_draw(spec_, ball_of(game.outcomes).dim, remaining, round_rng);
  return MixedStrategy::sampled(
      Move::vec(fpl_l2_l2_step(history.prefix_sum(), draw, spec_.C)));
}

}  // namespace relax
