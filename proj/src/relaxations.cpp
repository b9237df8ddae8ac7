#include "relax/relaxations.hpp"

#include <algorithm>
#include <cmath>

#include "relax/errors.hpp"
#include "relax/oracles.hpp"
#include "relax/solvers.hpp"

namespace relax {

namespace {

double logsumexp_neg(const Vec& L, double lambda) {
  // log Σ_f exp(−λ L_f), stabilized around the minimum loss.
  double m = *std::min_element(L.begin(), L.end());
  double s = 0.0;
  for (double v : L) s += std::exp(-lambda * (v - m));
  return -lambda * m + std::log(s);
}

}  // namespace

double expweights_value(ExpWeightsState& state) {
  const Vec& L = state.cumulative_losses;
  const double k = static_cast<double>(state.horizon_remaining);
  auto objective = [&](double loglam) {
    double lam = std::exp(loglam);
    return logsumexp_neg(L, lam) / lam + 2.0 * lam * k;
  };
  double loglam = golden_section(objective, -20.0, 5.0, 200);
  state.lambda_star = std::exp(loglam);
  return objective(loglam);
}

MixedStrategy expweights_strategy(const ExpWeightsState& state) {
  const Vec& L = state.cumulative_losses;
  double m = *std::min_element(L.begin(), L.end());
  Vec w(L.size());
  double z = 0.0;
  for (size_t f = 0; f < L.size(); ++f) {
    w[f] = std::exp(-state.lambda_star * (L[f] - m));
    z += w[f];
  }
  for (double& v : w) v /= z;
  return MixedStrategy::distribution(w);
}

double ExpWeightsRelaxation::value(const OnlineGame& game,
                                   const std::vector<Move>& outcomes) const {
  ExpWeightsState state;
  state.cumulative_losses = cumulative_losses(game, outcomes);
  state.horizon_remaining = game.horizon - static_cast<int>(outcomes.size());
  state.loss_lo = game.loss_model.lo;
  state.loss_hi = game.loss_model.hi;
  return expweights_value(state);
}

std::optional<MixedStrategy> ExpWeightsRelaxation::closed_form(
    const OnlineGame& game, const History& history) const {
  ExpWeightsState state;
  state.cumulative_losses = history.cumulative();
  state.horizon_remaining = game.horizon - history.length();
  expweights_value(state);  // optimizes λ* for the current prefix
  return expweights_strategy(state);
}

Vec mirror_descent_update(const MirrorDescentState& state) {
  // f_t = −∇‖x̃_{t−1}‖² / (2√(‖x̃_{t−1}‖² + C(T−t+1))); ∇‖x‖² = 2x.
  const Vec& x = state.prefix_sum;
  double denom =
      2.0 * std::sqrt(dot(x, x) + state.C * static_cast<double>(state.horizon_remaining));
  Vec f(x.size());
  for (size_t i = 0; i < x.size(); ++i) f[i] = -2.0 * x[i] / denom;
  return f;
}

double mirror_descent_value(MirrorDescentState& state, const Vec& next_outcome) {
  const Vec& x = state.prefix_sum;
  double arg = dot(x, x) + 2.0 * dot(x, next_outcome) +
               state.C * static_cast<double>(state.horizon_remaining);
  if (arg < 0.0) {
    state.clamped = true;
    arg = 0.0;
  }
  return std::sqrt(arg);
}

double MirrorDescentRelaxation::value(const OnlineGame& game,
                                      const std::vector<Move>& outcomes) const {
  const int T = game.horizon;
  const int t = static_cast<int>(outcomes.size());
  MirrorDescentState state;
  state.C = C_;
  if (t == 0) {
    // Empty prefix: admissibility against the t=1 value gives √(CT).
    return std::sqrt(C_ * static_cast<double>(T));
  }
  Vec x0 = element_param(game.outcomes, outcomes[0]);
  state.prefix_sum.assign(x0.size(), 0.0);
  for (int i = 0; i + 1 < t; ++i) {
    Vec xp = element_param(game.outcomes, outcomes[i]);
    for (size_t j = 0; j < xp.size(); ++j) state.prefix_sum[j] += xp[j];
  }
  state.horizon_remaining = T - t + 1;
  return mirror_descent_value(state, element_param(game.outcomes, outcomes.back()));
}

std::optional<MixedStrategy> MirrorDescentRelaxation::closed_form(
    const OnlineGame& game, const History& history) const {
  MirrorDescentState state;
  state.C = C_;
  state.prefix_sum = history.prefix_sum();
  state.horizon_remaining = game.horizon - history.length();  // T − (t−1) ... = T−t+1 at round t
  return MixedStrategy::point_move(Move::vec(mirror_descent_update(state)));
}

double MirrorDescentRelaxation::initial_bound(const OnlineGame& game) const {
  return std::sqrt(2.0 * C_ * static_cast<double>(game.horizon));
}

double strongly_convex_value(const OnlineGame& game,
                             const std::vector<Move>& outcomes,
                             const std::function<double()>& diameter_fn) {
  const NormBall& ball = ball_of(game.decisions);
  Vec f = convex_erm(game, outcomes, ball);
  double erm_loss = 0.0;
  for (const Move& x : outcomes)
    erm_loss += game.loss_model.eval(f, element_param(game.outcomes, x));
  double remaining = static_cast<double>(game.horizon - outcomes.size());
  return -erm_loss + remaining * diameter_fn();
}

double StronglyConvexRelaxation::value(const OnlineGame& game,
                                       const std::vector<Move>& outcomes) const {
  double r = radius_;
  return strongly_convex_value(game, outcomes, [r]() { return r; });
}

double StronglyConvexRelaxation::initial_bound(const OnlineGame& game) const {
  return static_cast<double>(game.horizon) * radius_;
}

ConstrainedMdResult constrained_md_step(const MirrorDescentState& state, int t,
                                        const Vec& sigmas_from_t) {
  if (t <= 1) return {Vec(state.prefix_sum.size(), 0.0), 0.0};
  double budget = 0.0;
  for (double s : sigmas_from_t) budget += s * s;
  const Vec& x = state.prefix_sum;
  double ratio = 1.0 + 1.0 / static_cast<double>(t - 1);
  double alpha = ratio * ratio / (2.0 * std::sqrt(dot(x, x) + state.C * budget));
  Vec f(x.size());
  for (size_t i = 0; i < x.size(); ++i) f[i] = -alpha * 2.0 * x[i];
  return {f, alpha};
}

double constrained_md_value(const Vec& prefix_sum, double C,
                            const Vec& sigmas_after_t, double R, double lambda) {
  double budget = 0.0;
  for (double s : sigmas_after_t) budget += s * s;
  return (2.0 * std::sqrt(2.0) * R / std::sqrt(lambda)) *
         std::sqrt(dot(prefix_sum, prefix_sum) + C * budget);
}

MixedStrategy ConstrainedMdLearner::next(const OnlineGame& game,
                                         const History& history, RngStream&) {
  int t = history.length() + 1;
  MirrorDescentState state;
  state.C = C_;
  state.prefix_sum = history.prefix_sum();
  Vec sigmas_from_t(sigmas_.begin() + std::min<size_t>(t - 1, sigmas_.size()),
                    sigmas_.end());
  ConstrainedMdResult r = constrained_md_step(state, t, sigmas_from_t);
  Vec f = project_ball(r.decision, ball_of(game.decisions));
  return MixedStrategy::point_move(Move::vec(f));
}

double ConstrainedMdLearner::initial_bound(const OnlineGame& game) const {
  Vec zero(ball_of(game.outcomes).dim, 0.0);
  return constrained_md_value(zero, C_, sigmas_);
}

UniversalMdResult universal_md_update(const UniversalPsi& psi,
                                      const Vec& prefix_sum,
                                      int horizon_remaining) {
  double v = psi.psi_star(prefix_sum);
  if (!std::isfinite(v)) throw DomainError("Ψ* evaluated non-finite");
  Vec g = psi.grad_psi_star(prefix_sum);
  double denom =
      psi.p * std::pow(v + psi.C * static_cast<double>(horizon_remaining),
                       1.0 / psi.p);
  UniversalMdResult out;
  out.decision.resize(g.size());
  for (size_t i = 0; i < g.size(); ++i) out.decision[i] = -g[i] / denom;
  out.relaxation_value =
      std::pow(v + psi.C * static_cast<double>(horizon_remaining), 1.0 / psi.p);
  return out;
}

MixedStrategy UniversalMdLearner::next(const OnlineGame& game,
                                       const History& history, RngStream&) {
  int remaining = game.horizon - history.length();  // T − t + 1 with t the round about to be played
  UniversalMdResult r = universal_md_update(psi_, history.prefix_sum(), remaining);
  return MixedStrategy::point_move(Move::vec(r.decision));
}

double UniversalMdLearner::initial_bound(const OnlineGame& game) const {
  return std::pow(psi_.C * static_cast<double>(game.horizon), 1.0 / psi_.p);
}

std::shared_ptr<Relaxation> make_relaxation(const std::string& id) {
  if (id == "expweights") return std::make_shared<ExpWeightsRelaxation>();
  if (id == "mirror-l2") return std::make_shared<MirrorDescentRelaxation>();
  if (id == "seq-rademacher") return std::make_shared<SeqRademacherRelaxation>();
  throw ConfigError("unknown relaxation id '" + id + "'");
}

}  // namespace relax
