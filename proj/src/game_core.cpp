#include <algorithm>
#include <cmath>
#include <limits>

#include "relax/errors.hpp"
#include "relax/relaxation.hpp"
#include "relax/solvers.hpp"
#include "relax/zero_sum.hpp"

namespace relax {

Vec cumulative_losses(const OnlineGame& g, const std::vector<Move>& outcomes) {
  Vec L(finite_size(g.decisions), 0.0);
  for (const Move& x : outcomes)
    for (int f = 0; f < static_cast<int>(L.size()); ++f)
      L[f] += loss(g, Move::finite(f), x);
  return L;
}

MixedStrategy meta_algorithm_step(const OnlineGame& game,
                                  const Relaxation& relaxation,
                                  const History& history) {
  if (auto q = relaxation.closed_form(game, history)) return *q;
  if (!is_finite_set(game.outcomes) || !is_finite_set(game.decisions))
    throw NoClosedForm(
        "generic meta step requires finite F and X; relaxation '" +
        relaxation.id() + "' offers no closed form");

  const int nf = finite_size(game.decisions);
  const int nx = finite_size(game.outcomes);
  std::vector<Move> prefix = history.outcomes();
  std::vector<Vec> M(nf, Vec(nx, 0.0));
  prefix.push_back(Move{});
  for (int x = 0; x < nx; ++x) {
    prefix.back() = Move::finite(x);
    double rel = relaxation.value(game, prefix);
    for (int f = 0; f < nf; ++f)
      M[f][x] = loss(game, Move::finite(f), Move::finite(x)) + rel;
  }
  ZeroSumSolution sol = zero_sum_solve(M);
  return MixedStrategy::distribution(sol.q);
}

MixedStrategy RelaxationLearner::next(const OnlineGame& game,
                                      const History& history, RngStream&) {
  return meta_algorithm_step(game, *rel_, history);
}

double expected_loss(const OnlineGame& game, const MixedStrategy& q,
                     const Move& x) {
  if (q.kind == MixedStrategy::Kind::distribution) {
    double s = 0.0;
    for (int f = 0; f < static_cast<int>(q.weights.size()); ++f)
      s += q.weights[f] * loss(game, Move::finite(f), x);
    return s;
  }
  return loss(game, q.move, x);
}

Move sample_move(const OnlineGame& game, const MixedStrategy& q,
                 RngStream& rng) {
  if (q.kind != MixedStrategy::Kind::distribution) return q.move;
  double u = rng.uniform();
  double acc = 0.0;
  int last = static_cast<int>(q.weights.size()) - 1;
  for (int f = 0; f <= last; ++f) {
    acc += q.weights[f];
    if (u <= acc) return Move::finite(f);
  }
  return Move::finite(last);
}

void play_rounds(const OnlineGame& game, Learner& learner,
                 AdversaryProcess& adversary, History& history, int rounds,
                 RngStream& learner_rng, RngStream& adversary_rng) {
  for (int r = 0; r < rounds; ++r) {
    MixedStrategy q = learner.next(game, history, learner_rng);
    if (q.kind != MixedStrategy::Kind::distribution &&
        !in_set(game.decisions, q.move))
      throw LearnerOutOfDomain("learner move outside the decision set");
    Move x = adversary.next(game, history, adversary_rng);
    if (!in_set(game.outcomes, x))
      throw AdversaryOutOfDomain("adversary outcome outside the outcome set");

    Round round;
    round.expected_loss = expected_loss(game, q, x);
    round.played = sample_move(game, q, learner_rng);
    round.realized_loss = loss(game, round.played, x);
    round.strategy = std::move(q);
    round.outcome = std::move(x);
    history.append(std::move(round));
  }
}

RegretReport run_game(const OnlineGame& game, Learner& learner,
                      AdversaryProcess& adversary, uint64_t seed) {
  learner.reset();
  adversary.reset();
  History history(&game);
  RngStream learner_rng(seed, 1);
  RngStream adversary_rng(seed, 2);
  play_rounds(game, learner, adversary, history, game.horizon, learner_rng,
              adversary_rng);
  RegretReport report = regret_of(history, game);
  report.bound = learner.initial_bound(game);
  return report;
}

double comparator_loss(const OnlineGame& game, const History& history) {
  const LossModel& lm = game.loss_model;
  if (is_finite_set(game.decisions)) {
    const Vec& L = history.cumulative();
    return *std::min_element(L.begin(), L.end());
  }
  const NormBall& ball = ball_of(game.decisions);
  if (lm.kind == LossModel::Kind::linear)
    return -ball.radius * norm_of(history.prefix_sum(), dual_of(ball.norm));
  if (lm.kind == LossModel::Kind::convex_callback) {
    std::vector<Move> xs = history.outcomes();
    Vec f = convex_erm(game, xs, ball);
    double s = 0.0;
    for (const Move& x : xs) s += lm.eval(f, element_param(game.outcomes, x));
    return s;
  }
  if (lm.kind == LossModel::Kind::absolute) {
    // 1-D decision interval: the ERM of Σ|f − y_i| is a median of the y's.
    std::vector<double> ys;
    for (const Move& x : history.outcomes())
      ys.push_back(element_param(game.outcomes, x)[0]);
    std::sort(ys.begin(), ys.end());
    double med = std::clamp(ys[(ys.size() - 1) / 2], -ball.radius, ball.radius);
    double s = 0.0;
    for (double y : ys) s += std::fabs(med - y);
    return s;
  }
  throw DomainError("no comparator rule for this loss/decision combination");
}

RegretReport regret_of(const History& history, const OnlineGame& game) {
  if (history.length() == 0) throw EmptyHistory("cannot score an empty history");
  RegretReport report;
  report.horizon = history.length();
  report.loss_lo = game.loss_model.lo;
  report.loss_hi = game.loss_model.hi;
  report.per_round_loss.reserve(history.length());
  for (const Round& r : history.rounds())
    report.per_round_loss.push_back(
        r.strategy.kind == MixedStrategy::Kind::distribution ? r.expected_loss
                                                             : r.realized_loss);
  report.comparator_loss = comparator_loss(game, history);
  report.regret = report.total_loss() - report.comparator_loss;
  return report;
}

}  // namespace relax
