#include "relax/localization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "relax/errors.hpp"
#include "relax/relaxations.hpp"
#include "relax/solvers.hpp"

namespace relax {

BlockSchedule doubling_schedule(int T) {
  BlockSchedule s;
  int placed = 0, k = 1;
  while (placed < T) {
    int block = std::min(k, T - placed);
    s.blocks.push_back(block);
    placed += block;
    k *= 2;
  }
  return s;
}

RegretReport localized_meta(const OnlineGame& game,
                            const BlockLearnerFactory& factory,
                            const Localizer& localizer,
                            const BlockSchedule& schedule,
                            AdversaryProcess& adversary, uint64_t seed) {
  adversary.reset();
  History history(&game);
  RngStream learner_rng(seed, 1);
  RngStream adversary_rng(seed, 2);
  std::vector<BlockBound> blocks;
  for (int k : schedule.blocks) {
    LocalizedClass loc = localizer(game, history, k);
    std::unique_ptr<Learner> learner = factory(game, history, loc, k);
    play_rounds(game, *learner, adversary, history, k, learner_rng,
                adversary_rng);
    blocks.push_back({k, loc.block_bound});
  }
  RegretReport report = regret_of(history, game);
  report.blocks = blocks;
  report.bound = 0.0;
  for (const BlockBound& b : blocks) report.bound += b.bound;
  return report;
}

RegretReport adaptive_localized_meta(const OnlineGame& game,
                                     const BlockLearnerFactory& factory,
                                     const Localizer& localizer,
                                     const BlockFn& block_fn,
                                     AdversaryProcess& adversary, uint64_t seed,
                                     AdaptiveDiagnostics* diag) {
  adversary.reset();
  History history(&game);
  RngStream learner_rng(seed, 1);
  RngStream adversary_rng(seed, 2);
  std::vector<BlockBound> blocks;

  auto bound_of = [&](const std::vector<int>& blocking) {
    // The localizer sees the same history for every entry, so repeated block
    // sizes (e.g. an all-unit subdivision) need only one evaluation each.
    double g = 0.0;
    int cached_k = -1;
    double cached_bound = 0.0;
    for (int k : blocking) {
      if (k != cached_k) {
        cached_k = k;
        cached_bound = localizer(game, history, k).block_bound;
      }
      g += cached_bound;
    }
    return g;
  };

  const int T = game.horizon;
  int played = 0;
  for (int epoch_len = 1; played < T; epoch_len *= 2) {
    // T not of the form 2^c − 1 truncates the last epoch (equivalently, the
    // epoch is padded with virtual zero-loss rounds that are never played).
    int len = std::min(epoch_len, T - played);
    std::vector<int> committed = {len};
    double G = bound_of(committed);
    int curr = 0;
    while (curr < len) {
      int rem = len - curr;
      std::vector<int> proposal = block_fn(game, history, rem);
      int total = std::accumulate(proposal.begin(), proposal.end(), 0);
      if (total != rem)
        throw InvalidBlocking("block_fn subdivision does not sum to the remainder");
      double Gp = bound_of(proposal);
      if (Gp < G - 1e-12) {
        committed = proposal;
        if (diag) {
          ++diag->reblockings_accepted;
          if (Gp > G + 1e-9) diag->g_monotone_ok = false;
        }
        G = Gp;
      }
      int k = committed.front();
      committed.erase(committed.begin());

      LocalizedClass loc = localizer(game, history, k);
      std::unique_ptr<Learner> learner = factory(game, history, loc, k);
      play_rounds(game, *learner, adversary, history, k, learner_rng,
                  adversary_rng);
      blocks.push_back({k, loc.block_bound});
      if (diag) diag->realized_blocks.push_back(k);
      curr += k;
      played += k;
      G = bound_of(committed);  // Alg. 3's G update for the remaining blocking
    }
  }

  RegretReport report = regret_of(history, game);
  report.blocks = blocks;
  report.bound = 0.0;
  for (const BlockBound& b : blocks) report.bound += b.bound;
  return report;
}

std::vector<int> whole_remainder_block(const OnlineGame&, const History&, int k) {
  return {k};
}

double curvature_sum(const OnlineGame& game, const History& history) {
  const auto& curv = game.loss_model.curvature;
  if (!curv) return 0.0;
  double s = 0.0;
  for (const Round& r : history.rounds())
    s += curv(element_param(game.outcomes, r.outcome));
  return s;
}

std::vector<int> adaptive_gd_block(const OnlineGame& game,
                                   const History& history, int k) {
  double sigma = curvature_sum(game, history);
  if (std::sqrt(static_cast<double>(k)) > sigma) return {k};
  return std::vector<int>(k, 1);
}

std::vector<int> hedge_blocking(const OnlineGame& game, const History& history,
                                int k) {
  const Vec& L = history.cumulative();
  double best = 1e300, second = 1e300;
  for (double v : L) {
    if (v < best) {
      second = best;
      best = v;
    } else {
      second = std::min(second, v);
    }
  }
  double gap = (L.size() < 2) ? 0.0 : second - best;
  int j = std::clamp(static_cast<int>(std::floor(gap)), 1, k);
  if (j >= k) return {k};
  return {j, k - j};
}

BlockFn make_block_fn(const std::string& id) {
  if (id == "whole-remainder") return whole_remainder_block;
  if (id == "adaptive-gd") return adaptive_gd_block;
  if (id == "hedge-gap") return hedge_blocking;
  throw ConfigError("unknown blocking id '" + id + "'");
}

Localizer trivial_localizer(std::function<double(int)> bound_fn) {
  return [bound_fn](const OnlineGame& game, const History&, int k) {
    LocalizedClass loc;
    if (is_finite_set(game.decisions)) {
      loc.subset.resize(finite_size(game.decisions));
      std::iota(loc.subset.begin(), loc.subset.end(), 0);
    }
    loc.block_bound = bound_fn ? bound_fn(k) : 0.0;
    return loc;
  };
}

LocalizedClass hedge_localizer(const OnlineGame& game, const History& history,
                               int k) {
  const Vec& L = history.cumulative();
  double best = L.empty() ? 0.0 : *std::min_element(L.begin(), L.end());
  LocalizedClass loc;
  for (int f = 0; f < static_cast<int>(L.size()); ++f)
    if (L[f] - best <= static_cast<double>(k)) loc.subset.push_back(f);
  if (loc.subset.empty())
    for (int f = 0; f < finite_size(game.decisions); ++f) loc.subset.push_back(f);
  loc.block_bound = 2.0 * std::sqrt(2.0 * k * std::log(static_cast<double>(
                                                loc.subset.size())));
  return loc;
}

Localizer strongly_convex_localizer(double lambda) {
  return [lambda](const OnlineGame& game, const History& history, int k) {
    const NormBall& ball = ball_of(game.decisions);
    LocalizedClass loc;
    int t = history.length();
    loc.anchor = (t == 0) ? Vec(ball.dim, 0.0)
                          : convex_erm(game, history.outcomes(), ball);
    loc.radius = (t == 0) ? ball.radius
                          : std::min(ball.radius, 1.0 / (lambda * t));
    loc.block_bound = static_cast<double>(k) * loc.radius;
    Vec anchor = loc.anchor;
    double r = loc.radius;
    loc.predicate = [anchor, r](const Vec& f) {
      Vec d(f.size());
      for (size_t i = 0; i < f.size(); ++i) d[i] = f[i] - anchor[i];
      return norm_l2(d) <= r + 1e-12;
    };
    return loc;
  };
}

Localizer adaptive_gd_localizer(double C) {
  return [C](const OnlineGame& game, const History& history, int k) {
    const NormBall& ball = ball_of(game.decisions);
    LocalizedClass loc;
    double sigma = curvature_sum(game, history);
    double shrink = (sigma <= 0.0)
                        ? 1.0
                        : std::min(1.0, static_cast<double>(k) / sigma);
    loc.anchor = history.length() == 0
                     ? Vec(ball.dim, 0.0)
                     : convex_erm(game, history.outcomes(), ball);
    loc.radius = 2.0 * shrink;
    loc.block_bound = 2.0 * shrink * std::sqrt(C * static_cast<double>(k));
    return loc;
  };
}

LocalizedClass data_norm_localizer(const OnlineGame& game,
                                   const History& history, int k) {
  const NormBall& ball = ball_of(game.decisions);
  LocalizedClass loc;
  loc.anchor = history.length() == 0 ? Vec(ball.dim, 0.0)
                                     : convex_erm(game, history.outcomes(), ball);
  const LossModel& lm = game.loss_model;
  std::vector<Move> xs = history.outcomes();
  double anchor_loss = 0.0;
  for (const Move& x : xs)
    anchor_loss += lm.eval(loc.anchor, element_param(game.outcomes, x));
  Vec anchor = loc.anchor;
  double kk = static_cast<double>(k);
  loc.predicate = [&game, xs, anchor, anchor_loss, kk](const Vec& f) {
    double fl = 0.0;
    for (const Move& x : xs)
      fl += game.loss_model.eval(f, element_param(game.outcomes, x));
    Vec d(f.size());
    for (size_t i = 0; i < f.size(); ++i) d[i] = f[i] - anchor[i];
    return fl - anchor_loss <= kk * norm_l2(d) + 1e-12;
  };
  loc.block_bound = 2.0 * std::sqrt(2.0 * kk);
  return loc;
}

MixedStrategy SubsetExpWeightsLearner::next(const OnlineGame& game,
                                            const History& history,
                                            RngStream&) {
  const auto& rounds = history.rounds();
  Vec L(subset_.size(), 0.0);
  for (int j = start_; j < static_cast<int>(rounds.size()); ++j)
    for (size_t s = 0; s < subset_.size(); ++s)
      L[s] += loss(game, Move::finite(subset_[s]), rounds[j].outcome);

  ExpWeightsState state;
  state.cumulative_losses = L;
  state.horizon_remaining = k_ - (history.length() - start_);
  expweights_value(state);
  MixedStrategy sub = expweights_strategy(state);

  Vec full(finite_size(game.decisions), 0.0);
  for (size_t s = 0; s < subset_.size(); ++s) full[subset_[s]] = sub.weights[s];
  return MixedStrategy::distribution(full);
}

Vec observed_gradient(const OnlineGame& game, const Round& round) {
  const LossModel& lm = game.loss_model;
  if (lm.kind == LossModel::Kind::linear)
    return element_param(game.outcomes, round.outcome);
  if (lm.kind == LossModel::Kind::convex_callback)
    return lm.grad(decision_vec(round.played),
                   element_param(game.outcomes, round.outcome));
  throw DomainError("no gradient rule for this loss model");
}

MixedStrategy AnchoredMdLearner::next(const OnlineGame& game,
                                      const History& history, RngStream&) {
  const auto& rounds = history.rounds();
  int i = history.length() - start_ + 1;  // 1-based index within the block
  Vec ytil(anchor_.size(), 0.0);
  for (int j = start_; j < static_cast<int>(rounds.size()); ++j) {
    Vec g = observed_gradient(game, rounds[j]);
    for (size_t c = 0; c < ytil.size(); ++c) ytil[c] += g[c];
  }
  double denom = 2.0 * std::sqrt(dot(ytil, ytil) +
                                 C_ * static_cast<double>(k_ - i + 1));
  Vec f(anchor_.size());
  for (size_t c = 0; c < f.size(); ++c)
    f[c] = anchor_[c] - coeff_ * 2.0 * ytil[c] / denom;
  f = project_ball(f, ball_of(game.decisions));
  return MixedStrategy::point_move(Move::vec(f));
}

BlockLearnerFactory subset_expweights_factory() {
  return [](const OnlineGame& game, const History& history,
            const LocalizedClass& loc, int k) -> std::unique_ptr<Learner> {
    std::vector<int> subset = loc.subset;
    if (subset.empty()) {
      subset.resize(finite_size(game.decisions));
      std::iota(subset.begin(), subset.end(), 0);
    }
    return std::make_unique<SubsetExpWeightsLearner>(subset, history.length(), k);
  };
}

BlockLearnerFactory anchor_factory() {
  return [](const OnlineGame&, const History&, const LocalizedClass& loc,
            int) -> std::unique_ptr<Learner> {
    return std::make_unique<AnchorLearner>(loc.anchor);
  };
}

BlockLearnerFactory anchored_md_factory(double C) {
  return [C](const OnlineGame& game, const History& history,
             const LocalizedClass& loc, int k) -> std::unique_ptr<Learner> {
    double coeff = loc.radius / 2.0;  // min{1, k/σ_{1:t}} (radius is 2·min{…})
    return std::make_unique<AnchoredMdLearner>(loc.anchor, coeff, C,
                                               history.length(), k);
  };
}

}  // namespace relax
