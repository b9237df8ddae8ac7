#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "relax/types.hpp"

namespace relax {

// Cumulative losses L_t(f) over a finite decision set for an outcome prefix.
Vec cumulative_losses(const OnlineGame& g, const std::vector<Move>& outcomes);

struct Round {
  MixedStrategy strategy;
  Move played;       // realized decision (sampled for distributions)
  Move outcome;
  double expected_loss = 0.0;  // exact E_{f~q} ℓ(f, x) when available
  double realized_loss = 0.0;
};

// Append-only record of play.  Maintains L_t(f) for finite decision sets and
// the outcome prefix sum x̃_t for vector outcomes.
class History {
 public:
  explicit History(const OnlineGame* game) : game_(game) {
    if (is_finite_set(game->decisions))
      cumulative_.assign(finite_size(game->decisions), 0.0);
    if (!is_finite_set(game->outcomes)) {
      prefix_sum_.assign(ball_of(game->outcomes).dim, 0.0);
    } else {
      const FiniteSet& fs = std::get<FiniteSet>(game->outcomes);
      if (!fs.points.empty()) prefix_sum_.assign(fs.points[0].size(), 0.0);
    }
  }

  const OnlineGame& game() const { return *game_; }
  int length() const { return static_cast<int>(rounds_.size()); }
  const std::vector<Round>& rounds() const { return rounds_; }
  const Vec& cumulative() const { return cumulative_; }
  const Vec& prefix_sum() const { return prefix_sum_; }

  std::vector<Move> outcomes() const {
    std::vector<Move> xs;
    xs.reserve(rounds_.size());
    for (const Round& r : rounds_) xs.push_back(r.outcome);
    return xs;
  }

  void append(Round r) {
    if (is_finite_set(game_->decisions)) {
      for (int f = 0; f < static_cast<int>(cumulative_.size()); ++f)
        cumulative_[f] += loss(*game_, Move::finite(f), r.outcome);
    }
    if (!prefix_sum_.empty()) {
      Vec xp = element_param(game_->outcomes, r.outcome);
      for (size_t i = 0; i < prefix_sum_.size(); ++i) prefix_sum_[i] += xp[i];
    }
    rounds_.push_back(std::move(r));
  }

  // Outcome-only round (used for hypothetical continuations and replays).
  void append_outcome(Move x) {
    Round r;
    r.outcome = std::move(x);
    append(std::move(r));
  }

 private:
  const OnlineGame* game_;
  std::vector<Round> rounds_;
  Vec cumulative_;
  Vec prefix_sum_;
};

struct BlockBound {
  int length = 0;
  double bound = 0.0;
};

struct RegretReport {
  Vec per_round_loss;
  double comparator_loss = 0.0;
  double regret = 0.0;
  double bound = std::nan("");   // Rel_T(F) at the empty prefix when known
  double loss_lo = 0.0, loss_hi = 1.0;
  int horizon = 0;
  std::vector<BlockBound> blocks;  // per-block bound decomposition, if blocked

  double total_loss() const {
    double s = 0.0;
    for (double v : per_round_loss) s += v;
    return s;
  }
  // Hoeffding–Azuma slack (b−a)√(T/2 · log(2/δ)).
  double high_prob_slack(double delta) const {
    return (loss_hi - loss_lo) *
           std::sqrt(static_cast<double>(horizon) / 2.0 * std::log(2.0 / delta));
  }

  std::string to_json() const;
  std::string to_csv() const;
};

RegretReport parse_report_json(const std::string& text);
RegretReport parse_report_csv(const std::string& text);

}  // namespace relax
