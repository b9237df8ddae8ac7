#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "relax/history.hpp"
#include "relax/rng.hpp"
#include "relax/types.hpp"

namespace relax {

// A relaxation exposes the conditional value Rel_T(F | x_1..t) for any
// outcome prefix and, optionally, a closed-form strategy for the next round.
class Relaxation {
 public:
  virtual ~Relaxation() = default;
  virtual std::string id() const = 0;
  virtual double value(const OnlineGame& game,
                       const std::vector<Move>& outcomes) const = 0;
  virtual std::optional<MixedStrategy> closed_form(
      const OnlineGame& game, const History& history) const {
    return std::nullopt;
  }
  // Rel_T(F) at the empty prefix; the regret bound reported for a run.
  virtual double initial_bound(const OnlineGame& game) const {
    return value(game, {});
  }
};

// q_t = argmin over Δ(F) of sup over X of { E_{f~q} ℓ(f,x) + Rel(..., x) }.
// Delegates to the relaxation's closed form when available; otherwise requires
// finite F and X and solves the induced zero-sum game exactly.
MixedStrategy meta_algorithm_step(const OnlineGame& game,
                                  const Relaxation& relaxation,
                                  const History& history);

// Anything that can produce a move each round.
class Learner {
 public:
  virtual ~Learner() = default;
  virtual MixedStrategy next(const OnlineGame& game, const History& history,
                             RngStream& rng) = 0;
  virtual double initial_bound(const OnlineGame& game) const {
    return std::nan("");
  }
  virtual void reset() {}
};

// Plays a relaxation through meta_algorithm_step / its closed form.
class RelaxationLearner : public Learner {
 public:
  explicit RelaxationLearner(std::shared_ptr<const Relaxation> rel)
      : rel_(std::move(rel)) {}
  MixedStrategy next(const OnlineGame& game, const History& history,
                     RngStream& rng) override;
  double initial_bound(const OnlineGame& game) const override {
    return rel_->initial_bound(game);
  }
  const Relaxation& relaxation() const { return *rel_; }

 private:
  std::shared_ptr<const Relaxation> rel_;
};

class AdversaryProcess {
 public:
  virtual ~AdversaryProcess() = default;
  virtual std::string id() const = 0;
  virtual Move next(const OnlineGame& game, const History& history,
                    RngStream& rng) = 0;
  virtual void reset() {}
};

// Alg. 1 protocol loop: draw f_t ~ q_t, receive x_t, repeat for T rounds.
RegretReport run_game(const OnlineGame& game, Learner& learner,
                      AdversaryProcess& adversary, uint64_t seed);

// Plays T rounds into an existing history (used by blocked meta-algorithms).
void play_rounds(const OnlineGame& game, Learner& learner,
                 AdversaryProcess& adversary, History& history, int rounds,
                 RngStream& learner_rng, RngStream& adversary_rng);

// Regret accounting for a (possibly partial) history.
RegretReport regret_of(const History& history, const OnlineGame& game);

double comparator_loss(const OnlineGame& game, const History& history);

// Exact expected loss of a strategy against a fixed outcome, plus a sample.
double expected_loss(const OnlineGame& game, const MixedStrategy& q,
                     const Move& x);
Move sample_move(const OnlineGame& game, const MixedStrategy& q, RngStream& rng);

}  // namespace relax
