#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <vector>

#include "relax/relaxation.hpp"
#include "relax/types.hpp"

namespace relax {

struct BlockSchedule {
  std::vector<int> blocks;
  int consumed = 0;
};

// Doubling blocks (1, 2, 4, …) with the last block truncated to end at T.
BlockSchedule doubling_schedule(int T);

// A restricted comparator class for one block: a finite subset, or a ball
// around the block-start ERM, or a general membership predicate.
struct LocalizedClass {
  std::vector<int> subset;  // finite decision sets: surviving indices
  Vec anchor;               // ball decision sets: block-start ERM f̂_t
  double radius = std::numeric_limits<double>::infinity();
  double block_bound = 0.0;  // outcome-free Rel_k(F_loc) upper bound
  std::function<bool(const Vec&)> predicate;
};

using Localizer =
    std::function<LocalizedClass(const OnlineGame&, const History&, int k)>;

// Builds the learner that plays one block of length k on the localized class.
using BlockLearnerFactory = std::function<std::unique_ptr<Learner>(
    const OnlineGame&, const History&, const LocalizedClass&, int k)>;

// Subdivision of the remaining τ rounds, Block({x_1..t}, τ).
using BlockFn =
    std::function<std::vector<int>(const OnlineGame&, const History&, int k)>;

// Alg. 2: per block, localize, then play k_i rounds of the block learner.
RegretReport localized_meta(const OnlineGame& game,
                            const BlockLearnerFactory& factory,
                            const Localizer& localizer,
                            const BlockSchedule& schedule,
                            AdversaryProcess& adversary, uint64_t seed);

struct AdaptiveDiagnostics {
  bool g_monotone_ok = true;   // accepted re-blockings never increased G
  int reblockings_accepted = 0;
  std::vector<int> realized_blocks;
};

// Alg. 3: doubling epochs; at each block boundary ask block_fn for a new
// subdivision of the rest of the epoch and accept it iff its guaranteed value
// improves on the committed one.
RegretReport adaptive_localized_meta(const OnlineGame& game,
                                     const BlockLearnerFactory& factory,
                                     const Localizer& localizer,
                                     const BlockFn& block_fn,
                                     AdversaryProcess& adversary, uint64_t seed,
                                     AdaptiveDiagnostics* diag = nullptr);

// ---------------------------------------------------------------------------
// Blocking strategies (string ids: "whole-remainder", "adaptive-gd",
// "hedge-gap"; "doubling" is a schedule, not a BlockFn).
// ---------------------------------------------------------------------------

std::vector<int> whole_remainder_block(const OnlineGame&, const History&, int k);

// (k) if √k > σ_{1:t}, else unit blocks.
std::vector<int> adaptive_gd_block(const OnlineGame& game,
                                   const History& history, int k);

// (j, k−j) with j = floor(leader gap), clamped to [1, k].
std::vector<int> hedge_blocking(const OnlineGame& game, const History& history,
                                int k);

BlockFn make_block_fn(const std::string& id);

// ---------------------------------------------------------------------------
// Localizers.
// ---------------------------------------------------------------------------

// F_loc = F; block_bound = bound_fn(k).
Localizer trivial_localizer(std::function<double(int)> bound_fn);

// Experts within margin k of the leader; bound 2√(2k log|F_loc|).
LocalizedClass hedge_localizer(const OnlineGame& game, const History& history,
                               int k);

// Ball of radius min(R, 1/(λt)) around the ERM; bound k·radius.
Localizer strongly_convex_localizer(double lambda);

// Ball of radius 2·min{1, k/σ_{1:t}} around the ERM; bound ρ√(Ck).
Localizer adaptive_gd_localizer(double C = 2.0);

// Membership predicate Σℓ(f,x_i) − Σℓ(f̂_t,x_i) ≤ k‖f − f̂_t‖ (data norm).
LocalizedClass data_norm_localizer(const OnlineGame& game,
                                   const History& history, int k);

// Declared strong-convexity mass σ_{1:t} accumulated over a history.
double curvature_sum(const OnlineGame& game, const History& history);

// ---------------------------------------------------------------------------
// Block learners.
// ---------------------------------------------------------------------------

// Exponential weights restarted on the block over a finite subset of experts.
class SubsetExpWeightsLearner : public Learner {
 public:
  SubsetExpWeightsLearner(std::vector<int> subset, int block_start, int k)
      : subset_(std::move(subset)), start_(block_start), k_(k) {}
  MixedStrategy next(const OnlineGame& game, const History& history,
                     RngStream& rng) override;

 private:
  std::vector<int> subset_;
  int start_, k_;
};

// Plays the anchor (block-start ERM) every round: follow-the-leader.
class AnchorLearner : public Learner {
 public:
  explicit AnchorLearner(Vec anchor) : anchor_(std::move(anchor)) {}
  MixedStrategy next(const OnlineGame&, const History&, RngStream&) override {
    return MixedStrategy::point_move(Move::vec(anchor_));
  }

 private:
  Vec anchor_;
};

// Localized mirror descent anchored at the block-start ERM, driven by the
// gradients observed within the block:
//   f_{t+i} = f̂_t − min{1, k/σ_{1:t}} · ∇‖ỹ_{i−1}‖² / (2√(‖ỹ_{i−1}‖² + C(k−i+1)))
class AnchoredMdLearner : public Learner {
 public:
  AnchoredMdLearner(Vec anchor, double coeff, double C, int block_start, int k)
      : anchor_(std::move(anchor)), coeff_(coeff), C_(C), start_(block_start), k_(k) {}
  MixedStrategy next(const OnlineGame& game, const History& history,
                     RngStream& rng) override;

 private:
  Vec anchor_;
  double coeff_, C_;
  int start_, k_;
};

// Gradient of the round's loss at the played decision.
Vec observed_gradient(const OnlineGame& game, const Round& round);

// Standard factories.
BlockLearnerFactory subset_expweights_factory();
BlockLearnerFactory anchor_factory();
BlockLearnerFactory anchored_md_factory(double C = 2.0);

}  // namespace relax
