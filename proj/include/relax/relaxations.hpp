#pragma once

#include <functional>
#include <memory>
#include <string>

#include "relax/relaxation.hpp"
#include "relax/types.hpp"

namespace relax {

// ---------------------------------------------------------------------------
// Exponential Weights: Rel = inf_{λ>0} { (1/λ) log Σ_f e^{−λL_t(f)} + 2λ(T−t) }.
// ---------------------------------------------------------------------------

struct ExpWeightsState {
  Vec cumulative_losses;   // L_t(f)
  int horizon_remaining = 0;
  double lambda_star = 1.0;
  double loss_lo = 0.0, loss_hi = 1.0;
};

// Optimizes λ* (golden section over log λ ∈ [−20, 5]) and returns the value.
double expweights_value(ExpWeightsState& state);
MixedStrategy expweights_strategy(const ExpWeightsState& state);

class ExpWeightsRelaxation : public Relaxation {
 public:
  std::string id() const override { return "expweights"; }
  double value(const OnlineGame& game,
               const std::vector<Move>& outcomes) const override;
  std::optional<MixedStrategy> closed_form(const OnlineGame& game,
                                           const History& history) const override;
};

// ---------------------------------------------------------------------------
// Mirror Descent (Euclidean): Rel(x_1..t) = √(‖x̃_{t−1}‖² + ⟨∇‖x̃_{t−1}‖², x_t⟩
// + C(T−t+1)), strategy f_t = −∇‖x̃_{t−1}‖² / (2√(‖x̃_{t−1}‖² + C(T−t+1))).
// ---------------------------------------------------------------------------

struct MirrorDescentState {
  Vec prefix_sum;              // x̃_{t−1}
  double C = 2.0;              // (2,C)-smoothness constant; 2 for l2
  int horizon_remaining = 0;   // T − t + 1 convention is handled per call
  bool clamped = false;        // NegativeDiscriminant warning flag
};

Vec mirror_descent_update(const MirrorDescentState& state);
double mirror_descent_value(MirrorDescentState& state, const Vec& next_outcome);

class MirrorDescentRelaxation : public Relaxation {
 public:
  explicit MirrorDescentRelaxation(double C = 2.0) : C_(C) {}
  std::string id() const override { return "mirror-l2"; }
  double value(const OnlineGame& game,
               const std::vector<Move>& outcomes) const override;
  std::optional<MixedStrategy> closed_form(const OnlineGame& game,
                                           const History& history) const override;
  double initial_bound(const OnlineGame& game) const override;

 private:
  double C_;
};

// ---------------------------------------------------------------------------
// Strongly convex block relaxation: −inf_f Σ x_i(f) + (T−t)·radius of the
// smallest ball containing the (localized) decision set.
// ---------------------------------------------------------------------------

double strongly_convex_value(const OnlineGame& game,
                             const std::vector<Move>& outcomes,
                             const std::function<double()>& diameter_fn);

class StronglyConvexRelaxation : public Relaxation {
 public:
  StronglyConvexRelaxation(NormBall domain, Vec anchor, double radius)
      : domain_(domain), anchor_(std::move(anchor)), radius_(radius) {}
  std::string id() const override { return "strongly-convex"; }
  double value(const OnlineGame& game,
               const std::vector<Move>& outcomes) const override;
  // Plays the anchor (block-start ERM): follow-the-leader within the block.
  std::optional<MixedStrategy> closed_form(const OnlineGame&,
                                           const History&) const override {
    return MixedStrategy::point_move(Move::vec(anchor_));
  }
  double initial_bound(const OnlineGame& game) const override;

 private:
  NormBall domain_;
  Vec anchor_;
  double radius_;
};

// ---------------------------------------------------------------------------
// Constrained-adversary Mirror Descent (variation budgets σ_s).
// ---------------------------------------------------------------------------

struct ConstrainedMdResult {
  Vec decision;
  double step_size;
};

// t ≥ 2 step size (1+1/(t−1))² / (2√(‖x̃_{t−1}‖² + C Σ_{s≥t} σ_s²)); t=1 plays 0.
ConstrainedMdResult constrained_md_step(const MirrorDescentState& state, int t,
                                        const Vec& sigmas_from_t);

// Relaxation value (2√2 R/√λ)·√(‖x̃_t‖² + C Σ_{s>t} σ_s²), R = λ = 1 default.
double constrained_md_value(const Vec& prefix_sum, double C,
                            const Vec& sigmas_after_t, double R = 1.0,
                            double lambda = 1.0);

class ConstrainedMdLearner : public Learner {
 public:
  ConstrainedMdLearner(Vec sigmas, double C = 2.0)
      : sigmas_(std::move(sigmas)), C_(C) {}
  MixedStrategy next(const OnlineGame& game, const History& history,
                     RngStream& rng) override;
  double initial_bound(const OnlineGame& game) const override;

 private:
  Vec sigmas_;
  double C_;
};

// ---------------------------------------------------------------------------
// Universal Mirror Descent with user-supplied Ψ*.
// ---------------------------------------------------------------------------

struct UniversalPsi {
  std::function<double(const Vec&)> psi_star;
  std::function<Vec(const Vec&)> grad_psi_star;
  double p = 2.0;
  double C = 2.0;
};

struct UniversalMdResult {
  Vec decision;
  double relaxation_value;
};

UniversalMdResult universal_md_update(const UniversalPsi& psi,
                                      const Vec& prefix_sum,
                                      int horizon_remaining);

class UniversalMdLearner : public Learner {
 public:
  explicit UniversalMdLearner(UniversalPsi psi) : psi_(std::move(psi)) {}
  MixedStrategy next(const OnlineGame& game, const History& history,
                     RngStream& rng) override;
  double initial_bound(const OnlineGame& game) const override;

 private:
  UniversalPsi psi_;
};

// Registry of relaxations by stable string id.
std::shared_ptr<Relaxation> make_relaxation(const std::string& id);

}  // namespace relax
