#pragma once

#include <functional>
#include <string>
#include <vector>

#include "relax/oracles.hpp"
#include "relax/relaxation.hpp"
#include "relax/rng.hpp"
#include "relax/types.hpp"

namespace relax {

struct PerturbationSpec {
  enum class Distribution { rademacher_cube, gaussian_iid, unit_sphere_uniform, user_symmetric };
  Distribution distribution = Distribution::rademacher_cube;
  double C = 6.0;
  // user_symmetric: caller-provided per-coordinate symmetric sampler.
  std::function<double(RngStream&)> user_draw;

  static PerturbationSpec rademacher() { return {Distribution::rademacher_cube, 6.0, {}}; }
  static PerturbationSpec gaussian() {
    // C = 6/E|x| = 6√(π/2) ≈ 7.52 for standard normal coordinates; ≤ 8.
    return {Distribution::gaussian_iid, 6.0 * std::sqrt(3.14159265358979323846 / 2.0), {}};
  }
  static PerturbationSpec sphere() { return {Distribution::unit_sphere_uniform, 4.0 * std::sqrt(2.0), {}}; }
};

struct PlayoutDraw {
  std::vector<Vec> future_outcomes;  // x_{t+1..T} ~ D
  std::vector<int> signs;            // ε_{t+1..T}
};

// Fresh draw for round t (seed lineage includes t via the derived stream).
PlayoutDraw make_draw(const PerturbationSpec& spec, int dim, int remaining,
                      RngStream& rng);

// Eq. (23): f_t = argmin_g sup_x { ℓ(g,x) + sup_f [CΣε_iℓ(f,x_i) − L_{t−1}(f) − ℓ(f,x)] }.
// Convex losses, ball F, finite X; inner sups by grid, outer by subgradient /
// ternary search over the ball (desk scale).
Vec generic_playout_step(const OnlineGame& game, const History& history,
                         const PerturbationSpec& spec, const PlayoutDraw& draw);

// ℓ1/ℓ∞: signed vertex −sign(w_j)·e_j, j = argmax |w_j| of
// w = Σ_{i<t} x_i − C Σ_{i>t} ε_i x_i; ties to the lowest index.
Vec fpl_l1_linf_step(const Vec& prefix_sum, const PlayoutDraw& draw, double C);

// ℓ2/ℓ2 with C = 4√2: f_t = (−x̃ + CΣx_i)/√(‖−x̃ + CΣε_ix_i‖² + 1)
// (signs enter the denominator draw only, per the stated closed form).
Vec fpl_l2_l2_step(const Vec& prefix_sum, const PlayoutDraw& draw,
                   double C = 4.0 * std::sqrt(2.0));

// Supervised Eq. (24): ŷ = argmin_{[−B,B]} max_{y∈Y} { ℓ(ŷ,y) + S(y) }.
double supervised_playout_step(
    const std::function<double(double yhat, double y)>& loss_fn,
    const std::function<double(double y)>& continuation, const Vec& label_set,
    double B);

// Random walk on the worst-case tree, Eq. (25): at the drawn sign path of the
// conditional-Rademacher optimal tree, q_t = argmin_q sup_x {E_q ℓ + Φ(x)}.
MixedStrategy treewalk_step(const OnlineGame& game, const History& history,
                            const std::vector<int>& signs);

// Learners wrapping the closed-form steps.
class FplL1LinfLearner : public Learner {
 public:
  explicit FplL1LinfLearner(PerturbationSpec spec = PerturbationSpec::rademacher())
      : spec_(std::move(spec)) {}
  MixedStrategy next(const OnlineGame& game, const History& history,
                     RngStream& rng) override;

 private:
  PerturbationSpec spec_;
};

class FplL2L2Learner : public Learner {
 public:
  explicit FplL2L2Learner(PerturbationSpec spec = PerturbationSpec::sphere())
      : spec_(std::move(spec)) {}
  MixedStrategy next(const OnlineGame& game, const History& history,
                     RngStream& rng) override;
  double initial_bound(const OnlineGame& game) const override {
    return 4.0 * std::sqrt(2.0 * game.horizon);
  }

 private:
  PerturbationSpec spec_;
};

}  // namespace relax
