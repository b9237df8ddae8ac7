#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "relax/rng.hpp"
#include "relax/types.hpp"

namespace relax {

// Finite set of static experts: each expert is a fixed prediction sequence
// f ∈ [−1,1]^T.
struct StaticExpertClass {
  std::vector<Vec> experts;
  double lipschitz_L = 1.0;

  int horizon() const { return experts.empty() ? 0 : static_cast<int>(experts[0].size()); }
};

// Scalar loss with a (sub)derivative in the first argument.
struct ScalarLoss {
  std::function<double(double yhat, double y)> eval;
  std::function<double(double yhat, double y)> deriv;

  // |ŷ − y|, subgradient 0 at the kink.
  static ScalarLoss absolute();
};

// E sup_f Σ_t ε_t f[t]: exact enumeration when T ≤ 12, Monte Carlo otherwise.
double static_experts_rademacher(const StaticExpertClass& cls, int sign_samples,
                                 uint64_t seed);

// Minimax forecaster for absolute loss and ±1 outcomes:
//   q_t = ½ E_ε[ sup_f(Σ_{s>t} ε_s f[s] − L_{t−1}(f) + f[t])
//              − sup_f(Σ_{s>t} ε_s f[s] − L_{t−1}(f) − f[t]) ],  clamped to [−1,1].
// Exact ε-enumeration when T−t ≤ 12, else sign_samples draws.
double minimax_absolute_forecaster(const StaticExpertClass& cls,
                                   const std::vector<int>& labels,
                                   int sign_samples, uint64_t seed);

// Linearized variant: past rounds enter through loss gradients only,
//   ŷ_t = E_ε[ sup_f{Σ_{s>t} ε_s f[s] − (1/2L) Σ_{s<t} ∂_s f[s] + ½f[t]}
//            − sup_f{ …                                       − ½f[t]} ].
double linearized_forecaster(const StaticExpertClass& cls,
                             const Vec& gradient_history, int t,
                             int sign_samples, uint64_t seed);

// Randomized variant, one fresh sign draw per round:
//   ŷ_t(ε) = inf_f{−Σ_{s>t} ε_s f[s] + (1/2L) Σ_{s<t} ℓ(f[s],y_s) + ½f[t]}
//          − inf_f{ …                                            − ½f[t]}.
double randomized_forecaster(const StaticExpertClass& cls,
                             const ScalarLoss& loss, const Vec& labels, int t,
                             const std::vector<int>& signs);

// Entry prediction under a trace-norm budget: positions x_t are one-hot
// matrices, comparators range over {‖F‖_Σ ≤ B}, loss is ρ-Lipschitz.
struct MatrixGame {
  int m = 0, n = 0;
  double B = 1.0;
  double rho = 1.0;
  std::vector<std::array<int, 2>> entries;  // (row, col) per round
  Vec values;                               // y_t

  int horizon() const { return static_cast<int>(entries.size()); }
};

// {"m":…, "n":…, "B":…, "rho":…, "entries":[[r,c,y],…]}
MatrixGame load_matrix_game_json(const std::string& text);

// Largest singular value by power iteration on MᵀM (deterministic start,
// 1e-12 threshold, 10k iteration cap with restart on stall).
double spectral_norm(const Eigen::MatrixXd& M);

// Euclidean projection onto {‖·‖_Σ ≤ B}: SVD, singular values onto the
// ℓ1 ball of radius B, reconstruct.
Eigen::MatrixXd trace_ball_project(const Eigen::MatrixXd& M, double B);

// E‖Σ_t ε_t x_t‖_σ over the game's one-hot entry matrices.
double matrix_rademacher_spectral(const MatrixGame& game, int sign_samples,
                                  uint64_t seed);

// ŷ_t = B·E_ε[ ‖Σ_{s>t} ε_s x_s − (1/2ρ) Σ_{s<t} ∂_s x_s + ½x_t‖_σ − ‖… − ½x_t‖_σ ].
double matrix_completion_linearized(const MatrixGame& game,
                                    const Vec& gradient_history, int t,
                                    int sign_samples, uint64_t seed);

// ŷ_t(ε) = inf_{‖F‖_Σ≤B}{−Σ_{s>t} ε_s⟨F,x_s⟩ + (1/2ρ) Σ_{s<t} ℓ(⟨F,x_s⟩,y_s) + ½⟨F,x_t⟩}
//        − inf_{‖F‖_Σ≤B}{ …                                               − ½⟨F,x_t⟩}.
// Both solves by projected subgradient (2000 iterations, step B/(ρ√i),
// best iterate).
double matrix_completion_randomized(const MatrixGame& game,
                                    const ScalarLoss& loss, int t,
                                    const std::vector<int>& signs);

// inf_{‖F‖_Σ≤B} Σ_t ℓ(F[x_t], y_t), for regret accounting.
double matrix_comparator_loss(const MatrixGame& game, const ScalarLoss& loss);

struct MatrixRunResult {
  Vec predictions;
  Vec losses;
  double regret = 0.0;

  // t,r,c,y,yhat,loss rows.
  std::string to_csv(const MatrixGame& game) const;
};

enum class MatrixVariant { linearized, randomized };

MatrixRunResult run_matrix_completion(const MatrixGame& game,
                                      MatrixVariant variant,
                                      const ScalarLoss& loss, int sign_samples,
                                      uint64_t seed);

}  // namespace relax
