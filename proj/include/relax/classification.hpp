#pragma once

#include <functional>
#include <string>
#include <vector>

#include "relax/types.hpp"

namespace relax {

struct FiniteFunctionClass {
  int domain_size = 0;
  std::vector<std::vector<int>> table;  // [function][instance] ∈ {−1,+1}
};

// {domain: [...], functions: [[±1,...],...]}
FiniteFunctionClass load_function_class_json(const std::string& text);

// Littlestone dimension by memoized exhaustive shattering-tree search.
// Caps: |domain| ≤ 16, |F| ≤ 4096.
int ldim(const FiniteFunctionClass& cls);
int ldim_subset(const FiniteFunctionClass& cls, const std::vector<int>& funcs);

// g(d,t) = Σ_{i=0}^d C(t,i), the maximum zero-cover size at Ldim d.
unsigned long long zero_cover_size(int d, int t);

// Observed instances x_1..x_t (indices into the domain) and labels y_1..y_s.
struct VersionSpace {
  const FiniteFunctionClass* cls = nullptr;
  std::vector<int> instances;
  std::vector<int> labels;  // ±1; may be one shorter than instances mid-round

  std::vector<int> surviving() const;  // functions consistent with all labels
};

// Rel at time t = |instances| = |labels|:
//   (1/λ) log Σ_{σ ∈ F|x^t} g(Ldim(F_t(σ)), T−t) e^{−λ L_t(σ)} + 2λ(T−t).
double littlestone_relax_value(const VersionSpace& vs, double lambda, int T);

struct BinaryPrediction {
  double mean = 0.0;          // q_t ∈ [−1,1]; P(+1) = (1+q)/2
  double prob_plus = 0.5;
};

// Exponential-weights style strategy (ratio of zero-cover weights); expects
// |labels| = |instances| − 1, the last instance being the current x_t.
BinaryPrediction littlestone_strategy_ew(const VersionSpace& vs, double lambda,
                                         int T);

// Alternative strategy: mean (1/2λ)·log of the e^{−λ(1∓σ_t)}-weighted ratio,
// clamped to [−1, 1].
BinaryPrediction littlestone_strategy_mean(const VersionSpace& vs, double lambda,
                                           int T);

// Generic Eq-(16)-style equalizer: q = ½[Rel(+1) − Rel(−1)], clamped.
double binary_optimal_mean(const std::function<double(int)>& rel_continuation);

// Fix λ for a run by grid search over {2^−10, …, 2^2} on the t=0 value.
double littlestone_pick_lambda(const FiniteFunctionClass& cls, int T);

// Worst violation of the supervised admissibility recursion + terminal
// condition over all instance/label sequences of length ≤ T (desk scale).
struct LittlestoneAdmissibilityReport {
  long long prefixes_checked = 0;
  double worst_violation = 0.0;
};
enum class LittlestoneStrategyKind { ew, mean };
LittlestoneAdmissibilityReport check_littlestone_admissibility(
    const FiniteFunctionClass& cls, int T, double lambda,
    LittlestoneStrategyKind kind);

}  // namespace relax
