#pragma once

#include <map>
#include <string>
#include <vector>

#include "relax/relaxation.hpp"
#include "relax/types.hpp"

namespace relax {

// X-valued complete binary tree of depth d: node values are indexed by the
// sign-prefix ε_1..ε_{s-1} encoded as (level s-1, bit path).
struct BinaryTree {
  int depth = 0;
  // nodes[level][path] with path bits b_i = (ε_{i+1}+1)/2, level 0 = root.
  std::vector<std::vector<Move>> nodes;

  const Move& at(int level, const std::vector<int>& signs) const {
    int path = 0;
    for (int i = 0; i < level; ++i) path = (path << 1) | (signs[i] > 0 ? 1 : 0);
    return nodes[level][path];
  }
};

// Conditional game values V_T(F | x_1..t) keyed by outcome-index prefix.
struct ValueTable {
  std::map<std::vector<int>, double> values;
  std::map<std::vector<int>, Vec> strategies;  // minimax q at each inner node

  double root() const { return values.at({}); }
};

// Backward-induction solve of the full finite game (cap on |X|^T states).
ValueTable exact_value(const OnlineGame& game, long long state_cap = 1000000);

// Conditional sequential Rademacher complexity: sup over X-valued trees of
// E_ε sup_f [ factor · Σ_s ε_s ℓ(f, x_s(ε)) − L_t(f) ], exact via DP over
// per-f accumulators.  Depth T−t capped at 12.
double seq_rademacher(const OnlineGame& game, const std::vector<Move>& prefix,
                      double factor, int depth_cap = 12);

// Same DP, additionally materializing an optimal tree (desk scale).
BinaryTree seq_rademacher_tree(const OnlineGame& game,
                               const std::vector<Move>& prefix, double factor,
                               int depth_cap = 12);

struct PrefixSampler {
  bool exhaustive = true;   // exhaustive when |X|^T ≤ limit, else uniform draws
  long long exhaustive_limit = 4096;
  int sample_count = 1000;
  uint64_t seed = 0;
};

struct AdmissibilityReport {
  long long prefixes_checked = 0;
  double worst_violation = 0.0;
  std::vector<int> violating_prefix;
  bool terminal_checked = false;

  std::string to_json() const;
};

// Verifies the recursive admissibility inequality (with the relaxation's own
// strategy as witness) and the terminal condition over sampled prefixes.
AdmissibilityReport check_admissibility(const OnlineGame& game,
                                        const Relaxation& relaxation,
                                        const PrefixSampler& sampler,
                                        double tolerance);

// The exact conditional value as a (tight, admissible) relaxation.
class ExactValueRelaxation : public Relaxation {
 public:
  explicit ExactValueRelaxation(ValueTable table) : table_(std::move(table)) {}
  std::string id() const override { return "exact-value"; }
  double value(const OnlineGame& game,
               const std::vector<Move>& outcomes) const override;
  std::optional<MixedStrategy> closed_form(const OnlineGame& game,
                                           const History& history) const override;

 private:
  ValueTable table_;
};

// Conditional sequential Rademacher complexity as a relaxation (Prop. 2).
class SeqRademacherRelaxation : public Relaxation {
 public:
  explicit SeqRademacherRelaxation(double factor = 2.0) : factor_(factor) {}
  std::string id() const override { return "seq-rademacher"; }
  double value(const OnlineGame& game,
               const std::vector<Move>& outcomes) const override {
    return seq_rademacher(game, outcomes, factor_);
  }

 private:
  double factor_;
};

}  // namespace relax
