#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "relax/oracles.hpp"
#include "relax/relaxation.hpp"
#include "relax/types.hpp"

namespace relax {

// Closed-form regret bounds by stable id:
//   expweights       2√(2T log F)          (T, F)
//   mirror-l2        √(2CT)                (T, C; C defaults to 2)
//   strongly-convex  (1 + log T)/λ         (T, lambda)
//   doubling         (T^p − 2^−p)/(1−2^−p) (T, p)
//   adaptive-hedge   4·min{τ, √(τ log F)}  (tau, F)
//   fpl-l2           4√(2T)                (T)
double evaluate_bound(const std::string& bound_id,
                      const std::map<std::string, double>& params);

// ---------------------------------------------------------------------------
// Adversaries.
// ---------------------------------------------------------------------------

struct AdversaryOptions {
  std::map<std::string, double> scalars;  // period, tau, k, index, ...
  Vec weights;   // iid: distribution over a finite outcome set
  Vec point;     // constant: ball outcome
  Vec sigmas;    // variation_constrained: per-round budgets
  std::shared_ptr<const Relaxation> relaxation;  // greedy_worst_case target
};

// ids: iid, constant, shifting_leader, greedy_worst_case,
// variation_constrained, leader_margin.
std::unique_ptr<AdversaryProcess> make_adversary(const std::string& id,
                                                 AdversaryOptions options);

// Two-column experts game for single-best-expert scenarios: outcome 0 gives
// the first expert loss 0 and everyone else 1; outcome 1 gives everyone ½.
OnlineGame make_leader_margin_game(int num_experts, int T);

// ---------------------------------------------------------------------------
// Learner registry.
// ---------------------------------------------------------------------------

// ids: expweights, mirror-l2, seq-rademacher, exact-value, fpl-l1-linf,
// fpl-l2-l2.  Throws ConfigError("learner.id") for unknown ids.
std::unique_ptr<Learner> make_learner(const std::string& id,
                                      const std::map<std::string, double>& params,
                                      const OnlineGame& game);

// ---------------------------------------------------------------------------
// Experiment configs (JSON, versioned, unknown fields rejected).
// ---------------------------------------------------------------------------

OnlineGame load_game_json(const std::string& text);

struct ExperimentAssertion {
  std::string bound_id;
  std::map<std::string, double> params;
};

struct ExperimentConfig {
  OnlineGame game;
  std::string learner_id;
  std::map<std::string, double> learner_params;
  std::string adversary_id;
  AdversaryOptions adversary_options;
  int seed_count = 1;
  uint64_t seed_base = 1;
  std::string out_dir;
  std::string format = "json";  // csv|json
  std::vector<ExperimentAssertion> assertions;
};

ExperimentConfig parse_experiment_config(const std::string& text);

struct BoundVerdict {
  std::string bound_id;
  double bound = 0.0;
  double statistic = 0.0;  // max regret (1 seed) or mean + 3·stderr
  bool passed = false;
};

struct ExperimentResult {
  std::vector<RegretReport> reports;
  double mean_regret = 0.0, stderr_regret = 0.0, max_regret = 0.0;
  std::vector<BoundVerdict> verdicts;
  bool all_passed = true;

  std::string aggregate_json() const;
};

ExperimentResult run_experiment(const ExperimentConfig& config);

// Writes per-seed reports and the aggregate into config.out_dir (no-op when
// the directory is empty).
void write_experiment_outputs(const ExperimentConfig& config,
                              const ExperimentResult& result);

// ---------------------------------------------------------------------------
// Battery + admissibility sweep.
// ---------------------------------------------------------------------------

struct BatteryEntry {
  std::string name;
  OnlineGame game;
  std::vector<std::string> relaxations;  // ids to check on this game
};

// 12 finite table games (|F| ≤ 3, |X| ≤ 3, T ≤ 5).
std::vector<BatteryEntry> finite_battery();

// Linear games on balls (finite outcome payloads) for the closed-form path.
std::vector<BatteryEntry> ball_battery();

struct SweepEntry {
  std::string game;
  std::string relaxation;
  double worst_violation = 0.0;
  bool ok = false;
};

struct SweepResult {
  std::vector<SweepEntry> entries;
  bool all_ok = true;

  std::string to_json() const;
};

// check_admissibility across both batteries (plus the supervised checker on
// two small function classes); fails on any violation > tolerance.
SweepResult admissibility_sweep(double tolerance = 1e-6);

// Sweep over a user-supplied battery only.
SweepResult admissibility_sweep_on(const std::vector<BatteryEntry>& battery,
                                   double tolerance = 1e-6);

// JSON array of {"name": ..., "game": {...}, "relaxations": [...]}.
std::vector<BatteryEntry> load_battery_json(const std::string& text);

}  // namespace relax
