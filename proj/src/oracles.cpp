#include "relax/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "relax/errors.hpp"
#include "relax/zero_sum.hpp"

namespace relax {

namespace {

long long pow_ll(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (1LL << 62) / std::max(base, 1LL)) return 1LL << 62;
    r *= base;
  }
  return r;
}

double solve_node(const OnlineGame& game, ValueTable& table,
                  std::vector<int>& prefix, std::vector<Move>& moves) {
  auto it = table.values.find(prefix);
  if (it != table.values.end()) return it->second;

  const int nf = finite_size(game.decisions);
  const int nx = finite_size(game.outcomes);
  double value;
  if (static_cast<int>(prefix.size()) == game.horizon) {
    Vec L = cumulative_losses(game, moves);
    value = -*std::min_element(L.begin(), L.end());
  } else {
    std::vector<Vec> M(nf, Vec(nx, 0.0));
    for (int x = 0; x < nx; ++x) {
      prefix.push_back(x);
      moves.push_back(Move::finite(x));
      double child = solve_node(game, table, prefix, moves);
      moves.pop_back();
      prefix.pop_back();
      for (int f = 0; f < nf; ++f)
        M[f][x] = loss(game, Move::finite(f), Move::finite(x)) + child;
    }
    ZeroSumSolution sol = zero_sum_solve(M);
    value = sol.value;
    table.strategies[prefix] = sol.q;
  }
  table.values[prefix] = value;
  return value;
}

}  // namespace

ValueTable exact_value(const OnlineGame& game, long long state_cap) {
  if (!is_finite_set(game.decisions) || !is_finite_set(game.outcomes))
    throw TooLarge("exact_value requires finite F and X");
  if (pow_ll(finite_size(game.outcomes), game.horizon) > state_cap)
    throw TooLarge("|X|^T exceeds the configured state cap");
  ValueTable table;
  std::vector<int> prefix;
  std::vector<Move> moves;
  solve_node(game, table, prefix, moves);
  return table;
}

namespace {

// DP over per-f accumulators a_f = factor·Σ ε_s ℓ(f, x_s(ε)): at each node
// choose x maximizing the average of the two sign-children; at the leaves the
// value is max_f (a_f − L_t(f)).
struct RadDp {
  const OnlineGame* game;
  double factor;
  int nf, nx;
  Vec neg_L;  // −L_t(f) from the prefix

  double leaf(const Vec& acc) const {
    double best = -1e300;
    for (int f = 0; f < nf; ++f) best = std::max(best, acc[f] + neg_L[f]);
    return best;
  }

  double value(int depth, Vec& acc, int* best_x = nullptr) const {
    if (depth == 0) return leaf(acc);
    double best = -1e300;
    for (int x = 0; x < nx; ++x) {
      double avg = 0.0;
      for (int sign : {+1, -1}) {
        for (int f = 0; f < nf; ++f)
          acc[f] += sign * factor * loss(*game, Move::finite(f), Move::finite(x));
        avg += 0.5 * value(depth - 1, acc);
        for (int f = 0; f < nf; ++f)
          acc[f] -= sign * factor * loss(*game, Move::finite(f), Move::finite(x));
      }
      if (avg > best + 1e-15) {
        best = avg;
        if (best_x) *best_x = x;
      }
    }
    return best;
  }
};

RadDp make_rad_dp(const OnlineGame& game, const std::vector<Move>& prefix,
                  double factor, int depth_cap) {
  if (!is_finite_set(game.decisions) || !is_finite_set(game.outcomes))
    throw TooLarge("seq_rademacher requires finite F and X");
  int depth = game.horizon - static_cast<int>(prefix.size());
  if (depth > depth_cap) throw TooDeep("suffix depth exceeds the cap");
  RadDp dp;
  dp.game = &game;
  dp.factor = factor;
  dp.nf = finite_size(game.decisions);
  dp.nx = finite_size(game.outcomes);
  Vec L = cumulative_losses(game, prefix);
  dp.neg_L.resize(dp.nf);
  for (int f = 0; f < dp.nf; ++f) dp.neg_L[f] = -L[f];
  return dp;
}

void fill_tree(const RadDp& dp, int depth, Vec& acc, BinaryTree& tree,
               int level, int path) {
  if (depth == 0) return;
  int best_x = 0;
  dp.value(depth, acc, &best_x);
  tree.nodes[level][path] = Move::finite(best_x);
  for (int sign : {+1, -1}) {
    for (int f = 0; f < dp.nf; ++f)
      acc[f] += sign * dp.factor * loss(*dp.game, Move::finite(f), Move::finite(best_x));
    fill_tree(dp, depth - 1, acc, tree, level + 1,
              (path << 1) | (sign > 0 ? 1 : 0));
    for (int f = 0; f < dp.nf; ++f)
      acc[f] -= sign * dp.factor * loss(*dp.game, Move::finite(f), Move::finite(best_x));
  }
}

}  // namespace

double seq_rademacher(const OnlineGame& game, const std::vector<Move>& prefix,
                      double factor, int depth_cap) {
  RadDp dp = make_rad_dp(game, prefix, factor, depth_cap);
  int depth = game.horizon - static_cast<int>(prefix.size());
  Vec acc(dp.nf, 0.0);
  return dp.value(depth, acc);
}

BinaryTree seq_rademacher_tree(const OnlineGame& game,
                               const std::vector<Move>& prefix, double factor,
                               int depth_cap) {
  RadDp dp = make_rad_dp(game, prefix, factor, depth_cap);
  int depth = game.horizon - static_cast<int>(prefix.size());
  BinaryTree tree;
  tree.depth = depth;
  tree.nodes.resize(depth);
  for (int level = 0; level < depth; ++level)
    tree.nodes[level].resize(1 << level);
  Vec acc(dp.nf, 0.0);
  fill_tree(dp, depth, acc, tree, 0, 0);
  return tree;
}

std::string AdmissibilityReport::to_json() const {
  std::ostringstream os;
  os << "{\"prefixes_checked\":" << prefixes_checked << ",\"worst_violation\":";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", worst_violation);
  os << buf << ",\"violating_prefix\":[";
  for (size_t i = 0; i < violating_prefix.size(); ++i) {
    if (i) os << ",";
    os << violating_prefix[i];
  }
  os << "]}";
  return os.str();
}

AdmissibilityReport check_admissibility(const OnlineGame& game,
                                        const Relaxation& relaxation,
                                        const PrefixSampler& sampler,
                                        double tolerance) {
  if (!is_finite_set(game.outcomes))
    throw TooLarge("admissibility checking requires finite X");
  const int nx = finite_size(game.outcomes);
  const int T = game.horizon;

  AdmissibilityReport report;
  auto record = [&](double violation, const std::vector<int>& prefix) {
    if (violation > report.worst_violation + 1e-15) {
      report.worst_violation = violation;
      report.violating_prefix = prefix;
    }
  };

  auto check_prefix = [&](const std::vector<int>& prefix) {
    History h(&game);
    for (int xi : prefix) h.append_outcome(Move::finite(xi));
    std::vector<Move> moves = h.outcomes();
    if (static_cast<int>(prefix.size()) == T) {
      double terminal = -comparator_loss(game, h);
      record(terminal - relaxation.value(game, moves), prefix);
      report.terminal_checked = true;
    } else {
      MixedStrategy q = meta_algorithm_step(game, relaxation, h);
      double rel_here = relaxation.value(game, moves);
      double sup = -1e300;
      moves.push_back(Move{});
      for (int x = 0; x < nx; ++x) {
        moves.back() = Move::finite(x);
        sup = std::max(sup, expected_loss(game, q, Move::finite(x)) +
                                relaxation.value(game, moves));
      }
      record(sup - rel_here, prefix);
    }
    ++report.prefixes_checked;
  };

  long long total = pow_ll(nx, T);
  if (sampler.exhaustive && total <= sampler.exhaustive_limit) {
    // All prefixes of all lengths 0..T (recursive inequality at < T,
    // terminal condition at T).
    std::vector<int> prefix;
    std::function<void(int)> walk = [&](int remaining) {
      check_prefix(prefix);
      if (remaining == 0) return;
      for (int x = 0; x < nx; ++x) {
        prefix.push_back(x);
        walk(remaining - 1);
        prefix.pop_back();
      }
    };
    walk(T);
  } else {
    RngStream rng(sampler.seed, 77);
    for (int s = 0; s < sampler.sample_count; ++s) {
      int len = rng.uniform_int(0, T);
      std::vector<int> prefix(len);
      for (int& xi : prefix) xi = rng.uniform_int(0, nx - 1);
      check_prefix(prefix);
    }
  }
  (void)tolerance;  // violations are report content; callers compare
  return report;
}

double ExactValueRelaxation::value(const OnlineGame& game,
                                   const std::vector<Move>& outcomes) const {
  std::vector<int> key;
  key.reserve(outcomes.size());
  for (const Move& m : outcomes) key.push_back(m.index);
  auto it = table_.values.find(key);
  if (it == table_.values.end())
    throw DomainError("prefix missing from the value table");
  return it->second;
}

std::optional<MixedStrategy> ExactValueRelaxation::closed_form(
    const OnlineGame&, const History& history) const {
  std::vector<int> key;
  for (const Round& r : history.rounds()) key.push_back(r.outcome.index);
  auto it = table_.strategies.find(key);
  if (it == table_.strategies.end()) return std::nullopt;
  return MixedStrategy::distribution(it->second);
}

}  // namespace relax
