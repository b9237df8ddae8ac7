#include "relax/classification.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "relax/errors.hpp"

#include <json.hpp>

namespace relax {

FiniteFunctionClass load_function_class_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  FiniteFunctionClass cls;
  cls.domain_size = static_cast<int>(j.at("domain").size());
  for (const auto& row : j.at("functions")) {
    std::vector<int> f;
    for (const auto& v : row) {
      int s = v.get<int>();
      if (s != 1 && s != -1) throw ConfigError("function values must be ±1");
      f.push_back(s);
    }
    if (static_cast<int>(f.size()) != cls.domain_size)
      throw ConfigError("function row length does not match the domain");
    cls.table.push_back(std::move(f));
  }
  return cls;
}

namespace {

using Mask = std::vector<uint64_t>;

Mask full_mask(int n) {
  Mask m((n + 63) / 64, 0);
  for (int i = 0; i < n; ++i) m[i / 64] |= (1ULL << (i % 64));
  return m;
}

int popcount(const Mask& m) {
  int c = 0;
  for (uint64_t w : m) c += __builtin_popcountll(w);
  return c;
}

struct LdimSolver {
  const FiniteFunctionClass* cls;
  std::map<Mask, int> memo;

  int solve(const Mask& mask) {
    int count = popcount(mask);
    if (count <= 1) return 0;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int best = 0;
    for (int x = 0; x < cls->domain_size; ++x) {
      Mask plus(mask.size(), 0), minus(mask.size(), 0);
      bool any_plus = false, any_minus = false;
      for (size_t w = 0; w < mask.size(); ++w) {
        uint64_t bits = mask[w];
        while (bits) {
          int b = __builtin_ctzll(bits);
          bits &= bits - 1;
          int f = static_cast<int>(w) * 64 + b;
          if (cls->table[f][x] > 0) {
            plus[w] |= (1ULL << b);
            any_plus = true;
          } else {
            minus[w] |= (1ULL << b);
            any_minus = true;
          }
        }
      }
      if (any_plus && any_minus)
        best = std::max(best, 1 + std::min(solve(plus), solve(minus)));
    }
    memo[mask] = best;
    return best;
  }
};

}  // namespace

int ldim_subset(const FiniteFunctionClass& cls, const std::vector<int>& funcs) {
  if (cls.domain_size > 16 || static_cast<int>(cls.table.size()) > 4096)
    throw TooLarge("ldim caps: |domain| ≤ 16, |F| ≤ 4096");
  LdimSolver solver{&cls, {}};
  Mask m((cls.table.size() + 63) / 64, 0);
  for (int f : funcs) m[f / 64] |= (1ULL << (f % 64));
  return solver.solve(m);
}

int ldim(const FiniteFunctionClass& cls) {
  std::vector<int> all(cls.table.size());
  std::iota(all.begin(), all.end(), 0);
  return ldim_subset(cls, all);
}

unsigned long long zero_cover_size(int d, int t) {
  unsigned long long total = 0;
  unsigned long long binom = 1;  // C(t, 0)
  for (int i = 0; i <= std::min(d, t); ++i) {
    total += binom;
    binom = binom * static_cast<unsigned long long>(t - i) /
            static_cast<unsigned long long>(i + 1);
  }
  return total;
}

std::vector<int> VersionSpace::surviving() const {
  std::vector<int> out;
  for (int f = 0; f < static_cast<int>(cls->table.size()); ++f) {
    bool ok = true;
    for (size_t i = 0; i < labels.size() && ok; ++i)
      ok = cls->table[f][instances[i]] == labels[i];
    if (ok) out.push_back(f);
  }
  return out;
}

namespace {

// Groups the function class by its sign pattern on the listed instances.
std::map<std::vector<int>, std::vector<int>> projections(
    const FiniteFunctionClass& cls, const std::vector<int>& instances) {
  std::map<std::vector<int>, std::vector<int>> groups;
  for (int f = 0; f < static_cast<int>(cls.table.size()); ++f) {
    std::vector<int> pattern;
    pattern.reserve(instances.size());
    for (int x : instances) pattern.push_back(cls.table[f][x]);
    groups[pattern].push_back(f);
  }
  return groups;
}

double pattern_loss(const std::vector<int>& pattern, const std::vector<int>& labels,
                    size_t upto) {
  double L = 0.0;
  for (size_t i = 0; i < upto; ++i)
    L += std::fabs(static_cast<double>(pattern[i] - labels[i]));
  return L;
}

}  // namespace

double littlestone_relax_value(const VersionSpace& vs, double lambda, int T) {
  const int t = static_cast<int>(vs.instances.size());
  if (static_cast<int>(vs.labels.size()) != t)
    throw DomainError("relaxation value needs labels for every instance");
  auto groups = projections(*vs.cls, vs.instances);
  // Stabilize the log-sum around the smallest pattern loss.
  double min_L = 1e300;
  for (const auto& [pattern, funcs] : groups)
    min_L = std::min(min_L, pattern_loss(pattern, vs.labels, t));
  double sum = 0.0;
  for (const auto& [pattern, funcs] : groups) {
    double L = pattern_loss(pattern, vs.labels, t);
    double g = static_cast<double>(
        zero_cover_size(ldim_subset(*vs.cls, funcs), T - t));
    sum += g * std::exp(-lambda * (L - min_L));
  }
  return (std::log(sum) - lambda * min_L) / lambda +
         2.0 * lambda * static_cast<double>(T - t);
}

namespace {

struct PatternWeights {
  double plus = 0.0, minus = 0.0;              // Eq. (20) numerators by σ_t
  double plus_m = 0.0, minus_m = 0.0;          // Eq. (21) with e^{−λ(1∓σ_t)}
};

PatternWeights strategy_weights(const VersionSpace& vs, double lambda, int T) {
  const int t = static_cast<int>(vs.instances.size());
  if (static_cast<int>(vs.labels.size()) != t - 1)
    throw DomainError("strategy expects labels up to the previous round");
  auto groups = projections(*vs.cls, vs.instances);
  PatternWeights w;
  for (const auto& [pattern, funcs] : groups) {
    double L_prev = pattern_loss(pattern, vs.labels, t - 1);
    double g = static_cast<double>(
        zero_cover_size(ldim_subset(*vs.cls, funcs), T - t));
    double base = g * std::exp(-lambda * L_prev);
    int sigma_t = pattern[t - 1];
    if (sigma_t > 0) {
      w.plus += base;
      w.plus_m += base * std::exp(-lambda * (1.0 - 1.0));
      w.minus_m += base * std::exp(-lambda * (1.0 + 1.0));
    } else {
      w.minus += base;
      w.plus_m += base * std::exp(-lambda * (1.0 + 1.0));
      w.minus_m += base * std::exp(-lambda * (1.0 - 1.0));
    }
  }
  return w;
}

}  // namespace

BinaryPrediction littlestone_strategy_ew(const VersionSpace& vs, double lambda,
                                         int T) {
  PatternWeights w = strategy_weights(vs, lambda, T);
  if (w.plus + w.minus <= 0.0)
    throw DegenerateProjection("no surviving projection");
  BinaryPrediction p;
  p.prob_plus = w.plus / (w.plus + w.minus);
  p.mean = 2.0 * p.prob_plus - 1.0;
  return p;
}

BinaryPrediction littlestone_strategy_mean(const VersionSpace& vs, double lambda,
                                           int T) {
  PatternWeights w = strategy_weights(vs, lambda, T);
  if (w.plus_m <= 0.0 || w.minus_m <= 0.0)
    throw DegenerateProjection("no surviving projection");
  BinaryPrediction p;
  p.mean = std::clamp(std::log(w.plus_m / w.minus_m) / (2.0 * lambda), -1.0, 1.0);
  p.prob_plus = (1.0 + p.mean) / 2.0;
  return p;
}

double binary_optimal_mean(const std::function<double(int)>& rel_continuation) {
  double q = 0.5 * (rel_continuation(+1) - rel_continuation(-1));
  return std::clamp(q, -1.0, 1.0);
}

double littlestone_pick_lambda(const FiniteFunctionClass& cls, int T) {
  VersionSpace vs{&cls, {}, {}};
  double best_lambda = 1.0, best = 1e300;
  for (int e = -10; e <= 2; ++e) {
    double lam = std::pow(2.0, e);
    double v = littlestone_relax_value(vs, lam, T);
    if (v < best) {
      best = v;
      best_lambda = lam;
    }
  }
  return best_lambda;
}

LittlestoneAdmissibilityReport check_littlestone_admissibility(
    const FiniteFunctionClass& cls, int T, double lambda,
    LittlestoneStrategyKind kind) {
  LittlestoneAdmissibilityReport report;
  VersionSpace vs{&cls, {}, {}};

  std::function<void(int)> walk = [&](int t) {
    double rel_prev = littlestone_relax_value(vs, lambda, T);
    ++report.prefixes_checked;
    if (t == T) {
      // Terminal: Rel ≥ −inf_f L_T(f).
      double best = 1e300;
      for (const auto& f : cls.table) {
        double L = 0.0;
        for (size_t i = 0; i < vs.instances.size(); ++i)
          L += std::fabs(static_cast<double>(f[vs.instances[i]] - vs.labels[i]));
        best = std::min(best, L);
      }
      report.worst_violation =
          std::max(report.worst_violation, -best - rel_prev);
      return;
    }
    for (int x = 0; x < cls.domain_size; ++x) {
      vs.instances.push_back(x);
      BinaryPrediction p = (kind == LittlestoneStrategyKind::ew)
                               ? littlestone_strategy_ew(vs, lambda, T)
                               : littlestone_strategy_mean(vs, lambda, T);
      for (int y : {+1, -1}) {
        vs.labels.push_back(y);
        double rel_next = littlestone_relax_value(vs, lambda, T);
        double expected = 1.0 - p.mean * y;  // E_{ŷ~q}|ŷ − y| for ±1 draws
        report.worst_violation =
            std::max(report.worst_violation, expected + rel_next - rel_prev);
        walk(t + 1);
        vs.labels.pop_back();
      }
      vs.instances.pop_back();
    }
  };
  walk(0);
  return report;
}

}  // namespace relax
