// Binary prediction machinery: shattering dimension, covers, strategies.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "relax/classification.hpp"

using namespace relax;

namespace {

// Threshold functions f_k(x_i) = +1 iff i ≥ k over n points (n+1 functions).
FiniteFunctionClass thresholds(int n) {
  FiniteFunctionClass cls;
  cls.domain_size = n;
  for (int k = 0; k <= n; ++k) {
    std::vector<int> f(n);
    for (int i = 0; i < n; ++i) f[i] = (i >= k) ? 1 : -1;
    cls.table.push_back(std::move(f));
  }
  return cls;
}

FiniteFunctionClass full_cube(int d) {
  FiniteFunctionClass cls;
  cls.domain_size = d;
  for (int code = 0; code < (1 << d); ++code) {
    std::vector<int> f(d);
    for (int i = 0; i < d; ++i) f[i] = (code >> i) & 1 ? 1 : -1;
    cls.table.push_back(std::move(f));
  }
  return cls;
}

}  // namespace

TEST_CASE("shattering dimension of basic classes") {
  FiniteFunctionClass single;
  single.domain_size = 3;
  single.table = {{1, -1, 1}};
  CHECK(ldim(single) == 0);

  CHECK(ldim(full_cube(1)) == 1);
  CHECK(ldim(full_cube(2)) == 2);
  CHECK(ldim(full_cube(3)) == 3);

  CHECK(ldim(thresholds(8)) == 3);  // 9 functions → ⌊log₂ 9⌋
  CHECK(ldim(thresholds(3)) == 2);
}

TEST_CASE("dimension caps are enforced") {
  FiniteFunctionClass big;
  big.domain_size = 17;
  big.table = {std::vector<int>(17, 1)};
  CHECK_THROWS_AS(ldim(big), TooLarge);
}

TEST_CASE("zero cover sizes and their recursion") {
  CHECK(zero_cover_size(0, 7) == 1ULL);
  CHECK(zero_cover_size(1, 3) == 4ULL);
  CHECK(zero_cover_size(2, 5) == 16ULL);
  for (int d = 1; d <= 8; ++d)
    for (int t = 1; t <= 20; ++t)
      CHECK(zero_cover_size(d, t - 1) + zero_cover_size(d - 1, t - 1) <=
            zero_cover_size(d, t));
}

TEST_CASE("terminal value with a single pattern is minus its loss") {
  FiniteFunctionClass cls;
  cls.domain_size = 4;
  cls.table = {{1, -1, 1, -1}};
  VersionSpace vs{&cls, {0, 1, 2}, {1, 1, 1}};  // losses 0 + 2 + 0
  double v = littlestone_relax_value(vs, 0.7, 3);  // T = t = 3
  CHECK(v == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("terminal value covers the comparator with several patterns") {
  FiniteFunctionClass cls = thresholds(4);
  VersionSpace vs{&cls, {0, 2, 3}, {1, -1, 1}};
  double v = littlestone_relax_value(vs, 0.7, 3);  // T = t = 3
  double best = 1e300;
  for (const auto& f : cls.table) {
    double L = std::fabs(f[0] - 1.0) + std::fabs(f[2] + 1.0) +
               std::fabs(f[3] - 1.0);
    best = std::min(best, L);
  }
  CHECK(v >= -best - 1e-12);  // softmax lower bound
}

TEST_CASE("two equal-loss patterns give the plug-in value") {
  // Two antipodal functions on two points: both projections lose 2 against
  // the all-plus labels and are Ldim-0 singletons.
  FiniteFunctionClass cls;
  cls.domain_size = 2;
  cls.table = {{1, -1}, {-1, 1}};
  VersionSpace vs{&cls, {0, 1}, {1, 1}};
  double lambda = 0.5;
  int T = 4;
  double g = static_cast<double>(zero_cover_size(0, T - 2));
  double expect = -2.0 + std::log(2.0 * g) / lambda + 2.0 * lambda * (T - 2);
  CHECK(littlestone_relax_value(vs, lambda, T) ==
        doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("label-flip symmetry gives a fair coin") {
  FiniteFunctionClass cls;
  cls.domain_size = 1;
  cls.table = {{1}, {-1}};
  VersionSpace vs{&cls, {0}, {}};
  BinaryPrediction ew = littlestone_strategy_ew(vs, 0.5, 3);
  CHECK(ew.prob_plus == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ew.mean == doctest::Approx(0.0).epsilon(1e-12));
  BinaryPrediction mean = littlestone_strategy_mean(vs, 0.5, 3);
  CHECK(mean.mean == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("unanimity saturates the prediction") {
  FiniteFunctionClass cls;
  cls.domain_size = 2;
  cls.table = {{1, 1}, {1, -1}};  // both say +1 at x = 0
  VersionSpace vs{&cls, {0}, {}};
  BinaryPrediction ew = littlestone_strategy_ew(vs, 1.0, 3);
  CHECK(ew.prob_plus == doctest::Approx(1.0).epsilon(1e-12));
  BinaryPrediction mean = littlestone_strategy_mean(vs, 4.0, 3);
  CHECK(mean.mean == doctest::Approx(1.0).epsilon(1e-9));  // clamped
  CHECK(mean.mean <= 1.0);
}

TEST_CASE("threshold strategy matches the hand-enumerated cover weights") {
  FiniteFunctionClass cls = thresholds(4);
  // Observed (x=1, +1); predicting at x=2 with T=3 (so T−t = 1).
  VersionSpace vs{&cls, {1, 2}, {1}};
  double lambda = 0.5;
  // Patterns on (x1,x2): (+,+) {f0,f1} Ldim 1; (−,+) {f2} Ldim 0;
  // (−,−) {f3,f4} Ldim 1.  Losses vs label +1: 0, 2, 2.
  double wpp = zero_cover_size(1, 1) * std::exp(-lambda * 0.0);
  double wmp = zero_cover_size(0, 1) * std::exp(-lambda * 2.0);
  double wmm = zero_cover_size(1, 1) * std::exp(-lambda * 2.0);
  double expect = (wpp + wmp) / (wpp + wmp + wmm);
  BinaryPrediction ew = littlestone_strategy_ew(vs, lambda, 3);
  CHECK(ew.prob_plus == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("the two strategies differ in general") {
  FiniteFunctionClass cls = thresholds(4);
  VersionSpace vs{&cls, {1, 2}, {1}};
  BinaryPrediction ew = littlestone_strategy_ew(vs, 0.5, 3);
  BinaryPrediction mean = littlestone_strategy_mean(vs, 0.5, 3);
  CHECK(ew.mean != doctest::Approx(mean.mean).epsilon(1e-6));
}

TEST_CASE("both strategies are admissible on tiny classes") {
  for (FiniteFunctionClass cls : {thresholds(3), full_cube(2)}) {
    double lambda = littlestone_pick_lambda(cls, 3);
    for (LittlestoneStrategyKind kind :
         {LittlestoneStrategyKind::ew, LittlestoneStrategyKind::mean}) {
      LittlestoneAdmissibilityReport rep =
          check_littlestone_admissibility(cls, 3, lambda, kind);
      CHECK(rep.worst_violation <= 1e-6);
      CHECK(rep.prefixes_checked > 0);
    }
  }
}

TEST_CASE("a full run stays under the time-zero relaxation value") {
  FiniteFunctionClass cls = thresholds(8);
  const int T = 16;
  double lambda = littlestone_pick_lambda(cls, T);
  VersionSpace vs{&cls, {}, {}};
  double budget = littlestone_relax_value(vs, lambda, T);
  double expected_total = 0.0;
  for (int t = 0; t < T; ++t) {
    int x = (3 * t) % 8;
    int y = (t % 3 == 0) ? -1 : 1;
    vs.instances.push_back(x);
    BinaryPrediction p = littlestone_strategy_ew(vs, lambda, T);
    expected_total += 1.0 - p.mean * y;  // E|ŷ − y| for ±1 predictions
    vs.labels.push_back(y);
  }
  double best = 1e300;
  for (const auto& f : cls.table) {
    double L = 0.0;
    for (int t = 0; t < T; ++t)
      L += std::fabs(f[vs.instances[t]] - static_cast<double>(vs.labels[t]));
    best = std::min(best, L);
  }
  CHECK(expected_total - best <= budget + 1e-9);
  CHECK(budget <=
        8.0 * std::sqrt(ldim(cls) * T * std::log(static_cast<double>(T))));
}

TEST_CASE("at most one restriction keeps the full dimension") {
  for (FiniteFunctionClass cls : {thresholds(6), full_cube(3)}) {
    std::vector<int> all(cls.table.size());
    std::iota(all.begin(), all.end(), 0);
    int d = ldim_subset(cls, all);
    for (int x = 0; x < cls.domain_size; ++x) {
      std::vector<int> plus, minus;
      for (int f : all)
        (cls.table[f][x] > 0 ? plus : minus).push_back(f);
      if (plus.empty() || minus.empty()) continue;
      bool both = ldim_subset(cls, plus) == d && ldim_subset(cls, minus) == d;
      CHECK(!both);
    }
  }
}

TEST_CASE("the version space shrinks monotonically") {
  FiniteFunctionClass cls = thresholds(5);
  VersionSpace vs{&cls, {}, {}};
  size_t prev = cls.table.size();
  for (int t = 0; t < 4; ++t) {
    vs.instances.push_back(t);
    vs.labels.push_back(t % 2 == 0 ? 1 : -1);
    std::vector<int> now = vs.surviving();
    CHECK(now.size() <= prev);
    prev = now.size();
  }
}

TEST_CASE("the equalizer mean balances the two continuations") {
  auto rel = [](int y) { return (y > 0) ? 0.25 : 0.85; };
  double q = binary_optimal_mean(rel);
  CHECK(q == doctest::Approx(0.5 * (0.25 - 0.85)).epsilon(1e-12));
  // Balanced branches: 1 − q + Rel(+1) = 1 + q + Rel(−1) at this q.
  CHECK(1.0 - q + rel(+1) == doctest::Approx(1.0 + q + rel(-1)).epsilon(1e-12));
  // Symmetric continuation → no bias.
  CHECK(binary_optimal_mean([](int) { return 0.4; }) ==
        doctest::Approx(0.0));
  // Extreme gaps clamp to the label range.
  CHECK(binary_optimal_mean([](int y) { return y > 0 ? 5.0 : 0.0; }) == 1.0);
}

TEST_CASE("function classes load from JSON") {
  FiniteFunctionClass cls = load_function_class_json(
      R"({"domain": [0, 1, 2], "functions": [[1, -1, 1], [-1, -1, 1]]})");
  CHECK(cls.domain_size == 3);
  CHECK(cls.table.size() == 2);
  CHECK(cls.table[1][0] == -1);
  CHECK_THROWS_AS(load_function_class_json(
                      R"({"domain": [0], "functions": [[2]]})"),
                  ConfigError);
  CHECK_THROWS_AS(load_function_class_json(
                      R"({"domain": [0, 1], "functions": [[1]]})"),
                  ConfigError);
}
