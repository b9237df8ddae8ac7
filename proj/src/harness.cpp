#include "relax/harness.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "relax/classification.hpp"
#include "relax/errors.hpp"
#include "relax/fpl.hpp"
#include "relax/relaxations.hpp"

namespace relax {

double evaluate_bound(const std::string& bound_id,
                      const std::map<std::string, double>& params) {
  auto get = [&](const char* key) {
    auto it = params.find(key);
    if (it == params.end())
      throw UnknownBound(std::string("missing parameter '") + key + "' for " +
                         bound_id);
    return it->second;
  };
  auto get_or = [&](const char* key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  if (bound_id == "expweights")
    return 2.0 * std::sqrt(2.0 * get("T") * std::log(get("F")));
  if (bound_id == "mirror-l2") return std::sqrt(2.0 * get_or("C", 2.0) * get("T"));
  if (bound_id == "strongly-convex")
    return (1.0 + std::log(get("T"))) / get("lambda");
  if (bound_id == "doubling") {
    double p = get("p");
    return (std::pow(get("T"), p) - std::pow(2.0, -p)) /
           (1.0 - std::pow(2.0, -p));
  }
  if (bound_id == "adaptive-hedge") {
    double tau = get("tau");
    return 4.0 * std::min(tau, std::sqrt(tau * std::log(get("F"))));
  }
  if (bound_id == "fpl-l2") return 4.0 * std::sqrt(2.0 * get("T"));
  throw UnknownBound("unknown bound id: " + bound_id);
}

// ---------------------------------------------------------------------------
// Adversaries.
// ---------------------------------------------------------------------------

namespace {

Move check_outcome(const OnlineGame& game, Move x) {
  if (!in_set(game.outcomes, x))
    throw AdversaryOutOfDomain("adversary emitted an outcome outside X");
  return x;
}

class IidAdversary : public AdversaryProcess {
 public:
  explicit IidAdversary(Vec weights) : weights_(std::move(weights)) {}
  std::string id() const override { return "iid"; }
  Move next(const OnlineGame& game, const History&, RngStream& rng) override {
    if (is_finite_set(game.outcomes)) {
      int n = finite_size(game.outcomes);
      Vec w = weights_;
      if (w.empty()) w.assign(n, 1.0 / n);
      double u = rng.uniform(), acc = 0.0;
      for (int i = 0; i < n; ++i) {
        acc += w[i];
        if (u <= acc) return Move::finite(i);
      }
      return Move::finite(n - 1);
    }
    const NormBall& b = ball_of(game.outcomes);
    Vec x(b.dim, 0.0);
    switch (b.norm) {
      case Norm::l2: {
        x = unit_sphere_draw(b.dim, rng);
        for (double& v : x) v *= b.radius;
        break;
      }
      case Norm::linf:
        for (double& v : x) v = rng.uniform(-b.radius, b.radius);
        break;
      case Norm::l1: {
        int j = rng.uniform_int(0, b.dim - 1);
        x[j] = rng.sign() * b.radius;
        break;
      }
    }
    return check_outcome(game, Move::vec(std::move(x)));
  }

 private:
  Vec weights_;
};

class ConstantAdversary : public AdversaryProcess {
 public:
  ConstantAdversary(int index, Vec point) : index_(index), point_(std::move(point)) {}
  std::string id() const override { return "constant"; }
  Move next(const OnlineGame& game, const History&, RngStream&) override {
    if (is_finite_set(game.outcomes))
      return check_outcome(game, Move::finite(index_));
    Vec x = point_;
    if (x.empty()) {
      x.assign(ball_of(game.outcomes).dim, 0.0);
      x[0] = ball_of(game.outcomes).radius;
    }
    return check_outcome(game, Move::vec(std::move(x)));
  }

 private:
  int index_;
  Vec point_;
};

class ShiftingLeaderAdversary : public AdversaryProcess {
 public:
  explicit ShiftingLeaderAdversary(int period) : period_(std::max(1, period)) {}
  std::string id() const override { return "shifting_leader"; }
  Move next(const OnlineGame& game, const History& history, RngStream&) override {
    if (!is_finite_set(game.outcomes))
      throw DomainError("shifting_leader needs a finite outcome set");
    int n = finite_size(game.outcomes);
    return Move::finite((history.length() / period_) % n);
  }

 private:
  int period_;
};

class GreedyWorstCaseAdversary : public AdversaryProcess {
 public:
  explicit GreedyWorstCaseAdversary(std::shared_ptr<const Relaxation> rel)
      : rel_(std::move(rel)) {
    if (!rel_) throw ConfigError("adversary.params.relaxation");
  }
  std::string id() const override { return "greedy_worst_case"; }
  Move next(const OnlineGame& game, const History& history,
            RngStream& rng) override {
    MixedStrategy q = meta_algorithm_step(game, *rel_, history);
    std::vector<Move> prefix = history.outcomes();
    auto objective = [&](const Move& x) {
      prefix.push_back(x);
      double v = expected_loss(game, q, x) + rel_->value(game, prefix);
      prefix.pop_back();
      return v;
    };
    if (is_finite_set(game.outcomes)) {
      int n = finite_size(game.outcomes);
      Move best = Move::finite(0);
      double best_v = objective(best);
      for (int i = 1; i < n; ++i) {
        Move cand = Move::finite(i);
        double v = objective(cand);
        if (v > best_v) {
          best_v = v;
          best = cand;
        }
      }
      return best;
    }
    // Ball X: sampled sup over directions (documented approximation).
    const NormBall& b = ball_of(game.outcomes);
    Move best = Move::vec(Vec(b.dim, 0.0));
    double best_v = objective(best);
    auto consider = [&](Vec dir) {
      for (double& v : dir) v *= b.radius;
      Move cand = Move::vec(std::move(dir));
      if (!in_set(game.outcomes, cand)) return;
      double v = objective(cand);
      if (v > best_v) {
        best_v = v;
        best = cand;
      }
    };
    const Vec& s = history.prefix_sum();
    double sn = norm_l2(s);
    if (sn > 1e-12) {
      Vec d = s;
      for (double& v : d) v /= sn;
      consider(d);
      for (double& v : d) v = -v;
      consider(d);
    }
    for (int i = 0; i < 64; ++i) consider(unit_sphere_draw(b.dim, rng));
    return best;
  }

 private:
  std::shared_ptr<const Relaxation> rel_;
};

class VariationConstrainedAdversary : public AdversaryProcess {
 public:
  explicit VariationConstrainedAdversary(Vec sigmas) : sigmas_(std::move(sigmas)) {}
  std::string id() const override { return "variation_constrained"; }
  Move next(const OnlineGame& game, const History& history,
            RngStream& rng) override {
    const NormBall& b = ball_of(game.outcomes);
    int t = history.length();  // producing x_{t+1}
    if (t >= static_cast<int>(sigmas_.size()))
      throw ConfigError("adversary.params.sigmas too short");
    double sigma = sigmas_[t];
    Vec mean(b.dim, 0.0);
    if (t > 0)
      for (int j = 0; j < b.dim; ++j) mean[j] = history.prefix_sum()[j] / t;
    Vec dir = unit_sphere_draw(b.dim, rng);
    // Largest step s ∈ [0, σ] keeping mean + s·dir inside the ball.
    double lo = 0.0, hi = sigma;
    auto inside = [&](double s) {
      Vec x = mean;
      for (int j = 0; j < b.dim; ++j) x[j] += s * dir[j];
      return norm_of(x, b.norm) <= b.radius + 1e-12;
    };
    if (!inside(hi)) {
      for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        (inside(mid) ? lo : hi) = mid;
      }
      hi = lo;
    }
    Vec x = mean;
    for (int j = 0; j < b.dim; ++j) x[j] += hi * dir[j];
    Vec d(b.dim);
    for (int j = 0; j < b.dim; ++j) d[j] = x[j] - mean[j];
    if (norm_l2(d) > sigma + 1e-9)
      throw ConstraintViolated("variation budget exceeded");
    return check_outcome(game, Move::vec(std::move(x)));
  }

 private:
  Vec sigmas_;
};

class LeaderMarginAdversary : public AdversaryProcess {
 public:
  LeaderMarginAdversary(int tau, double margin) : tau_(tau), margin_(margin) {}
  std::string id() const override { return "leader_margin"; }
  Move next(const OnlineGame& game, const History& history, RngStream&) override {
    if (!is_finite_set(game.outcomes) || finite_size(game.outcomes) < 2)
      throw DomainError("leader_margin needs the two-column experts game");
    int t = history.length();
    const Vec& L = history.cumulative();
    double gap = std::numeric_limits<double>::infinity();
    for (size_t f = 1; f < L.size(); ++f) gap = std::min(gap, L[f] - L[0]);
    if (t < tau_ && gap < margin_) return Move::finite(0);  // separate
    return Move::finite(1);                                 // neutral
  }

 private:
  int tau_;
  double margin_;
};

}  // namespace

std::unique_ptr<AdversaryProcess> make_adversary(const std::string& id,
                                                 AdversaryOptions options) {
  auto scalar = [&](const char* key, double fallback) {
    auto it = options.scalars.find(key);
    return it == options.scalars.end() ? fallback : it->second;
  };
  if (id == "iid") return std::make_unique<IidAdversary>(options.weights);
  if (id == "constant")
    return std::make_unique<ConstantAdversary>(
        static_cast<int>(scalar("index", 0)), options.point);
  if (id == "shifting_leader")
    return std::make_unique<ShiftingLeaderAdversary>(
        static_cast<int>(scalar("period", 1)));
  if (id == "greedy_worst_case")
    return std::make_unique<GreedyWorstCaseAdversary>(options.relaxation);
  if (id == "variation_constrained")
    return std::make_unique<VariationConstrainedAdversary>(options.sigmas);
  if (id == "leader_margin")
    return std::make_unique<LeaderMarginAdversary>(
        static_cast<int>(scalar("tau", 1)), scalar("k", 1.0));
  throw ConfigError("adversary.id");
}

OnlineGame make_leader_margin_game(int num_experts, int T) {
  OnlineGame g;
  g.decisions = FiniteSet{num_experts, {}, {}};
  g.outcomes = FiniteSet{2, {"separate", "neutral"}, {}};
  LossModel lm;
  lm.kind = LossModel::Kind::table;
  lm.lo = 0.0;
  lm.hi = 1.0;
  lm.table.assign(num_experts, Vec{1.0, 0.5});
  lm.table[0] = Vec{0.0, 0.5};
  g.loss_model = std::move(lm);
  g.horizon = T;
  return g;
}

// ---------------------------------------------------------------------------
// Learner registry.
// ---------------------------------------------------------------------------

namespace {

std::shared_ptr<Relaxation> relaxation_for(const std::string& id,
                                           const std::map<std::string, double>& params,
                                           const OnlineGame& game) {
  auto scalar = [&](const char* key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  if (id == "expweights") return std::make_shared<ExpWeightsRelaxation>();
  if (id == "mirror-l2")
    return std::make_shared<MirrorDescentRelaxation>(scalar("C", 2.0));
  if (id == "seq-rademacher") return std::make_shared<SeqRademacherRelaxation>();
  if (id == "exact-value")
    return std::make_shared<ExactValueRelaxation>(exact_value(game));
  return nullptr;
}

}  // namespace

std::unique_ptr<Learner> make_learner(const std::string& id,
                                      const std::map<std::string, double>& params,
                                      const OnlineGame& game) {
  if (auto rel = relaxation_for(id, params, game))
    return std::make_unique<RelaxationLearner>(rel);
  auto scalar = [&](const char* key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  if (id == "fpl-l1-linf") {
    PerturbationSpec spec = PerturbationSpec::rademacher();
    spec.C = scalar("C", spec.C);
    return std::make_unique<FplL1LinfLearner>(spec);
  }
  if (id == "fpl-l2-l2") {
    PerturbationSpec spec = PerturbationSpec::sphere();
    spec.C = scalar("C", spec.C);
    return std::make_unique<FplL2L2Learner>(spec);
  }
  throw ConfigError("learner.id");
}

// ---------------------------------------------------------------------------
// JSON configs.
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

void check_fields(const json& j, const std::vector<std::string>& allowed,
                  const std::string& path) {
  if (!j.is_object()) throw ConfigError(path + " must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
      throw ConfigError("unknown field " + path + "." + it.key());
  }
}

SetSpec parse_set(const json& j, const std::string& path) {
  check_fields(j, {"type", "size", "labels", "points", "norm", "radius", "dim"},
               path);
  std::string type = j.at("type").get<std::string>();
  if (type == "finite") {
    FiniteSet fs;
    fs.size = j.at("size").get<int>();
    if (j.contains("labels"))
      fs.labels = j.at("labels").get<std::vector<std::string>>();
    if (j.contains("points"))
      fs.points = j.at("points").get<std::vector<Vec>>();
    if (!fs.points.empty() && static_cast<int>(fs.points.size()) != fs.size)
      throw ConfigError(path + ".points length must equal size");
    return fs;
  }
  if (type == "ball") {
    NormBall b;
    std::string norm = j.value("norm", std::string("l2"));
    if (norm == "l1") b.norm = Norm::l1;
    else if (norm == "l2") b.norm = Norm::l2;
    else if (norm == "linf") b.norm = Norm::linf;
    else throw ConfigError(path + ".norm");
    b.radius = j.value("radius", 1.0);
    b.dim = j.at("dim").get<int>();
    return b;
  }
  throw ConfigError(path + ".type");
}

LossModel parse_loss(const json& j, const std::string& path) {
  check_fields(j, {"kind", "table", "lo", "hi"}, path);
  LossModel lm;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "table") {
    lm.kind = LossModel::Kind::table;
    lm.table = j.at("table").get<std::vector<Vec>>();
    double lo = 1e300, hi = -1e300;
    for (const Vec& row : lm.table)
      for (double v : row) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    lm.lo = j.value("lo", lo);
    lm.hi = j.value("hi", hi);
  } else if (kind == "linear") {
    lm.kind = LossModel::Kind::linear;
    lm.lo = j.value("lo", -1.0);
    lm.hi = j.value("hi", 1.0);
  } else if (kind == "absolute") {
    lm.kind = LossModel::Kind::absolute;
    lm.lo = j.value("lo", 0.0);
    lm.hi = j.value("hi", 2.0);
  } else {
    throw ConfigError(path + ".kind");
  }
  return lm;
}

OnlineGame parse_game(const json& j, const std::string& path) {
  check_fields(j, {"decisions", "outcomes", "loss", "horizon"}, path);
  OnlineGame g;
  g.decisions = parse_set(j.at("decisions"), path + ".decisions");
  g.outcomes = parse_set(j.at("outcomes"), path + ".outcomes");
  g.loss_model = parse_loss(j.at("loss"), path + ".loss");
  g.horizon = j.at("horizon").get<int>();
  if (g.loss_model.kind == LossModel::Kind::table) {
    if (!is_finite_set(g.decisions) || !is_finite_set(g.outcomes) ||
        static_cast<int>(g.loss_model.table.size()) != finite_size(g.decisions))
      throw ConfigError(path + ".loss.table shape");
  }
  return g;
}

std::map<std::string, double> parse_params(const json& j, const std::string& path) {
  std::map<std::string, double> out;
  if (!j.is_object()) throw ConfigError(path + " must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_number()) continue;  // vector params handled separately
    out[it.key()] = it.value().get<double>();
  }
  return out;
}

}  // namespace

OnlineGame load_game_json(const std::string& text) {
  return parse_game(json::parse(text), "game");
}

ExperimentConfig parse_experiment_config(const std::string& text) {
  json j = json::parse(text);
  check_fields(j, {"version", "game", "learner", "adversary", "T", "seeds",
                   "outputs", "assertions"},
               "config");
  if (!j.contains("version") || j.at("version").get<int>() != 1)
    throw ConfigError("config.version");
  ExperimentConfig cfg;
  cfg.game = parse_game(j.at("game"), "game");
  if (j.contains("T")) cfg.game.horizon = j.at("T").get<int>();

  const json& jl = j.at("learner");
  check_fields(jl, {"id", "params"}, "learner");
  cfg.learner_id = jl.at("id").get<std::string>();
  if (jl.contains("params"))
    cfg.learner_params = parse_params(jl.at("params"), "learner.params");

  const json& ja = j.at("adversary");
  check_fields(ja, {"id", "params", "weights", "point", "sigmas"}, "adversary");
  cfg.adversary_id = ja.at("id").get<std::string>();
  if (ja.contains("params"))
    cfg.adversary_options.scalars =
        parse_params(ja.at("params"), "adversary.params");
  if (ja.contains("weights"))
    cfg.adversary_options.weights = ja.at("weights").get<Vec>();
  if (ja.contains("point"))
    cfg.adversary_options.point = ja.at("point").get<Vec>();
  if (ja.contains("sigmas"))
    cfg.adversary_options.sigmas = ja.at("sigmas").get<Vec>();

  if (j.contains("seeds")) {
    const json& js = j.at("seeds");
    check_fields(js, {"count", "base"}, "seeds");
    cfg.seed_count = js.value("count", 1);
    cfg.seed_base = js.value("base", uint64_t{1});
    if (cfg.seed_count < 1) throw ConfigError("seeds.count");
  }
  if (j.contains("outputs")) {
    const json& jo = j.at("outputs");
    check_fields(jo, {"dir", "format"}, "outputs");
    cfg.out_dir = jo.value("dir", std::string());
    cfg.format = jo.value("format", std::string("json"));
    if (cfg.format != "json" && cfg.format != "csv")
      throw ConfigError("outputs.format");
  }
  if (j.contains("assertions")) {
    for (size_t i = 0; i < j.at("assertions").size(); ++i) {
      const json& jass = j.at("assertions")[i];
      std::string path = "assertions[" + std::to_string(i) + "]";
      check_fields(jass, {"bound", "params"}, path);
      ExperimentAssertion a;
      a.bound_id = jass.at("bound").get<std::string>();
      if (jass.contains("params"))
        a.params = parse_params(jass.at("params"), path + ".params");
      cfg.assertions.push_back(std::move(a));
    }
  }
  return cfg;
}

// ---------------------------------------------------------------------------
// run_experiment.
// ---------------------------------------------------------------------------

ExperimentResult run_experiment(const ExperimentConfig& config) {
  ExperimentResult result;
  AdversaryOptions opts = config.adversary_options;
  if (config.adversary_id == "greedy_worst_case" && !opts.relaxation)
    opts.relaxation =
        relaxation_for(config.learner_id, config.learner_params, config.game);
  auto adversary = make_adversary(config.adversary_id, std::move(opts));

  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < config.seed_count; ++i) {
    uint64_t seed = config.seed_base + static_cast<uint64_t>(i);
    auto learner = make_learner(config.learner_id, config.learner_params,
                                config.game);
    adversary->reset();
    RegretReport report = run_game(config.game, *learner, *adversary, seed);
    sum += report.regret;
    sumsq += report.regret * report.regret;
    result.max_regret = std::max(result.max_regret, report.regret);
    result.reports.push_back(std::move(report));
  }
  int n = config.seed_count;
  result.mean_regret = sum / n;
  if (n > 1) {
    double var = (sumsq - sum * sum / n) / (n - 1);
    result.stderr_regret = std::sqrt(std::max(0.0, var) / n);
  }
  for (const ExperimentAssertion& a : config.assertions) {
    BoundVerdict v;
    v.bound_id = a.bound_id;
    v.bound = evaluate_bound(a.bound_id, a.params);
    v.statistic = (n > 1) ? result.mean_regret + 3.0 * result.stderr_regret
                          : result.max_regret;
    v.passed = v.statistic <= v.bound + 1e-9;
    result.all_passed = result.all_passed && v.passed;
    result.verdicts.push_back(std::move(v));
  }
  return result;
}

std::string ExperimentResult::aggregate_json() const {
  json j;
  j["seeds"] = reports.size();
  j["mean_regret"] = mean_regret;
  j["stderr_regret"] = stderr_regret;
  j["max_regret"] = max_regret;
  j["all_passed"] = all_passed;
  j["verdicts"] = json::array();
  for (const BoundVerdict& v : verdicts)
    j["verdicts"].push_back({{"bound", v.bound_id},
                             {"value", v.bound},
                             {"statistic", v.statistic},
                             {"passed", v.passed}});
  return j.dump(2);
}

void write_experiment_outputs(const ExperimentConfig& config,
                              const ExperimentResult& result) {
  if (config.out_dir.empty()) return;
  std::filesystem::create_directories(config.out_dir);
  for (size_t i = 0; i < result.reports.size(); ++i) {
    uint64_t seed = config.seed_base + i;
    std::string name = "seed_" + std::to_string(seed) + "." + config.format;
    std::ofstream out(std::filesystem::path(config.out_dir) / name);
    out << (config.format == "csv" ? result.reports[i].to_csv()
                                   : result.reports[i].to_json());
  }
  std::ofstream agg(std::filesystem::path(config.out_dir) / "aggregate.json");
  agg << result.aggregate_json();
}

// ---------------------------------------------------------------------------
// Battery + sweep.
// ---------------------------------------------------------------------------

namespace {

OnlineGame table_game(std::vector<Vec> table, int num_outcomes, int T) {
  OnlineGame g;
  g.decisions = FiniteSet{static_cast<int>(table.size()), {}, {}};
  g.outcomes = FiniteSet{num_outcomes, {}, {}};
  LossModel lm;
  lm.kind = LossModel::Kind::table;
  double lo = 1e300, hi = -1e300;
  for (const Vec& row : table)
    for (double v : row) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  lm.lo = std::min(lo, 0.0);
  lm.hi = std::max(hi, 1.0);
  lm.table = std::move(table);
  g.loss_model = std::move(lm);
  g.horizon = T;
  return g;
}

OnlineGame linear_ball_game(std::vector<Vec> points, int T) {
  OnlineGame g;
  int dim = static_cast<int>(points[0].size());
  g.decisions = NormBall{Norm::l2, 1.0, dim};
  FiniteSet xs;
  xs.size = static_cast<int>(points.size());
  xs.points = std::move(points);
  g.outcomes = xs;
  LossModel lm;
  lm.kind = LossModel::Kind::linear;
  lm.lo = -1.0;
  lm.hi = 1.0;
  g.loss_model = std::move(lm);
  g.horizon = T;
  return g;
}

}  // namespace

std::vector<BatteryEntry> finite_battery() {
  const std::vector<std::string> rels = {"expweights", "seq-rademacher"};
  std::vector<BatteryEntry> out;
  out.push_back({"pennies-2x2-t3",
                 table_game({{1, 0}, {0, 1}}, 2, 3), rels});
  out.push_back({"skewed-2x2-t4",
                 table_game({{0.8, 0.1}, {0.2, 0.9}}, 2, 4), rels});
  out.push_back({"cyclic-3x3-t3",
                 table_game({{0.5, 1, 0}, {0, 0.5, 1}, {1, 0, 0.5}}, 3, 3),
                 rels});
  out.push_back({"wide-2x3-t4",
                 table_game({{0.2, 0.7, 1}, {0.9, 0.3, 0}}, 3, 4), rels});
  out.push_back({"tall-3x2-t4",
                 table_game({{0, 1}, {1, 0}, {0.4, 0.6}}, 2, 4), rels});
  out.push_back({"single-expert-t5", table_game({{0.3, 0.7}}, 2, 5), rels});
  out.push_back({"flat-column-2x2-t5",
                 table_game({{0.5, 0.1}, {0.5, 0.9}}, 2, 5), rels});
  out.push_back({"mixed-3x3-t3",
                 table_game({{0.15, 0.85, 0.45}, {0.65, 0.25, 0.95},
                             {0.35, 0.55, 0.05}},
                            3, 3),
                 rels});
  out.push_back({"near-tie-2x2-t5",
                 table_game({{0.45, 0.55}, {0.55, 0.45}}, 2, 5), rels});
  out.push_back({"diag-3x3-t2",
                 table_game({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, 3, 2), rels});
  out.push_back({"dominated-2x2-t4",
                 table_game({{0.1, 0.2}, {0.8, 0.9}}, 2, 4), rels});
  out.push_back({"single-outcome-3x1-t5",
                 table_game({{0.2}, {0.5}, {0.8}}, 1, 5), rels});
  return out;
}

std::vector<BatteryEntry> ball_battery() {
  std::vector<BatteryEntry> out;
  const std::vector<std::string> rels = {"mirror-l2"};
  out.push_back({"line-1d-t3", linear_ball_game({{1.0}, {-1.0}}, 3), rels});
  out.push_back({"axes-2d-t3",
                 linear_ball_game({{1, 0}, {0, 1}, {-1, 0}}, 3), rels});
  out.push_back({"tilted-2d-t4",
                 linear_ball_game({{0.5, 0.5}, {-0.5, 0.3}, {0, -1}}, 4), rels});
  out.push_back({"short-1d-t2", linear_ball_game({{0.7}, {-0.4}}, 2), rels});
  return out;
}

std::string SweepResult::to_json() const {
  json j;
  j["all_ok"] = all_ok;
  j["entries"] = json::array();
  for (const SweepEntry& e : entries)
    j["entries"].push_back({{"game", e.game},
                            {"relaxation", e.relaxation},
                            {"worst_violation", e.worst_violation},
                            {"ok", e.ok}});
  return j.dump(2);
}

SweepResult admissibility_sweep_on(const std::vector<BatteryEntry>& battery,
                                   double tolerance) {
  SweepResult result;
  PrefixSampler sampler;
  for (const BatteryEntry& entry : battery) {
    for (const std::string& rel_id : entry.relaxations) {
      auto rel = relaxation_for(rel_id, {}, entry.game);
      if (!rel) throw ConfigError("battery relaxation id: " + rel_id);
      AdmissibilityReport rep =
          check_admissibility(entry.game, *rel, sampler, tolerance);
      SweepEntry e{entry.name, rel_id, rep.worst_violation,
                   rep.worst_violation <= tolerance};
      result.all_ok = result.all_ok && e.ok;
      result.entries.push_back(std::move(e));
    }
  }
  return result;
}

std::vector<BatteryEntry> load_battery_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_array()) throw ConfigError("battery must be a JSON array");
  std::vector<BatteryEntry> out;
  for (size_t i = 0; i < j.size(); ++i) {
    std::string path = "battery[" + std::to_string(i) + "]";
    check_fields(j[i], {"name", "game", "relaxations"}, path);
    BatteryEntry e;
    e.name = j[i].at("name").get<std::string>();
    e.game = parse_game(j[i].at("game"), path + ".game");
    e.relaxations = j[i].at("relaxations").get<std::vector<std::string>>();
    out.push_back(std::move(e));
  }
  return out;
}

SweepResult admissibility_sweep(double tolerance) {
  SweepResult result;
  auto record = [&](const std::string& game, const std::string& rel,
                    double violation) {
    SweepEntry e{game, rel, violation, violation <= tolerance};
    result.all_ok = result.all_ok && e.ok;
    result.entries.push_back(std::move(e));
  };
  auto merge = [&](const SweepResult& part) {
    for (const SweepEntry& e : part.entries) {
      result.all_ok = result.all_ok && e.ok;
      result.entries.push_back(e);
    }
  };
  merge(admissibility_sweep_on(finite_battery(), tolerance));
  merge(admissibility_sweep_on(ball_battery(), tolerance));

  // Supervised (±1 labels) checker on two small function classes.
  FiniteFunctionClass thresholds;
  thresholds.domain_size = 3;
  thresholds.table = {{1, 1, 1}, {-1, 1, 1}, {-1, -1, 1}, {-1, -1, -1}};
  FiniteFunctionClass pair;
  pair.domain_size = 2;
  pair.table = {{1, -1}, {-1, 1}};
  for (const auto* cls : {&thresholds, &pair}) {
    int T = 3;
    double lambda = littlestone_pick_lambda(*cls, T);
    std::string name = (cls == &thresholds) ? "thresholds-3pt" : "parity-2pt";
    for (auto kind :
         {LittlestoneStrategyKind::ew, LittlestoneStrategyKind::mean}) {
      auto rep = check_littlestone_admissibility(*cls, T, lambda, kind);
      record(name, kind == LittlestoneStrategyKind::ew ? "supervised-ew"
                                                       : "supervised-mean",
             rep.worst_violation);
    }
  }
  return result;
}

}  // namespace relax
