#include "relax/transductive.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "relax/errors.hpp"
#include "relax/solvers.hpp"

namespace relax {

ScalarLoss ScalarLoss::absolute() {
  ScalarLoss l;
  l.eval = [](double yhat, double y) { return std::fabs(yhat - y); };
  l.deriv = [](double yhat, double y) {
    if (yhat > y) return 1.0;
    if (yhat < y) return -1.0;
    return 0.0;
  };
  return l;
}

namespace {

constexpr int kExactSignCap = 12;

// Mean of fn over sign vectors of length k: exact enumeration when k ≤ 12,
// Monte Carlo with the given sample count otherwise.
double sign_expectation(int k, int samples, uint64_t seed,
                        const std::function<double(const std::vector<int>&)>& fn) {
  std::vector<int> signs(k, 1);
  if (k == 0) return fn(signs);
  if (k <= kExactSignCap) {
    double total = 0.0;
    for (uint64_t mask = 0; mask < (1ULL << k); ++mask) {
      for (int i = 0; i < k; ++i) signs[i] = (mask >> i) & 1 ? 1 : -1;
      total += fn(signs);
    }
    return total / static_cast<double>(1ULL << k);
  }
  RngStream rng(seed, 7);
  double total = 0.0;
  for (int s = 0; s < samples; ++s) {
    for (int i = 0; i < k; ++i) signs[i] = rng.sign();
    total += fn(signs);
  }
  return total / samples;
}

}  // namespace

double static_experts_rademacher(const StaticExpertClass& cls, int sign_samples,
                                 uint64_t seed) {
  const int T = cls.horizon();
  return sign_expectation(T, sign_samples, seed, [&](const std::vector<int>& e) {
    double best = -std::numeric_limits<double>::infinity();
    for (const Vec& f : cls.experts) {
      double v = 0.0;
      for (int t = 0; t < T; ++t) v += e[t] * f[t];
      best = std::max(best, v);
    }
    return best;
  });
}

double minimax_absolute_forecaster(const StaticExpertClass& cls,
                                   const std::vector<int>& labels,
                                   int sign_samples, uint64_t seed) {
  const int T = cls.horizon();
  const int t = static_cast<int>(labels.size()) + 1;
  const int k = T - t;
  std::vector<double> past_loss(cls.experts.size(), 0.0);
  for (size_t f = 0; f < cls.experts.size(); ++f)
    for (int s = 0; s < t - 1; ++s)
      past_loss[f] += std::fabs(cls.experts[f][s] - labels[s]);

  double q = 0.5 * sign_expectation(k, sign_samples, seed,
                                    [&](const std::vector<int>& e) {
    double sup_plus = -std::numeric_limits<double>::infinity();
    double sup_minus = sup_plus;
    for (size_t f = 0; f < cls.experts.size(); ++f) {
      double tail = 0.0;
      for (int i = 0; i < k; ++i) tail += e[i] * cls.experts[f][t + i];
      double base = tail - past_loss[f];
      sup_plus = std::max(sup_plus, base + cls.experts[f][t - 1]);
      sup_minus = std::max(sup_minus, base - cls.experts[f][t - 1]);
    }
    return sup_plus - sup_minus;
  });
  return std::clamp(q, -1.0, 1.0);
}

double linearized_forecaster(const StaticExpertClass& cls,
                             const Vec& gradient_history, int t,
                             int sign_samples, uint64_t seed) {
  const int T = cls.horizon();
  const int k = T - t;
  const double L = cls.lipschitz_L;
  return sign_expectation(k, sign_samples, seed, [&](const std::vector<int>& e) {
    double sup_plus = -std::numeric_limits<double>::infinity();
    double sup_minus = sup_plus;
    for (const Vec& f : cls.experts) {
      double v = 0.0;
      for (int i = 0; i < k; ++i) v += e[i] * f[t + i];
      for (size_t s = 0; s < gradient_history.size(); ++s)
        v -= gradient_history[s] * f[s] / (2.0 * L);
      sup_plus = std::max(sup_plus, v + 0.5 * f[t - 1]);
      sup_minus = std::max(sup_minus, v - 0.5 * f[t - 1]);
    }
    return sup_plus - sup_minus;
  });
}

double randomized_forecaster(const StaticExpertClass& cls,
                             const ScalarLoss& loss, const Vec& labels, int t,
                             const std::vector<int>& signs) {
  const int T = cls.horizon();
  const int k = T - t;
  if (static_cast<int>(signs.size()) != k)
    throw DomainError("sign draw length must equal T − t");
  const double L = cls.lipschitz_L;
  double inf_plus = std::numeric_limits<double>::infinity();
  double inf_minus = inf_plus;
  for (const Vec& f : cls.experts) {
    double v = 0.0;
    for (int i = 0; i < k; ++i) v -= signs[i] * f[t + i];
    for (size_t s = 0; s < labels.size(); ++s)
      v += loss.eval(f[s], labels[s]) / (2.0 * L);
    inf_plus = std::min(inf_plus, v + 0.5 * f[t - 1]);
    inf_minus = std::min(inf_minus, v - 0.5 * f[t - 1]);
  }
  return inf_plus - inf_minus;
}

MatrixGame load_matrix_game_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  MatrixGame g;
  g.m = j.at("m").get<int>();
  g.n = j.at("n").get<int>();
  g.B = j.at("B").get<double>();
  g.rho = j.at("rho").get<double>();
  for (const auto& row : j.at("entries")) {
    int r = row.at(0).get<int>(), c = row.at(1).get<int>();
    if (r < 0 || r >= g.m || c < 0 || c >= g.n)
      throw ConfigError("entry position out of range");
    g.entries.push_back({r, c});
    g.values.push_back(row.at(2).get<double>());
  }
  return g;
}

double spectral_norm(const Eigen::MatrixXd& M) {
  const Eigen::MatrixXd A = M.transpose() * M;
  const int n = static_cast<int>(A.cols());
  if (n == 0) return 0.0;
  if (A.norm() == 0.0) return 0.0;
  for (int restart = 0; restart < 3; ++restart) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    // Deterministic start; perturb the pattern on restart.
    for (int i = 0; i < n; ++i) v(i) = 1.0 + (i + 1) * (restart + 1) * 1e-3;
    v.normalize();
    double prev = 0.0;
    for (int it = 0; it < 10000; ++it) {
      Eigen::VectorXd w = A * v;
      double lambda = w.norm();
      if (lambda == 0.0) break;  // v in the null space; restart
      v = w / lambda;
      if (std::fabs(lambda - prev) <= 1e-12 * std::max(1.0, lambda))
        return std::sqrt(lambda);
      prev = lambda;
    }
  }
  throw NoConvergence("power iteration did not converge");
}

Eigen::MatrixXd trace_ball_project(const Eigen::MatrixXd& M, double B) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      M, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Vec s(svd.singularValues().data(),
        svd.singularValues().data() + svd.singularValues().size());
  double total = 0.0;
  for (double v : s) total += v;
  if (total <= B) return M;
  Vec p = simplex_ball_project(s, B);
  Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(p.data(), p.size());
  return svd.matrixU() * d.asDiagonal() * svd.matrixV().transpose();
}

namespace {

Eigen::MatrixXd one_hot(const MatrixGame& g, int t) {
  Eigen::MatrixXd X = Eigen::MatrixXd::Zero(g.m, g.n);
  X(g.entries[t][0], g.entries[t][1]) = 1.0;
  return X;
}

// min over {‖F‖_Σ ≤ B} by projected subgradient: 2000 iterations, step
// B/(ρ√i), best iterate.
double trace_ball_minimize(
    const MatrixGame& g,
    const std::function<double(const Eigen::MatrixXd&)>& objective,
    const std::function<Eigen::MatrixXd(const Eigen::MatrixXd&)>& subgradient,
    Eigen::MatrixXd* argmin = nullptr) {
  Eigen::MatrixXd F = Eigen::MatrixXd::Zero(g.m, g.n);
  if (g.B <= 0.0) {
    if (argmin) *argmin = F;
    return objective(F);
  }
  Eigen::MatrixXd best_F = F;
  double best = objective(F);
  for (int i = 1; i <= 2000; ++i) {
    double step = g.B / (g.rho * std::sqrt(static_cast<double>(i)));
    F = trace_ball_project(F - step * subgradient(F), g.B);
    double v = objective(F);
    if (v < best) {
      best = v;
      best_F = F;
    }
  }
  if (!std::isfinite(best)) throw SolverFailure("trace-ball minimization diverged");
  if (argmin) *argmin = best_F;
  return best;
}

}  // namespace

double matrix_rademacher_spectral(const MatrixGame& game, int sign_samples,
                                  uint64_t seed) {
  const int T = game.horizon();
  return sign_expectation(T, sign_samples, seed, [&](const std::vector<int>& e) {
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(game.m, game.n);
    for (int t = 0; t < T; ++t)
      S(game.entries[t][0], game.entries[t][1]) += e[t];
    return spectral_norm(S);
  });
}

double matrix_completion_linearized(const MatrixGame& game,
                                    const Vec& gradient_history, int t,
                                    int sign_samples, uint64_t seed) {
  const int T = game.horizon();
  const int k = T - t;
  Eigen::MatrixXd past = Eigen::MatrixXd::Zero(game.m, game.n);
  for (size_t s = 0; s < gradient_history.size(); ++s)
    past(game.entries[s][0], game.entries[s][1]) -=
        gradient_history[s] / (2.0 * game.rho);
  Eigen::MatrixXd half_xt = 0.5 * one_hot(game, t - 1);
  return game.B *
         sign_expectation(k, sign_samples, seed, [&](const std::vector<int>& e) {
           Eigen::MatrixXd S = past;
           for (int i = 0; i < k; ++i)
             S(game.entries[t + i][0], game.entries[t + i][1]) += e[i];
           return spectral_norm(S + half_xt) - spectral_norm(S - half_xt);
         });
}

double matrix_completion_randomized(const MatrixGame& game,
                                    const ScalarLoss& loss, int t,
                                    const std::vector<int>& signs) {
  const int T = game.horizon();
  const int k = T - t;
  if (static_cast<int>(signs.size()) != k)
    throw DomainError("sign draw length must equal T − t");
  auto value = [&](double sign_of_xt) {
    auto objective = [&](const Eigen::MatrixXd& F) {
      double v = 0.0;
      for (int i = 0; i < k; ++i)
        v -= signs[i] * F(game.entries[t + i][0], game.entries[t + i][1]);
      for (int s = 0; s < t - 1; ++s)
        v += loss.eval(F(game.entries[s][0], game.entries[s][1]),
                       game.values[s]) /
             (2.0 * game.rho);
      v += sign_of_xt * 0.5 * F(game.entries[t - 1][0], game.entries[t - 1][1]);
      return v;
    };
    auto subgradient = [&](const Eigen::MatrixXd& F) {
      Eigen::MatrixXd G = Eigen::MatrixXd::Zero(game.m, game.n);
      for (int i = 0; i < k; ++i)
        G(game.entries[t + i][0], game.entries[t + i][1]) -= signs[i];
      for (int s = 0; s < t - 1; ++s)
        G(game.entries[s][0], game.entries[s][1]) +=
            loss.deriv(F(game.entries[s][0], game.entries[s][1]),
                       game.values[s]) /
            (2.0 * game.rho);
      G(game.entries[t - 1][0], game.entries[t - 1][1]) += sign_of_xt * 0.5;
      return G;
    };
    return trace_ball_minimize(game, objective, subgradient);
  };
  return value(+1.0) - value(-1.0);
}

double matrix_comparator_loss(const MatrixGame& game, const ScalarLoss& loss) {
  const int T = game.horizon();
  auto objective = [&](const Eigen::MatrixXd& F) {
    double v = 0.0;
    for (int s = 0; s < T; ++s)
      v += loss.eval(F(game.entries[s][0], game.entries[s][1]), game.values[s]);
    return v;
  };
  auto subgradient = [&](const Eigen::MatrixXd& F) {
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(game.m, game.n);
    for (int s = 0; s < T; ++s)
      G(game.entries[s][0], game.entries[s][1]) +=
          loss.deriv(F(game.entries[s][0], game.entries[s][1]), game.values[s]);
    return G;
  };
  return trace_ball_minimize(game, objective, subgradient);
}

std::string MatrixRunResult::to_csv(const MatrixGame& game) const {
  std::string out = "t,r,c,y,yhat,loss\n";
  char buf[128];
  for (size_t t = 0; t < predictions.size(); ++t) {
    std::snprintf(buf, sizeof(buf), "%zu,%d,%d,%.17g,%.17g,%.17g\n", t + 1,
                  game.entries[t][0], game.entries[t][1], game.values[t],
                  predictions[t], losses[t]);
    out += buf;
  }
  return out;
}

MatrixRunResult run_matrix_completion(const MatrixGame& game,
                                      MatrixVariant variant,
                                      const ScalarLoss& loss, int sign_samples,
                                      uint64_t seed) {
  MatrixRunResult result;
  const int T = game.horizon();
  Vec gradients;
  for (int t = 1; t <= T; ++t) {
    double yhat;
    if (variant == MatrixVariant::linearized) {
      yhat = matrix_completion_linearized(game, gradients, t, sign_samples,
                                          seed + 31 * t);
    } else {
      RngStream rng(seed, static_cast<uint64_t>(t));
      std::vector<int> signs(T - t);
      for (int& s : signs) s = rng.sign();
      yhat = matrix_completion_randomized(game, loss, t, signs);
    }
    double y = game.values[t - 1];
    result.predictions.push_back(yhat);
    result.losses.push_back(loss.eval(yhat, y));
    gradients.push_back(loss.deriv(yhat, y));
  }
  double total = 0.0;
  for (double v : result.losses) total += v;
  result.regret = total - matrix_comparator_loss(game, loss);
  return result;
}

}  // namespace relax
