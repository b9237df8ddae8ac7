#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "relax/errors.hpp"

namespace relax {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm_l2(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double norm_l1(const Vec& a) {
  double s = 0.0;
  for (double v : a) s += std::fabs(v);
  return s;
}

inline double norm_linf(const Vec& a) {
  double s = 0.0;
  for (double v : a) s = std::max(s, std::fabs(v));
  return s;
}

enum class Norm { l1, l2, linf };

inline double norm_of(const Vec& a, Norm n) {
  switch (n) {
    case Norm::l1: return norm_l1(a);
    case Norm::l2: return norm_l2(a);
    case Norm::linf: return norm_linf(a);
  }
  return 0.0;
}

// ‖·‖_1 and ‖·‖_∞ are dual; ‖·‖_2 is self-dual.
inline Norm dual_of(Norm n) {
  switch (n) {
    case Norm::l1: return Norm::linf;
    case Norm::linf: return Norm::l1;
    case Norm::l2: return Norm::l2;
  }
  return Norm::l2;
}

struct FiniteSet {
  int size = 0;
  std::vector<std::string> labels;  // optional, for reporting
  std::vector<Vec> points;          // optional vector payloads per element
};

struct NormBall {
  Norm norm = Norm::l2;
  double radius = 1.0;
  int dim = 1;
};

using SetSpec = std::variant<FiniteSet, NormBall>;

inline bool is_finite_set(const SetSpec& s) { return std::holds_alternative<FiniteSet>(s); }
inline int finite_size(const SetSpec& s) { return std::get<FiniteSet>(s).size; }
inline const NormBall& ball_of(const SetSpec& s) { return std::get<NormBall>(s); }

// One element of a decision or outcome set: an index into a FiniteSet, or a
// point of a NormBall.  Finite elements keep index >= 0 and an empty point.
struct Move {
  int index = -1;
  Vec point;

  static Move finite(int i) { return Move{i, {}}; }
  static Move vec(Vec p) { return Move{-1, std::move(p)}; }
  static Move scalar(double v) { return Move{-1, {v}}; }
};

inline bool in_set(const SetSpec& s, const Move& m, double tol = 1e-9) {
  if (is_finite_set(s)) return m.index >= 0 && m.index < finite_size(s);
  const NormBall& b = ball_of(s);
  return static_cast<int>(m.point.size()) == b.dim &&
         norm_of(m.point, b.norm) <= b.radius + tol;
}

struct LossModel {
  enum class Kind { linear, absolute, table, convex_callback };
  Kind kind = Kind::table;
  double lo = 0.0, hi = 1.0;  // declared bounds [a, b]
  std::vector<Vec> table;     // [decision][outcome]
  // convex_callback: the outcome's point parametrizes the round's function.
  std::function<double(const Vec& f, const Vec& xparam)> eval;
  std::function<Vec(const Vec& f, const Vec& xparam)> grad;
  double lipschitz = 1.0;
  // Optional declared strong-convexity constant of the round's function.
  std::function<double(const Vec& xparam)> curvature;
  // Optional exact ERM for the summed losses (e.g. closed form for
  // quadratics); generic solvers are used when absent.
  std::function<Vec(const std::vector<Vec>& xparams)> erm;
};

struct OnlineGame {
  SetSpec decisions;
  SetSpec outcomes;
  LossModel loss_model;
  int horizon = 1;
};

// Decision as a vector usable by convex_callback losses: finite decisions are
// passed through as the 1-vector {index}.
inline Vec decision_vec(const Move& f) {
  if (f.index >= 0 && f.point.empty()) return {static_cast<double>(f.index)};
  return f.point;
}

// Vector payload of a set element: the ball point, or the FiniteSet payload
// when one is attached, falling back to the 1-vector {index}.
inline Vec element_param(const SetSpec& s, const Move& m) {
  if (m.index >= 0 && is_finite_set(s)) {
    const FiniteSet& fs = std::get<FiniteSet>(s);
    if (!fs.points.empty()) return fs.points[m.index];
    return {static_cast<double>(m.index)};
  }
  return m.point;
}

inline double loss(const OnlineGame& g, const Move& f, const Move& x) {
  const LossModel& lm = g.loss_model;
  double v = 0.0;
  switch (lm.kind) {
    case LossModel::Kind::table:
      v = lm.table[f.index][x.index];
      break;
    case LossModel::Kind::linear:
      v = dot(element_param(g.decisions, f), element_param(g.outcomes, x));
      break;
    case LossModel::Kind::absolute:
      v = std::fabs(element_param(g.decisions, f)[0] -
                    element_param(g.outcomes, x)[0]);
      break;
    case LossModel::Kind::convex_callback:
      v = lm.eval(element_param(g.decisions, f), element_param(g.outcomes, x));
      if (!(v >= lm.lo - 1e-9 && v <= lm.hi + 1e-9))
        throw DomainError("convex_callback loss outside declared bounds [a,b]");
      break;
  }
  if (!std::isfinite(v)) throw DomainError("non-finite loss value");
  return v;
}

struct MixedStrategy {
  enum class Kind { point, distribution, sampled };
  Kind kind = Kind::point;
  Move move;            // point or sampled decision
  Vec weights;          // distribution over a finite decision set

  static MixedStrategy point_move(Move m) {
    return MixedStrategy{Kind::point, std::move(m), {}};
  }
  static MixedStrategy distribution(Vec w) {
    return MixedStrategy{Kind::distribution, Move{}, std::move(w)};
  }
  static MixedStrategy sampled(Move m) {
    return MixedStrategy{Kind::sampled, std::move(m), {}};
  }
};

}  // namespace relax
