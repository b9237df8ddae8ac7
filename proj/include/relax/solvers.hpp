#pragma once

#include <functional>

#include "relax/types.hpp"

namespace relax {

// Golden-section minimization of a unimodal function on [lo, hi].
double golden_section(const std::function<double(double)>& f, double lo, double hi,
                      int iterations = 200);

// Euclidean projection onto a norm ball (l2: radial shrink; l1: simplex
// projection of magnitudes; linf: coordinate clamp).
Vec project_ball(const Vec& v, const NormBall& ball);

// Projection of a nonnegative vector onto {w >= 0, Σw <= radius}.
Vec simplex_ball_project(const Vec& v, double radius);

// Projected subgradient descent with step c/√i and best-iterate tracking.
struct SubgradientResult {
  Vec minimizer;
  double value;
};
SubgradientResult projected_subgradient(
    const std::function<double(const Vec&)>& objective,
    const std::function<Vec(const Vec&)>& subgradient, const NormBall& ball,
    Vec start, int iterations, double step_c);

// ERM over a decision set for convex_callback losses: exact for declared
// quadratics is not special-cased here — 1-D uses golden section, otherwise
// projected subgradient (1000 iterations, step c/√i).
Vec convex_erm(const OnlineGame& game, const std::vector<Move>& outcomes,
               const NormBall& ball);

}  // namespace relax
