#include "relax/zero_sum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "relax/errors.hpp"

namespace relax {

namespace {

double payoff(const std::vector<Vec>& M, const Vec& q) {
  const size_t cols = M[0].size();
  double worst = -std::numeric_limits<double>::infinity();
  for (size_t j = 0; j < cols; ++j) {
    double s = 0.0;
    for (size_t i = 0; i < M.size(); ++i) s += q[i] * M[i][j];
    worst = std::max(worst, s);
  }
  return worst;
}

}  // namespace

ZeroSumSolution zero_sum_solve_grid(const std::vector<Vec>& M) {
  const int n = static_cast<int>(M.size());
  if (n < 1 || n > 3) throw Unsolvable("grid path requires 1 <= |F| <= 3");
  if (n == 1) return {Vec{1.0}, payoff(M, Vec{1.0})};

  // Coarse scan at step 1e-3, then shrink the window around the incumbent.
  // The objective is convex in q, so local refinement is exact.
  Vec best_q;
  double best = std::numeric_limits<double>::infinity();
  auto consider = [&](const Vec& q) {
    double v = payoff(M, q);
    if (v < best - 1e-15) {
      best = v;
      best_q = q;
    }
  };

  double step = 1e-3;
  Vec center = (n == 2) ? Vec{0.5, 0.5} : Vec{1.0 / 3, 1.0 / 3, 1.0 / 3};
  // Scan window half-width around the center; the first pass must reach the
  // simplex corners, which sit a full unit from the 3-point center.
  double half = (n == 2) ? 0.5 : 1.0;
  for (int level = 0; level < 5; ++level) {
    if (n == 2) {
      double lo = std::max(0.0, center[0] - half), hi = std::min(1.0, center[0] + half);
      for (double p = lo; p <= hi + 1e-15; p += step) consider(Vec{p, 1.0 - p});
    } else {
      double lo0 = std::max(0.0, center[0] - half), hi0 = std::min(1.0, center[0] + half);
      double lo1 = std::max(0.0, center[1] - half), hi1 = std::min(1.0, center[1] + half);
      for (double p0 = lo0; p0 <= hi0 + 1e-15; p0 += step)
        for (double p1 = lo1; p1 <= hi1 + 1e-15 && p0 + p1 <= 1.0 + 1e-15; p1 += step)
          consider(Vec{p0, p1, std::max(0.0, 1.0 - p0 - p1)});
    }
    center = best_q;
    half = 2.5 * step;
    step /= 20.0;
  }
  return {best_q, best};
}

ZeroSumSolution zero_sum_solve_lp(const std::vector<Vec>& M) {
  // Classic transformation: shift payoffs positive, then
  //   max Σ y_i  s.t.  Σ_i y_i M'_ij ≤ 1 ∀j,  y ≥ 0
  // gives game value 1/Σy and q = y/Σy.
  const int n = static_cast<int>(M.size());
  const int m = static_cast<int>(M[0].size());
  double shift = std::numeric_limits<double>::infinity();
  for (const Vec& row : M)
    for (double v : row) shift = std::min(shift, v);
  shift -= 1.0;  // ensure strictly positive entries

  // Dense tableau simplex, Bland's rule.  Variables: y_1..y_n, slacks s_1..s_m.
  const int cols = n + m + 1;
  std::vector<Vec> tab(m + 1, Vec(cols, 0.0));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) tab[j][i] = M[i][j] - shift;
    tab[j][n + j] = 1.0;
    tab[j][cols - 1] = 1.0;
  }
  for (int i = 0; i < n; ++i) tab[m][i] = -1.0;  // maximize Σy

  std::vector<int> basis(m);
  for (int j = 0; j < m; ++j) basis[j] = n + j;

  for (int iter = 0; iter < 10000; ++iter) {
    int pivot_col = -1;
    for (int c = 0; c < cols - 1; ++c)
      if (tab[m][c] < -1e-12) { pivot_col = c; break; }  // Bland: lowest index
    if (pivot_col < 0) break;

    int pivot_row = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int r = 0; r < m; ++r) {
      if (tab[r][pivot_col] > 1e-12) {
        double ratio = tab[r][cols - 1] / tab[r][pivot_col];
        if (ratio < best_ratio - 1e-15 ||
            (ratio < best_ratio + 1e-15 && (pivot_row < 0 || basis[r] < basis[pivot_row]))) {
          best_ratio = ratio;
          pivot_row = r;
        }
      }
    }
    if (pivot_row < 0) throw Unsolvable("LP unbounded (malformed game matrix)");

    double pv = tab[pivot_row][pivot_col];
    for (int c = 0; c < cols; ++c) tab[pivot_row][c] /= pv;
    for (int r = 0; r <= m; ++r) {
      if (r == pivot_row) continue;
      double factor = tab[r][pivot_col];
      if (factor == 0.0) continue;
      for (int c = 0; c < cols; ++c) tab[r][c] -= factor * tab[pivot_row][c];
    }
    basis[pivot_row] = pivot_col;
  }

  Vec y(n, 0.0);
  for (int r = 0; r < m; ++r)
    if (basis[r] < n) y[basis[r]] = tab[r][cols - 1];
  double total = 0.0;
  for (double v : y) total += v;
  if (total <= 0.0) throw Unsolvable("LP returned a degenerate solution");

  Vec q(n);
  for (int i = 0; i < n; ++i) q[i] = std::max(0.0, y[i] / total);
  double norm = 0.0;
  for (double v : q) norm += v;
  for (double& v : q) v /= norm;
  return {q, 1.0 / total + shift};
}

ZeroSumSolution zero_sum_solve(const std::vector<Vec>& M) {
  if (M.empty() || M[0].empty()) throw Unsolvable("empty game matrix");
  return M.size() <= 3 ? zero_sum_solve_grid(M) : zero_sum_solve_lp(M);
}

}  // namespace relax
