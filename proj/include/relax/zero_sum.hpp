#pragma once

#include <vector>

#include "relax/types.hpp"

namespace relax {

struct ZeroSumSolution {
  Vec q;         // minimizing mixed strategy over rows
  double value;  // min_q max_col q^T M
};

// Solve min over the row simplex of the max over columns of q^T M.
// Rows |F| ≤ 3 use an exhaustive grid (step 1e-3) with local refinement;
// larger instances use a simplex-based LP.  M[row][col].
ZeroSumSolution zero_sum_solve(const std::vector<Vec>& M);

ZeroSumSolution zero_sum_solve_grid(const std::vector<Vec>& M);
ZeroSumSolution zero_sum_solve_lp(const std::vector<Vec>& M);

}  // namespace relax
