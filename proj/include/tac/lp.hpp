#pragma once

#include <utility>
#include <vector>

namespace tac {

// Small dense-tableau simplex for the allocation relaxations:
//   maximize c.x  subject to  A.x <= b,  x >= 0.
// Negative right-hand sides are allowed (two-phase with artificials).
// Problems here are a few hundred variables with +-1 coefficients, so a
// plain dense tableau is accurate and fast enough.

struct LpRow {
  std::vector<std::pair<int, double>> coeffs;  // (var, coefficient)
  double rhs = 0;
};

struct LpProblem {
  int num_vars = 0;
  std::vector<double> objective;  // size num_vars
  std::vector<LpRow> rows;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpSolution {
  LpStatus status = LpStatus::IterationLimit;
  double value = 0;
  std::vector<double> x;      // size num_vars
  std::vector<double> duals;  // one per row; >= 0, shadow price of rhs
  int pivots = 0;
};

LpSolution lp_maximize(const LpProblem& p, int max_pivots = 50000);

}  // namespace tac
