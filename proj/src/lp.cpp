#include "tac/lp.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

namespace tac {

namespace {

constexpr double kCostTol = 1e-7;
constexpr double kPivotTol = 1e-9;
constexpr double kFeasTol = 1e-7;

// Dense tableau: m rows over [structural | slacks | artificials | rhs].
struct Tableau {
  int m = 0;
  int ncols = 0;  // without rhs
  int n_struct = 0;
  int first_artificial = 0;  // == n_struct + m when artificials start there
  std::vector<double> t;     // (m) x (ncols + 1)
  std::vector<double> z;     // objective row, ncols + 1
  std::vector<int> basis;    // per row, column index of its basic variable
  int pivots = 0;

  double& at(int r, int c) { return t[static_cast<std::size_t>(r) * (ncols + 1) + c]; }
  double at(int r, int c) const { return t[static_cast<std::size_t>(r) * (ncols + 1) + c]; }
  int rhs_col() const { return ncols; }

  void pivot(int pr, int pc) {
    double* prow = &t[static_cast<std::size_t>(pr) * (ncols + 1)];
    double inv = 1.0 / prow[pc];
    for (int j = 0; j <= ncols; ++j) prow[j] *= inv;
    prow[pc] = 1.0;
    for (int r = 0; r < m; ++r) {
      if (r == pr) continue;
      double* row = &t[static_cast<std::size_t>(r) * (ncols + 1)];
      double f = row[pc];
      if (f == 0.0) continue;
      for (int j = 0; j <= ncols; ++j) row[j] -= f * prow[j];
      row[pc] = 0.0;
    }
    double f = z[pc];
    if (f != 0.0) {
      for (int j = 0; j <= ncols; ++j) z[j] -= f * prow[j];
      z[pc] = 0.0;
    }
    basis[pr] = pc;
    ++pivots;
  }

  // Runs simplex iterations on the current objective row until no column
  // prices out positive. `limit_col` bounds the entering-column scan so
  // artificials stay out in phase 2.
  LpStatus iterate(int limit_col, int max_pivots) {
    int stall = 0;
    bool bland = false;
    double last_obj = -z[rhs_col()];
    while (true) {
      if (pivots > max_pivots) return LpStatus::IterationLimit;
      int enter = -1;
      if (!bland) {
        double best = kCostTol;
        for (int j = 0; j < limit_col; ++j) {
          if (z[j] > best) {
            best = z[j];
            enter = j;
          }
        }
      } else {
        for (int j = 0; j < limit_col; ++j) {
          if (z[j] > kCostTol) {
            enter = j;
            break;
          }
        }
      }
      if (enter < 0) return LpStatus::Optimal;

      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int r = 0; r < m; ++r) {
        double a = at(r, enter);
        if (a <= kPivotTol) continue;
        double ratio = at(r, rhs_col()) / a;
        if (ratio < best_ratio - 1e-12 ||
            (ratio < best_ratio + 1e-12 && leave >= 0 &&
             prefer_row(r, leave))) {
          best_ratio = ratio;
          leave = r;
        }
      }
      if (leave < 0) return LpStatus::Unbounded;
      pivot(leave, enter);

      double obj = -z[rhs_col()];
      if (obj > last_obj + 1e-10) {
        stall = 0;
        last_obj = obj;
      } else if (++stall > 2 * (m + limit_col) && !bland) {
        bland = true;  // break potential cycles
      }
    }
  }

  // Ratio-test tie break: kick artificials out first, then lowest basis
  // column for determinism.
  bool prefer_row(int cand, int incumbent) const {
    bool ca = basis[cand] >= first_artificial;
    bool ia = basis[incumbent] >= first_artificial;
    if (ca != ia) return ca;
    return basis[cand] < basis[incumbent];
  }

  void drop_row(int r) {
    t.erase(t.begin() + static_cast<std::ptrdiff_t>(r) * (ncols + 1),
            t.begin() + static_cast<std::ptrdiff_t>(r + 1) * (ncols + 1));
    basis.erase(basis.begin() + r);
    --m;
  }
};

}  // namespace

LpSolution lp_maximize(const LpProblem& p, int max_pivots) {
  const int m0 = static_cast<int>(p.rows.size());
  const int n = p.num_vars;

  // Count rows needing an artificial (negative rhs after slack insertion).
  std::vector<bool> negated(m0);
  int n_art = 0;
  for (int i = 0; i < m0; ++i) {
    negated[i] = p.rows[i].rhs < 0;
    if (negated[i]) ++n_art;
  }

  Tableau tab;
  tab.m = m0;
  tab.n_struct = n;
  tab.first_artificial = n + m0;
  tab.ncols = n + m0 + n_art;
  tab.t.assign(static_cast<std::size_t>(m0) * (tab.ncols + 1), 0.0);
  tab.z.assign(tab.ncols + 1, 0.0);
  tab.basis.assign(m0, -1);

  int art = 0;
  for (int i = 0; i < m0; ++i) {
    double sign = negated[i] ? -1.0 : 1.0;
    for (const auto& [v, coef] : p.rows[i].coeffs) {
      if (v < 0 || v >= n) throw std::out_of_range("lp row variable index");
      tab.at(i, v) += sign * coef;
    }
    tab.at(i, n + i) = sign;  // slack
    tab.at(i, tab.rhs_col()) = sign * p.rows[i].rhs;
    if (negated[i]) {
      int c = n + m0 + art++;
      tab.at(i, c) = 1.0;
      tab.basis[i] = c;
    } else {
      tab.basis[i] = n + i;
    }
  }

  LpSolution sol;

  if (n_art > 0) {
    // Phase 1: maximize -(sum of artificials). Reduced costs start as the
    // sum of the artificial rows (pricing out the -1 objective on each).
    for (int i = 0; i < m0; ++i) {
      if (tab.basis[i] < tab.first_artificial) continue;
      for (int j = 0; j <= tab.ncols; ++j) tab.z[j] += tab.at(i, j);
    }
    for (int c = tab.first_artificial; c < tab.ncols; ++c) tab.z[c] = 0.0;

    LpStatus st = tab.iterate(tab.ncols, max_pivots);
    if (st == LpStatus::IterationLimit || st == LpStatus::Unbounded) {
      sol.status = LpStatus::IterationLimit;
      sol.pivots = tab.pivots;
      return sol;
    }
    double infeas = -tab.z[tab.rhs_col()];
    if (std::abs(infeas) > kFeasTol * (1 + std::abs(infeas))) {
      sol.status = LpStatus::Infeasible;
      sol.pivots = tab.pivots;
      return sol;
    }
    // Remove lingering basic artificials: pivot them onto any usable
    // column, or drop the (redundant) row.
    for (int r = tab.m - 1; r >= 0; --r) {
      if (tab.basis[r] < tab.first_artificial) continue;
      int pc = -1;
      for (int j = 0; j < tab.first_artificial; ++j) {
        if (std::abs(tab.at(r, j)) > 1e-7) {
          pc = j;
          break;
        }
      }
      if (pc >= 0) {
        tab.pivot(r, pc);
      } else {
        tab.drop_row(r);
      }
    }
  }

  // Phase 2 objective: true costs, priced out over the current basis.
  for (int j = 0; j <= tab.ncols; ++j) tab.z[j] = 0.0;
  for (int j = 0; j < n; ++j) tab.z[j] = p.objective[j];
  for (int r = 0; r < tab.m; ++r) {
    int b = tab.basis[r];
    double cb = b < n ? p.objective[b] : 0.0;
    if (cb == 0.0) continue;
    for (int j = 0; j <= tab.ncols; ++j) tab.z[j] -= cb * tab.at(r, j);
    tab.z[b] = 0.0;
  }

  LpStatus st = tab.iterate(tab.first_artificial, max_pivots);
  sol.status = st;
  sol.pivots = tab.pivots;
  if (st != LpStatus::Optimal) return sol;

  sol.x.assign(n, 0.0);
  for (int r = 0; r < tab.m; ++r) {
    if (tab.basis[r] < n) sol.x[tab.basis[r]] = tab.at(r, tab.rhs_col());
  }
  sol.value = 0;
  for (int j = 0; j < n; ++j) sol.value += p.objective[j] * sol.x[j];

  // Shadow prices: for a <= row of a max problem, dual = -reduced cost of
  // its slack, clipped at zero.
  sol.duals.assign(m0, 0.0);
  for (int i = 0; i < m0; ++i) {
    double d = -tab.z[n + i];
    sol.duals[i] = d > 0 ? d : 0.0;
  }
  return sol;
}

}  // namespace tac
