#include "fsf/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fsf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivotEps = 1e-9;   // smallest usable pivot magnitude
constexpr double kCostTol = 1e-11;   // reduced cost significance
constexpr double kFeasTol = 1e-9;    // rhs feasibility slack
constexpr int kStallLimit = 64;      // degenerate pivots before Bland's rule

/// Standard-form tableau: rows over columns [structural | slack | artificial]
/// plus rhs, with one maintained objective row per phase.
struct Tableau {
  std::vector<std::vector<double>> t;  // rows x (cols + 1), last entry is rhs
  std::vector<double> phase2;          // reduced-cost row, cols + 1 wide
  std::vector<double> phase1;
  std::vector<int> basis;              // basic column per row
  int cols = 0;                        // excluding rhs
  int real_cols = 0;                   // structural + slack; artificials after
  int pivots = 0;

  double& rhs(int r) { return t[r][cols]; }

  void pivot(int r, int c) {
    ++pivots;
    const double inv = 1.0 / t[r][c];
    for (double& v : t[r]) v *= inv;
    t[r][c] = 1.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (int(i) == r) continue;
      const double f = t[i][c];
      if (f == 0.0) continue;
      for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[r][j];
      t[i][c] = 0.0;
    }
    for (auto* row : {&phase2, &phase1}) {
      if (row->empty()) continue;
      const double f = (*row)[c];
      if (f == 0.0) continue;
      for (int j = 0; j <= cols; ++j) (*row)[j] -= f * t[r][j];
      (*row)[c] = 0.0;
    }
    basis[r] = c;
  }

  /// One simplex phase on the given objective row.  Returns false when the
  /// problem is unbounded in this phase.
  bool iterate(std::vector<double>& obj) {
    bool bland = false;
    int stalled = 0;
    const int cap = 2000 + 50 * (int(t.size()) + cols);
    for (int step = 0; step < cap; ++step) {
      int enter = -1;
      if (bland) {
        for (int j = 0; j < real_cols; ++j)
          if (obj[j] < -kCostTol) {
            enter = j;
            break;
          }
      } else {
        double best = -kCostTol;
        for (int j = 0; j < real_cols; ++j)
          if (obj[j] < best) {
            best = obj[j];
            enter = j;
          }
      }
      if (enter < 0) return true;  // optimal for this phase

      int leave = -1;
      double best_ratio = kInf;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i][enter] <= kPivotEps) continue;
        const double ratio = std::max(rhs(int(i)), 0.0) / t[i][enter];
        if (ratio < best_ratio - 1e-12 ||
            (ratio < best_ratio + 1e-12 && (leave < 0 || basis[i] < basis[leave]))) {
          best_ratio = ratio;
          leave = int(i);
        }
      }
      if (leave < 0) return false;  // unbounded direction

      if (best_ratio < 1e-12) {
        if (++stalled >= kStallLimit) bland = true;
      } else {
        stalled = 0;
        bland = false;
      }
      pivot(leave, enter);
    }
    throw std::logic_error("simplex failed to terminate");
  }
};

}  // namespace

LpSolution solve_lp(const LpProblem& p) {
  const int nvars = int(p.objective.size());
  const int nrows = int(p.rows.size());
  LpSolution sol;

  // Standard form: shift finite lower bounds to zero, split free variables
  // into positive and negative parts, turn finite uppers into extra rows.
  struct VarMap {
    int col = -1;       // primary column
    int neg_col = -1;   // negative part for split (free) variables
    double shift = 0.0; // finite lower bound
  };
  std::vector<VarMap> vmap(nvars);
  int cols = 0;
  std::vector<std::pair<int, double>> upper_rows;  // (variable, rhs)
  for (int i = 0; i < nvars; ++i) {
    const double lo = p.lower[i], hi = p.upper[i];
    if (lo > hi) return sol;  // infeasible box
    if (std::isfinite(lo)) {
      vmap[i].col = cols++;
      vmap[i].shift = lo;
      if (std::isfinite(hi)) upper_rows.push_back({i, hi - lo});
    } else {
      vmap[i].col = cols++;
      vmap[i].neg_col = cols++;
      if (std::isfinite(hi)) upper_rows.push_back({i, hi});
    }
  }

  const int total_rows = nrows + int(upper_rows.size());
  Tableau tab;
  tab.real_cols = cols + total_rows;
  tab.cols = tab.real_cols;  // artificials appended on demand
  tab.basis.resize(total_rows);
  tab.t.assign(total_rows, std::vector<double>(tab.cols + 1, 0.0));

  auto fill_structural = [&](int r, int var, double coef) {
    tab.t[r][vmap[var].col] += coef;
    if (vmap[var].neg_col >= 0) tab.t[r][vmap[var].neg_col] -= coef;
  };
  for (int r = 0; r < nrows; ++r) {
    double b = p.rhs[r];
    for (int i = 0; i < nvars; ++i) {
      const double coef = p.rows[r][i];
      if (coef == 0.0) continue;
      fill_structural(r, i, coef);
      b -= coef * vmap[i].shift;
    }
    tab.t[r][cols + r] = 1.0;  // slack
    tab.rhs(r) = b;
    tab.basis[r] = cols + r;
  }
  for (std::size_t u = 0; u < upper_rows.size(); ++u) {
    const int r = nrows + int(u);
    fill_structural(r, upper_rows[u].first, 1.0);
    tab.t[r][cols + r] = 1.0;
    tab.rhs(r) = upper_rows[u].second;
    tab.basis[r] = cols + r;
  }

  tab.phase2.assign(tab.cols + 1, 0.0);
  for (int i = 0; i < nvars; ++i) {
    tab.phase2[vmap[i].col] += p.objective[i];
    if (vmap[i].neg_col >= 0) tab.phase2[vmap[i].neg_col] -= p.objective[i];
  }

  // Feasibility.  First try to repair all negative rhs with one pivot; the
  // minimax rows (every row shares a -1 column for the peak variable) always
  // admit this, skipping phase 1.
  int worst = -1;
  for (int r = 0; r < total_rows; ++r)
    if (tab.rhs(r) < -kFeasTol && (worst < 0 || tab.rhs(r) < tab.rhs(worst))) worst = r;
  if (worst >= 0) {
    int fix_col = -1;
    for (int j = 0; j < cols && fix_col < 0; ++j) {
      if (tab.t[worst][j] >= -kPivotEps) continue;
      const double step = tab.rhs(worst) / tab.t[worst][j];
      bool ok = true;
      for (int r = 0; r < total_rows && ok; ++r)
        if (tab.rhs(r) - tab.t[r][j] * step < -kFeasTol) ok = false;
      if (ok) fix_col = j;
    }
    if (fix_col >= 0) {
      tab.pivot(worst, fix_col);
      worst = -1;
    }
  }

  if (worst >= 0) {
    // Phase 1: artificial per infeasible row, minimize their sum.
    int artificials = 0;
    for (int r = 0; r < total_rows; ++r)
      if (tab.rhs(r) < 0.0) ++artificials;
    tab.cols = tab.real_cols + artificials;
    for (auto& row : tab.t) row.insert(row.end() - 1, artificials, 0.0);
    tab.phase2.insert(tab.phase2.end() - 1, artificials, 0.0);
    tab.phase1.assign(tab.cols + 1, 0.0);
    int a = 0;
    for (int r = 0; r < total_rows; ++r) {
      if (tab.rhs(r) >= 0.0) continue;
      for (int j = 0; j <= tab.cols; ++j) tab.t[r][j] = -tab.t[r][j];
      const int art = tab.real_cols + a++;
      tab.t[r][art] = 1.0;
      tab.basis[r] = art;
      // Price the artificial out of the phase-1 objective.
      for (int j = 0; j <= tab.cols; ++j) tab.phase1[j] -= tab.t[r][j];
      tab.phase1[art] = 0.0;
    }
    if (!tab.iterate(tab.phase1)) throw std::logic_error("phase 1 unbounded");
    if (-tab.phase1[tab.cols] > 1e-8) return sol;  // residual infeasibility
    // Drive leftover artificials out of the basis where possible.
    for (int r = 0; r < total_rows; ++r) {
      if (tab.basis[r] < tab.real_cols) continue;
      for (int j = 0; j < tab.real_cols; ++j)
        if (std::abs(tab.t[r][j]) > kPivotEps) {
          tab.pivot(r, j);
          break;
        }
    }
    tab.phase1.clear();
  }

  if (!tab.iterate(tab.phase2)) {
    sol.status = LpStatus::unbounded;
    sol.pivots = tab.pivots;
    return sol;
  }

  std::vector<double> y(tab.cols, 0.0);
  for (int r = 0; r < total_rows; ++r)
    if (tab.basis[r] < tab.cols) y[tab.basis[r]] = tab.rhs(r);
  sol.x.resize(nvars);
  double value = 0.0;
  for (int i = 0; i < nvars; ++i) {
    double xi = y[vmap[i].col] + vmap[i].shift;
    if (vmap[i].neg_col >= 0) xi -= y[vmap[i].neg_col];
    sol.x[i] = xi;
    value += p.objective[i] * xi;
  }
  sol.status = LpStatus::optimal;
  sol.objective_value = value;
  sol.pivots = tab.pivots;
  return sol;
}

}  // namespace fsf
