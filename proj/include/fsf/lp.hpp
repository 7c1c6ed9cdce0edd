#pragma once

#include <vector>

/// Dense two-phase primal simplex for the small linear programs produced by
/// the constraint-exchange loop: minimize c.x subject to rows a.x <= b and
/// per-variable bounds lo <= x <= hi.
namespace fsf {

struct LpProblem {
  std::vector<double> objective;          ///< c, one entry per variable
  std::vector<std::vector<double>> rows;  ///< constraint coefficients a
  std::vector<double> rhs;                ///< b, one entry per row
  std::vector<double> lower;              ///< may be -infinity
  std::vector<double> upper;              ///< may be +infinity
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<double> x;
  double objective_value = 0.0;
  int pivots = 0;
};

/// Deterministic solve: Dantzig pricing with smallest-index ties, falling
/// back to Bland's rule after a degeneracy stall so cycling cannot occur.
LpSolution solve_lp(const LpProblem& p);

}  // namespace fsf
