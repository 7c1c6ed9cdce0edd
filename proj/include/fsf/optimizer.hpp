#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fsf/core.hpp"
#include "fsf/response.hpp"

/// Minimax transition-sample optimization: find the transition values whose
/// interpolated response has the smallest peak stopband magnitude.  The outer
/// loop exchanges active grid constraints into a small linear program until
/// no grid point exceeds the solved peak level.
namespace fsf {

struct SolveOptions {
  double g = 1e-3;                ///< grid step as a fraction of the sample spacing 2*pi/n
  int seed_stride = 64;           ///< initial working-set stride in grid points
  double violation_tol = 1e-12;   ///< relative slack before a point re-enters
  int max_exchange_iters = 100;
  std::size_t max_grid_points = 5'000'000;
};

struct DesignResult {
  TransitionAssignment assignment;
  double delta = 0.0;                  ///< peak |A| over the stopband grid
  std::optional<double> psl_db;        ///< absent when the response is exactly zero
  double peak_omega = 0.0;
  std::vector<double> extremal_omegas; ///< grid points within ripple of the peak
  int iterations = 0;                  ///< linear programs solved
  int active_constraints = 0;          ///< rows in the final linear program
  std::size_t grid_points = 0;
  double g = 0.0;
};

/// Designs the minimax transition values for a valid spec.  delta and the
/// extremal set certify the solved level over the stopband grid; psl_db and
/// peak_omega are psl() of the result at the same density, which also counts
/// ripple peaks between a zero sample and an adjacent transition sample, so
/// verifying the returned assignment reproduces them exactly.
/// Throws SpecInfeasible, GridTooFine, NoConvergence.
DesignResult optimize(const FilterSpec& spec, const SolveOptions& opt = {});

/// Independent check on optimize(): the stopband peak is convex in the
/// transition values, so a coarse lattice scan brackets the minimizer and
/// nested 1-d narrowing pins it down.  Only specs with at most two free
/// variables are accepted (throws TooManyVariables).
DesignResult brute_force(const FilterSpec& spec, const SolveOptions& opt = {}, int steps = 50);

/// optimize() at each density in gs, in order.
std::vector<DesignResult> grid_sweep(const FilterSpec& spec, const std::vector<double>& gs,
                                     SolveOptions opt = {});

}  // namespace fsf
