#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "fsf/core.hpp"

/// Synthesis of the linear-phase impulse response from frequency samples,
/// evaluation of the continuous zero-phase amplitude A(w), the affine
/// amplitude model used by the optimizer, and peak-sidelobe measurement.
namespace fsf {

struct ImpulseResponse {
  std::vector<double> taps;  ///< h[0..n-1], symmetric: h[m] == h[n-1-m]
};

/// Discretization of a BandRegion.  Points cover each interval with spacing
/// g*(2*pi/n), anchored at the interval's lower end; both endpoints are grid
/// points.
struct FrequencyGrid {
  double g = 0.0;                     ///< step as a fraction of the sample spacing 2*pi/n
  std::vector<double> points;         ///< sorted radian frequencies in [0, pi]
  std::vector<std::size_t> segments;  ///< start index of each interval's run

  /// Half-open index range [first, last) of interval segment s.
  std::pair<std::size_t, std::size_t> segment_range(std::size_t s) const {
    return {segments[s], s + 1 < segments.size() ? segments[s + 1] : points.size()};
  }
  std::size_t segment_count() const { return segments.size(); }
};

/// A(w) on a grid decomposed as a0(w) + sum_i T_i * basis_i(w); a0 is the
/// response with all transitions zero, basis_i the response of variable i's
/// slot set at unit magnitude.
struct AmplitudeModel {
  FrequencyGrid grid;
  std::vector<double> a0;
  std::vector<std::vector<double>> basis;

  /// A at grid point j for transition values v.
  double at(std::size_t j, const std::vector<double>& v) const {
    double a = a0[j];
    for (std::size_t i = 0; i < basis.size(); ++i) a += v[i] * basis[i][j];
    return a;
  }
};

struct SidelobePeak {
  double omega = 0.0;
  double db = 0.0;
};

struct PslReport {
  std::optional<double> psl_db;  ///< absent when the stopband response is all zero
  double peak_omega = 0.0;
  double peak_amplitude = 0.0;   ///< linear |A| at the peak
  std::vector<SidelobePeak> local_maxima;
};

struct CurvePoint {
  double omega = 0.0;
  double amplitude = 0.0;            ///< signed A(w), unnormalized
  std::optional<double> db;          ///< 20*log10|A|, absent at exact zero
};

/// Inverse-DFT synthesis of the symmetric linear-phase taps realizing the
/// spec's sample magnitudes.  Throws ArityMismatch / BadAssignment.
ImpulseResponse synthesize(const FilterSpec& spec, const TransitionAssignment& a);

/// Zero-phase amplitude A(w) = sum_m h[m] * cos(w*((n-1)/2 - m)).
double amplitude_at(const ImpulseResponse& h, double omega);

/// A(w) for every frequency in omegas, appended to out.
void amplitude_on_grid(const ImpulseResponse& h, const std::vector<double>& omegas,
                       std::vector<double>& out);

/// Grid over the region's intervals with spacing g*(2*pi/n).  Throws
/// GridTooFine when the total point count would exceed max_points.
FrequencyGrid build_grid(const FilterSpec& spec, const BandRegion& region, double g,
                         std::size_t max_points = 5'000'000);

AmplitudeModel build_model(const FilterSpec& spec, const FrequencyGrid& grid);

/// Peak sidelobe of the assignment's response on the default stopband grid
/// of density g.  Ripple peaks between a zero sample and the adjacent
/// transition sample count too; the local_maxima list is sorted by omega.
PslReport psl(const FilterSpec& spec, const TransitionAssignment& a, double g);

/// PslReport from precomputed amplitudes on a stopband grid.
PslReport psl_from_amplitudes(const FrequencyGrid& grid, const std::vector<double>& amp);

/// Indices of per-segment local maxima of |amp|; a plateau reports its first
/// point only.
std::vector<std::size_t> local_maxima_indices(const FrequencyGrid& grid,
                                              const std::vector<double>& amp);

/// Uniformly sampled unnormalized response over [lo, hi] for export.
std::vector<CurvePoint> response_curve(const FilterSpec& spec, const TransitionAssignment& a,
                                       double delta_omega, double lo, double hi);

/// CSV with header omega_rad,amplitude,db at 17 significant digits; the db
/// field is empty at exact zeros.  omega_scale rescales the frequency column
/// (used for cycle units), with the header adjusted by the caller via label.
void write_curve_csv(std::ostream& os, const std::vector<CurvePoint>& curve,
                     const char* omega_label = "omega_rad", double omega_scale = 1.0);

}  // namespace fsf
