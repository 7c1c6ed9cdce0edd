#include "fsf/response.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "fsf/format.hpp"

namespace fsf {

namespace {

constexpr double kPi = std::numbers::pi;

/// Closed-form inverse DFT of conjugate-symmetric linear-phase samples.
/// Each distinct slot k contributes w_k * s_k * cos(omega_k * (m - M)) / n
/// with w_k = 2 for paired slots and 1 for self-paired ones; the mirrored
/// half of the spectrum is implied by the pairing signs.
ImpulseResponse taps_from_signed(const SampleLayout& lay, const std::vector<double>& s) {
  const int n = lay.spec.n;
  const double m_center = (n - 1) / 2.0;
  ImpulseResponse h;
  h.taps.assign(n, 0.0);
  for (int m = 0; m <= (n - 1) / 2; ++m) {
    double acc = 0.0;
    for (int k = 0; k < lay.half_slots; ++k) {
      if (s[k] == 0.0) continue;
      const double w = lay.pairing(k) == k ? 1.0 : 2.0;
      acc += w * s[k] * std::cos(lay.slots[k].omega * (m - m_center));
    }
    h.taps[m] = acc / n;
    h.taps[n - 1 - m] = h.taps[m];  // exact symmetry by construction
  }
  return h;
}

/// A(w) of symmetric taps, folded about the center and evaluated with one
/// complex Horner pass: A = c0 + 2*Re(e^{i*d*w} * sum_r c_r e^{i*r*w}).
struct FoldedAmplitude {
  std::vector<double> coeff;  // c_1..c_R (odd n), c_0..c_R (even n)
  double center_tap = 0.0;    // odd n only
  bool half_offset = false;   // even n: exponents r + 1/2

  explicit FoldedAmplitude(const ImpulseResponse& h) {
    const int n = int(h.taps.size());
    if (n % 2) {
      const int m_center = (n - 1) / 2;
      center_tap = h.taps[m_center];
      coeff.resize(m_center);
      for (int r = 1; r <= m_center; ++r) coeff[r - 1] = h.taps[m_center - r];
    } else {
      half_offset = true;
      coeff.resize(n / 2);
      for (int j = 0; j < n / 2; ++j) coeff[j] = h.taps[n / 2 - 1 - j];
    }
  }

  double operator()(double omega) const {
    const std::complex<double> z(std::cos(omega), std::sin(omega));
    if (!half_offset) {
      // P(z) = sum_{r=1..R} c_r z^r via Horner; A = center + 2 Re P.
      std::complex<double> acc(0.0, 0.0);
      for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = (acc + *it) * z;
      return center_tap + 2.0 * acc.real();
    }
    // Q(z) = sum_{j=0..R} c_j z^j; A = 2 Re(e^{i w/2} Q).
    std::complex<double> acc(0.0, 0.0);
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * z + *it;
    const std::complex<double> half(std::cos(omega / 2), std::sin(omega / 2));
    return 2.0 * (half * acc).real();
  }
};

void check_range(const TransitionAssignment& a) {
  for (double v : a.values)
    if (v < -1e-12 || v > 1.0 + 1e-12)
      throw BadAssignment("transition value outside [0,1]: " + g17(v));
}

/// Sidelobes can ripple up between a zero sample and the adjacent transition
/// sample, just outside the stopband proper, and published levels count such
/// peaks.  Scans each zero<->transition gap at the stopband grid's density
/// and folds interior ripple peaks into the report; a response that merely
/// decays across the gap has no interior maximum and contributes nothing.
void scan_transition_gaps(const FilterSpec& spec, const ImpulseResponse& h, double g,
                          PslReport& report) {
  const SampleLayout lay = layout(spec);
  const FoldedAmplitude eval(h);
  const double step = 2.0 * kPi * g / spec.n;
  for (int k = 0; k + 1 < lay.half_slots; ++k) {
    const SlotRole a = lay.slots[k].role;
    const SlotRole b = lay.slots[k + 1].role;
    const bool zero_transition_gap = (a == SlotRole::zero && b == SlotRole::transition) ||
                                     (a == SlotRole::transition && b == SlotRole::zero);
    if (!zero_transition_gap) continue;
    const double lo = lay.slots[k].omega;
    const double hi = lay.slots[k + 1].omega;
    std::vector<double> w;
    for (double x = lo + step; x < hi - step / 2; x += step) w.push_back(x);
    if (w.size() < 3) continue;
    std::vector<double> amp(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) amp[j] = eval(w[j]);
    for (std::size_t j = 1; j + 1 < w.size(); ++j) {
      const double cur = std::abs(amp[j]);
      if (cur == 0.0 || std::abs(amp[j - 1]) >= cur || std::abs(amp[j + 1]) > cur) continue;
      report.local_maxima.push_back({w[j], 20.0 * std::log10(cur)});
      if (cur > report.peak_amplitude) {
        report.peak_amplitude = cur;
        report.peak_omega = w[j];
        report.psl_db = 20.0 * std::log10(cur);
      }
    }
  }
  std::sort(report.local_maxima.begin(), report.local_maxima.end(),
            [](const SidelobePeak& x, const SidelobePeak& y) { return x.omega < y.omega; });
}

}  // namespace

ImpulseResponse synthesize(const FilterSpec& spec, const TransitionAssignment& a) {
  const SampleLayout lay = layout(spec);
  check_range(a);
  return taps_from_signed(lay, lay.signed_samples(a));
}

double amplitude_at(const ImpulseResponse& h, double omega) {
  return FoldedAmplitude(h)(omega);
}

void amplitude_on_grid(const ImpulseResponse& h, const std::vector<double>& omegas,
                       std::vector<double>& out) {
  const FoldedAmplitude eval(h);
  out.reserve(out.size() + omegas.size());
  for (double w : omegas) out.push_back(eval(w));
}

FrequencyGrid build_grid(const FilterSpec& spec, const BandRegion& region, double g,
                         std::size_t max_points) {
  if (!(g > 0.0)) throw GridTooFine("grid density must be positive");
  const double step = 2.0 * kPi * g / spec.n;
  std::size_t total = 0;
  for (const BandInterval& iv : region.intervals)
    total += std::size_t((iv.hi - iv.lo) / step) + 2;
  if (total > max_points)
    throw GridTooFine("grid would need about " + std::to_string(total) +
                      " points, cap is " + std::to_string(max_points));

  FrequencyGrid grid;
  grid.g = g;
  grid.points.reserve(total);
  for (const BandInterval& iv : region.intervals) {
    grid.segments.push_back(grid.points.size());
    const std::size_t count = std::size_t((iv.hi - iv.lo) / step);
    for (std::size_t j = 0; j <= count; ++j) grid.points.push_back(iv.lo + j * step);
    // Pin the upper endpoint exactly.
    if (grid.points.back() >= iv.hi - step * 1e-9)
      grid.points.back() = iv.hi;
    else
      grid.points.push_back(iv.hi);
  }
  return grid;
}

AmplitudeModel build_model(const FilterSpec& spec, const FrequencyGrid& grid) {
  const SampleLayout lay = layout(spec);
  AmplitudeModel model;
  model.grid = grid;
  amplitude_on_grid(taps_from_signed(lay, lay.fixed_signed_samples()), grid.points, model.a0);
  model.basis.resize(lay.variables);
  for (int v = 0; v < lay.variables; ++v)
    amplitude_on_grid(taps_from_signed(lay, lay.basis_signed_samples(v)), grid.points,
                      model.basis[v]);
  return model;
}

std::vector<std::size_t> local_maxima_indices(const FrequencyGrid& grid,
                                              const std::vector<double>& amp) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < grid.segment_count(); ++s) {
    const auto [first, last] = grid.segment_range(s);
    for (std::size_t j = first; j < last; ++j) {
      const double cur = std::abs(amp[j]);
      if (j > first && std::abs(amp[j - 1]) >= cur) continue;
      if (j + 1 < last && std::abs(amp[j + 1]) > cur) continue;
      out.push_back(j);
    }
  }
  return out;
}

PslReport psl_from_amplitudes(const FrequencyGrid& grid, const std::vector<double>& amp) {
  PslReport report;
  std::size_t peak = 0;
  for (std::size_t j = 1; j < amp.size(); ++j)
    if (std::abs(amp[j]) > std::abs(amp[peak])) peak = j;
  report.peak_omega = grid.points[peak];
  report.peak_amplitude = std::abs(amp[peak]);
  if (report.peak_amplitude > 0.0) {
    report.psl_db = 20.0 * std::log10(report.peak_amplitude);
    for (std::size_t j : local_maxima_indices(grid, amp)) {
      if (std::abs(amp[j]) == 0.0) continue;
      report.local_maxima.push_back({grid.points[j], 20.0 * std::log10(std::abs(amp[j]))});
    }
  }
  return report;
}

PslReport psl(const FilterSpec& spec, const TransitionAssignment& a, double g) {
  const FrequencyGrid grid = build_grid(spec, stopband_region(spec), g);
  const ImpulseResponse h = synthesize(spec, a);
  std::vector<double> amp;
  amplitude_on_grid(h, grid.points, amp);
  PslReport report = psl_from_amplitudes(grid, amp);
  scan_transition_gaps(spec, h, g, report);
  return report;
}

std::vector<CurvePoint> response_curve(const FilterSpec& spec, const TransitionAssignment& a,
                                       double delta_omega, double lo, double hi) {
  if (!(delta_omega > 0.0)) throw GridTooFine("step must be positive");
  if (lo < 0.0 || hi > kPi || lo > hi) throw SpecInfeasible("range must lie within [0, pi]");
  const ImpulseResponse h = synthesize(spec, a);
  const FoldedAmplitude eval(h);
  std::vector<CurvePoint> curve;
  const std::size_t count = std::size_t((hi - lo) / delta_omega);
  curve.reserve(count + 1);
  for (std::size_t j = 0; j <= count; ++j) {
    CurvePoint p;
    p.omega = lo + j * delta_omega;
    p.amplitude = eval(p.omega);
    if (p.amplitude != 0.0) p.db = 20.0 * std::log10(std::abs(p.amplitude));
    curve.push_back(p);
  }
  return curve;
}

void write_curve_csv(std::ostream& os, const std::vector<CurvePoint>& curve,
                     const char* omega_label, double omega_scale) {
  os << omega_label << ",amplitude,db\n";
  for (const CurvePoint& p : curve) {
    os << g17(p.omega * omega_scale) << ',' << g17(p.amplitude) << ',';
    if (p.db) os << g17(*p.db);
    os << '\n';
  }
}

}  // namespace fsf
