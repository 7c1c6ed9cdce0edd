#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "fsf/format.hpp"
#include "fsf/response.hpp"
#include "oracles.hpp"

using namespace fsf;

namespace {

constexpr double kPi = std::numbers::pi;

FilterSpec make_spec(int n, FilterKind kind, int bw, int m1, int t, Expansion e,
                     Binding b = Binding::symmetric) {
  FilterSpec s;
  s.n = n;
  s.kind = kind;
  s.bw = bw;
  s.m1 = m1;
  s.t = t;
  s.expansion = e;
  s.binding = b;
  return s;
}

const std::vector<FilterSpec> kSpecZoo = {
    make_spec(15, FilterKind::lowpass, 5, 0, 2, Expansion::cosine),
    make_spec(16, FilterKind::lowpass, 4, 0, 1, Expansion::cosine),
    make_spec(15, FilterKind::lowpass, 4, 0, 3, Expansion::sine),
    make_spec(16, FilterKind::lowpass, 3, 0, 2, Expansion::sine),
    make_spec(33, FilterKind::lowpass, 9, 0, 4, Expansion::cosine),
    make_spec(32, FilterKind::bandpass, 3, 4, 2, Expansion::cosine),
    make_spec(32, FilterKind::bandpass, 3, 4, 3, Expansion::cosine, Binding::independent),
    make_spec(21, FilterKind::lowpass, 5, 0, 0, Expansion::cosine),
};

TransitionAssignment ramp_assignment(const FilterSpec& spec) {
  const SampleLayout lay = layout(spec);
  TransitionAssignment a;
  a.binding = spec.binding;
  a.values.resize(lay.variables);
  for (int i = 0; i < lay.variables; ++i) a.values[i] = 0.8 - 0.13 * i;
  return a;
}

}  // namespace

TEST_CASE("synthesize matches the inverse-DFT oracle and is exactly symmetric") {
  for (const FilterSpec& spec : kSpecZoo) {
    CAPTURE(spec.n);
    CAPTURE(spec.bw);
    const TransitionAssignment a = ramp_assignment(spec);
    const ImpulseResponse h = synthesize(spec, a);
    REQUIRE(h.taps.size() == std::size_t(spec.n));
    const auto ref = oracle::idft_taps(spec.n, spec.expansion, layout(spec).signed_samples(a));
    for (int m = 0; m < spec.n; ++m) {
      CHECK(std::abs(ref[m].imag()) < 1e-12);
      CHECK_NEAR(h.taps[m], ref[m].real(), 1e-12);
      CHECK(h.taps[m] == h.taps[spec.n - 1 - m]);  // bitwise symmetric
    }
  }
}

TEST_CASE("amplitude_at equals the literal cosine sum on symmetric taps") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> coin(-1.0, 1.0);
  for (int n : {9, 10, 33, 64}) {
    ImpulseResponse h;
    h.taps.resize(n);
    for (int m = 0; m <= (n - 1) / 2; ++m) h.taps[m] = h.taps[n - 1 - m] = coin(rng);
    for (int j = 0; j <= 40; ++j) {
      const double w = kPi * j / 40.0;
      CHECK_NEAR(amplitude_at(h, w), oracle::naive_amplitude(h.taps, w), 1e-11);
    }
  }
}

TEST_CASE("amplitude interpolates the signed samples at the lattice points") {
  for (const FilterSpec& spec : kSpecZoo) {
    CAPTURE(spec.n);
    const SampleLayout lay = layout(spec);
    const TransitionAssignment a = ramp_assignment(spec);
    const std::vector<double> s = lay.signed_samples(a);
    const ImpulseResponse h = synthesize(spec, a);
    for (int k = 0; k < lay.half_slots; ++k)
      CHECK_NEAR(amplitude_at(h, lay.slots[k].omega), s[k], 1e-12);
  }
}

TEST_CASE("amplitude agrees with the periodic-sinc interpolation oracle") {
  for (const FilterSpec& spec : kSpecZoo) {
    CAPTURE(spec.n);
    const SampleLayout lay = layout(spec);
    const TransitionAssignment a = ramp_assignment(spec);
    const std::vector<double> s = lay.signed_samples(a);
    const ImpulseResponse h = synthesize(spec, a);
    for (int j = 1; j < 50; ++j) {
      const double w = kPi * (j + 0.21) / 50.0;
      CHECK_NEAR(amplitude_at(h, w), oracle::dirichlet_amplitude(spec.n, spec.expansion, s, w),
                 1e-10);
    }
  }
}

TEST_CASE("mirror symmetry: A(2pi - w) = A(w) for odd n, -A(w) for even n") {
  for (const FilterSpec& spec : kSpecZoo) {
    const SampleLayout lay = layout(spec);
    const TransitionAssignment a = ramp_assignment(spec);
    const std::vector<double> s = lay.signed_samples(a);
    for (double w : {0.3, 1.1, 2.9}) {
      const double direct = oracle::dirichlet_amplitude(spec.n, spec.expansion, s, w);
      const double mirrored = oracle::dirichlet_amplitude(spec.n, spec.expansion, s, 2 * kPi - w);
      CHECK_NEAR(mirrored, lay.mirror_sign() * direct, 1e-10);
    }
  }
}

TEST_CASE("synthesize rejects out-of-range transition values") {
  const FilterSpec spec = make_spec(15, FilterKind::lowpass, 5, 0, 1, Expansion::cosine);
  TransitionAssignment a;
  a.values = {1.5};
  CHECK_THROWS_AS(synthesize(spec, a), BadAssignment);
  a.values = {-0.2};
  CHECK_THROWS_AS(synthesize(spec, a), BadAssignment);
}

TEST_CASE("build_grid covers each interval at the sample-spacing fraction g") {
  const FilterSpec spec = make_spec(32, FilterKind::bandpass, 3, 4, 2, Expansion::cosine);
  const BandRegion region = stopband_region(spec);
  const FrequencyGrid grid = build_grid(spec, region, 0.05);
  REQUIRE(grid.segment_count() == 2);
  const double step = 2 * kPi * 0.05 / 32;
  for (std::size_t seg = 0; seg < 2; ++seg) {
    const auto [first, last] = grid.segment_range(seg);
    REQUIRE(last > first);
    CHECK(grid.points[first] == region.intervals[seg].lo);
    CHECK(grid.points[last - 1] == region.intervals[seg].hi);
    for (std::size_t j = first + 1; j < last; ++j) {
      CHECK(grid.points[j] > grid.points[j - 1]);
      CHECK(grid.points[j] - grid.points[j - 1] < step * 1.5);
    }
  }
}

TEST_CASE("build_grid throws when the point count would explode") {
  const FilterSpec spec = make_spec(15, FilterKind::lowpass, 5, 0, 2, Expansion::cosine);
  const BandRegion region = stopband_region(spec);
  CHECK_THROWS_AS(build_grid(spec, region, 1e-9), GridTooFine);
  CHECK_THROWS_AS(build_grid(spec, region, 0.05, 3), GridTooFine);
  CHECK_THROWS_AS(build_grid(spec, region, 0.0), GridTooFine);
}

TEST_CASE("amplitude model is the affine decomposition of the response") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (const FilterSpec& spec : kSpecZoo) {
    CAPTURE(spec.n);
    const SampleLayout lay = layout(spec);
    const FrequencyGrid grid = build_grid(spec, stopband_region(spec), 0.2);
    const AmplitudeModel model = build_model(spec, grid);
    REQUIRE(model.basis.size() == std::size_t(lay.variables));
    REQUIRE(model.a0.size() == grid.points.size());
    TransitionAssignment a;
    a.binding = spec.binding;
    a.values.resize(lay.variables);
    for (double& v : a.values) v = coin(rng);
    const ImpulseResponse h = synthesize(spec, a);
    for (std::size_t j = 0; j < grid.points.size(); ++j)
      CHECK_NEAR(model.at(j, a.values), amplitude_at(h, grid.points[j]), 1e-12);
  }
}

TEST_CASE("local maxima: interior peaks, segment edges, and plateau fronts") {
  FrequencyGrid grid;
  grid.g = 1.0;
  grid.points = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7};
  grid.segments = {0, 5};
  const std::vector<double> amp = {0.1, 0.9, 0.2, 0.1, 0.8, 0.7, 0.7, 0.3};
  const auto idx = local_maxima_indices(grid, amp);
  // Interior peak, segment-final point, and the front of the 0.7 plateau.
  CHECK(idx == std::vector<std::size_t>{1, 4, 5});
}

TEST_CASE("psl_from_amplitudes reports the global peak in dB") {
  FrequencyGrid grid;
  grid.g = 1.0;
  grid.points = {0.0, 0.1, 0.2, 0.3};
  grid.segments = {0};
  PslReport rep = psl_from_amplitudes(grid, {0.01, -0.1, 0.002, 0.05});
  REQUIRE(rep.psl_db.has_value());
  CHECK(*rep.psl_db == doctest::Approx(-20.0).epsilon(1e-12));
  CHECK(rep.peak_omega == 0.1);
  CHECK(rep.peak_amplitude == 0.1);
  REQUIRE(rep.local_maxima.size() == 2);
  CHECK(rep.local_maxima[0].omega == 0.1);
  CHECK(rep.local_maxima[1].omega == 0.3);

  PslReport zero = psl_from_amplitudes(grid, {0.0, 0.0, 0.0, 0.0});
  CHECK(!zero.psl_db.has_value());
  CHECK(zero.peak_amplitude == 0.0);
}

TEST_CASE("psl measures the stopband peak of the synthesized response") {
  const FilterSpec spec = make_spec(15, FilterKind::lowpass, 5, 0, 1, Expansion::cosine);
  TransitionAssignment a;
  a.values = {0.5};
  const PslReport rep = psl(spec, a, 0.01);
  REQUIRE(rep.psl_db.has_value());
  // Cross-check against a direct scan of the oracle interpolation.
  const SampleLayout lay = layout(spec);
  const std::vector<double> s = lay.signed_samples(a);
  const FrequencyGrid grid = build_grid(spec, stopband_region(spec), 0.01);
  double peak = 0.0;
  for (double w : grid.points)
    peak = std::max(peak, std::abs(oracle::dirichlet_amplitude(spec.n, spec.expansion, s, w)));
  CHECK_NEAR(rep.peak_amplitude, peak, 1e-10);
  CHECK(*rep.psl_db == doctest::Approx(20.0 * std::log10(peak)).epsilon(1e-9));
}

TEST_CASE("response_curve samples uniformly and validates its range") {
  const FilterSpec spec = make_spec(15, FilterKind::lowpass, 5, 0, 1, Expansion::cosine);
  TransitionAssignment a;
  a.values = {0.5};
  const auto curve = response_curve(spec, a, 0.01, 0.0, kPi);
  REQUIRE(curve.size() >= 315);
  CHECK(curve.front().omega == 0.0);
  CHECK(curve[1].omega == 0.01);
  CHECK_NEAR(curve.front().amplitude, 1.0, 1e-6);
  REQUIRE(curve.front().db.has_value());
  CHECK(*curve.front().db ==
        doctest::Approx(20.0 * std::log10(std::abs(curve.front().amplitude))).epsilon(1e-12));
  CHECK_THROWS_AS(response_curve(spec, a, 0.0, 0.0, kPi), GridTooFine);
  CHECK_THROWS_AS(response_curve(spec, a, 0.01, -0.1, kPi), SpecInfeasible);
  CHECK_THROWS_AS(response_curve(spec, a, 0.01, 0.0, 4.0), SpecInfeasible);
}

TEST_CASE("write_curve_csv emits 17-digit columns and blank db at zeros") {
  std::vector<CurvePoint> curve(2);
  curve[0].omega = 0.5;
  curve[0].amplitude = 0.25;
  curve[0].db = 20.0 * std::log10(0.25);
  curve[1].omega = 1.0;
  curve[1].amplitude = 0.0;
  std::ostringstream os;
  write_curve_csv(os, curve);
  CHECK(os.str() == "omega_rad,amplitude,db\n"
                    "0.5,0.25," + g17(*curve[0].db) + "\n"
                    "1,0,\n");
  // The frequency column is rescaled for cycle units; amplitudes are not.
  std::ostringstream cycles;
  write_curve_csv(cycles, curve, "omega_cycles", 0.5);
  CHECK(cycles.str() == "omega_cycles,amplitude,db\n"
                        "0.25,0.25," + g17(*curve[0].db) + "\n"
                        "0.5,0,\n");
}
