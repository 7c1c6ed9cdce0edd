#include "fsf/core.hpp"

#include <cmath>
#include <numbers>

namespace fsf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Offset kappa(k) so that omega_k = 2*pi*kappa(k)/n.
double kappa(const FilterSpec& spec, int k) {
  return spec.expansion == Expansion::cosine ? double(k) : k + 0.5;
}

/// Count of magnitude-distinct slots in the half spectrum.
int half_slot_count(const FilterSpec& spec) {
  if (spec.expansion == Expansion::cosine) return spec.n / 2 + 1;
  return (spec.n + 1) / 2;
}

std::string spec_summary(const FilterSpec& s) {
  std::string out = "n=" + std::to_string(s.n) + " kind=" + to_string(s.kind) +
                    " bw=" + std::to_string(s.bw);
  if (s.kind == FilterKind::bandpass) out += " m1=" + std::to_string(s.m1);
  out += " t=" + std::to_string(s.t);
  out += " expansion=";
  out += to_string(s.expansion);
  return out;
}

}  // namespace

const char* to_string(FilterKind k) {
  return k == FilterKind::lowpass ? "lowpass" : "bandpass";
}

const char* to_string(Expansion e) {
  return e == Expansion::cosine ? "cosine" : "sine";
}

const char* to_string(Binding b) {
  return b == Binding::symmetric ? "symmetric" : "independent";
}

void validate(const FilterSpec& spec) {
  if (spec.n < 4) throw SpecInfeasible("filter length must be at least 4: " + spec_summary(spec));
  if (spec.bw < 1) throw SpecInfeasible("bw must be at least 1: " + spec_summary(spec));
  if (spec.t < 0 || spec.t > 4)
    throw SpecInfeasible("transition count must be 0..4: " + spec_summary(spec));
  const int half = half_slot_count(spec);
  if (spec.kind == FilterKind::lowpass) {
    // The band must leave at least one zero slot so the stopband has a start.
    if (spec.bw + spec.t > half - 1)
      throw SpecInfeasible("bw+t exceeds half-spectrum: " + spec_summary(spec));
  } else {
    if (spec.m1 < 1)
      throw SpecInfeasible("bandpass needs a zero sample below the lower edge: " +
                           spec_summary(spec));
    if (spec.m1 + 2 * spec.t + spec.bw > half - 1)
      throw SpecInfeasible("m1+2t+bw exceeds half-spectrum: " + spec_summary(spec));
  }
}

int SampleLayout::pairing(int k) const {
  if (spec.expansion == Expansion::cosine) return (spec.n - k) % spec.n;
  return spec.n - 1 - k;
}

int SampleLayout::variable_of(int k) const {
  const Slot& s = slots[k];
  if (s.role != SlotRole::transition) return -1;
  if (spec.kind == FilterKind::lowpass) return s.position - 1;
  if (spec.binding == Binding::independent && s.edge == Edge::upper)
    return spec.t + s.position - 1;
  // Lower band edge in slot order: the outermost (position-t) sample first.
  return spec.t - s.position;
}

std::vector<double> SampleLayout::signed_samples(const TransitionAssignment& a) const {
  if (int(a.values.size()) != variables)
    throw ArityMismatch("expected " + std::to_string(variables) + " coefficients, got " +
                        std::to_string(a.values.size()));
  for (double v : a.values)
    if (!std::isfinite(v)) throw BadAssignment("non-finite transition value");
  const double sign = mirror_sign();
  std::vector<double> out(spec.n, 0.0);
  for (int k = 0; k < half_slots; ++k) {
    double v = 0.0;
    switch (slots[k].role) {
      case SlotRole::unity:
        v = 1.0;
        break;
      case SlotRole::zero:
        v = 0.0;
        break;
      case SlotRole::transition:
        v = a.values[variable_of(k)];
        break;
    }
    out[k] = v;
    const int p = pairing(k);
    if (p != k) out[p] = sign * v;
  }
  return out;
}

std::vector<double> SampleLayout::fixed_signed_samples() const {
  TransitionAssignment zero;
  zero.binding = spec.binding;
  zero.values.assign(variables, 0.0);
  return signed_samples(zero);
}

std::vector<double> SampleLayout::basis_signed_samples(int v) const {
  const double sign = mirror_sign();
  std::vector<double> out(spec.n, 0.0);
  for (int k = 0; k < half_slots; ++k) {
    if (variable_of(k) != v) continue;
    out[k] = 1.0;
    const int p = pairing(k);
    if (p != k) out[p] = sign;
  }
  return out;
}

SampleLayout layout(const FilterSpec& spec) {
  validate(spec);
  SampleLayout lay;
  lay.spec = spec;
  lay.half_slots = half_slot_count(spec);
  lay.variables = spec.t;
  if (spec.kind == FilterKind::bandpass && spec.binding == Binding::independent)
    lay.variables = 2 * spec.t;
  lay.slots.resize(spec.n);

  // Assign roles over the distinct half-spectrum slots.
  auto role_of = [&spec](int k) -> Slot {
    Slot s;
    if (spec.kind == FilterKind::lowpass) {
      if (k < spec.bw) {
        s.role = SlotRole::unity;
      } else if (k < spec.bw + spec.t) {
        s.role = SlotRole::transition;
        s.edge = Edge::upper;
        s.position = k - spec.bw + 1;
      } else {
        s.role = SlotRole::zero;
      }
      return s;
    }
    const int lo_t = spec.m1;             // first lower transition slot
    const int pass = spec.m1 + spec.t;    // first unity slot
    const int hi_t = pass + spec.bw;      // first upper transition slot
    const int top = hi_t + spec.t;        // first upper zero slot
    if (k < lo_t || k >= top) {
      s.role = SlotRole::zero;
    } else if (k < pass) {
      s.role = SlotRole::transition;
      s.edge = Edge::lower;
      s.position = pass - k;  // position 1 abuts the passband
    } else if (k < hi_t) {
      s.role = SlotRole::unity;
    } else {
      s.role = SlotRole::transition;
      s.edge = Edge::upper;
      s.position = k - hi_t + 1;
    }
    return s;
  };

  for (int k = 0; k < lay.half_slots; ++k) {
    Slot s = role_of(k);
    s.omega = kTwoPi * kappa(spec, k) / spec.n;
    lay.slots[k] = s;
  }
  // Mirrored slots carry the same role as their conjugate partner.
  for (int k = lay.half_slots; k < spec.n; ++k) {
    Slot s = lay.slots[lay.pairing(k)];
    s.omega = kTwoPi * kappa(spec, k) / spec.n;
    lay.slots[k] = s;
  }
  return lay;
}

BandRegion stopband_region(const FilterSpec& spec) {
  const SampleLayout lay = layout(spec);
  BandRegion region;
  const double pi = std::numbers::pi;
  if (spec.kind == FilterKind::bandpass) {
    // Zeros below the lower edge always exist (m1 >= 1).
    const double lo = lay.slots[0].omega;
    const double hi = lay.slots[spec.m1 - 1].omega;
    region.intervals.push_back({lo, hi, BandTag::stopband});
  }
  // First zero slot above the band; validation guarantees it exists.
  const int first_upper_zero = spec.kind == FilterKind::lowpass
                                   ? spec.bw + spec.t
                                   : spec.m1 + 2 * spec.t + spec.bw;
  region.intervals.push_back({lay.slots[first_upper_zero].omega, pi, BandTag::stopband});
  return region;
}

}  // namespace fsf
