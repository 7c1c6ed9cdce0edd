#pragma once

#include <stdexcept>
#include <string>
#include <vector>

/// Frequency-sampling FIR filter design: domain types and band geometry.
///
/// A filter is specified by the magnitudes it assumes on a uniform frequency
/// grid of n samples.  The passband is a block of bw consecutive unity
/// samples; each band edge carries t adjustable transition samples; all other
/// samples are zero.  The design problem is to choose the transition values
/// so the peak stopband sidelobe of the interpolated response is minimal.
namespace fsf {

enum class FilterKind { lowpass, bandpass };

/// Sample frequency lattice: cosine places samples at 2*pi*k/n,
/// sine at the half-bin offsets 2*pi*(k+1/2)/n.
enum class Expansion { cosine, sine };

/// Bandpass edge coupling: symmetric shares one value per transition
/// position across both edges; independent gives each edge its own set.
enum class Binding { symmetric, independent };

struct FilterSpec {
  int n = 0;                                  ///< filter length / sample count, >= 4
  FilterKind kind = FilterKind::lowpass;
  int bw = 0;                                 ///< consecutive unity samples, >= 1
  int m1 = 0;                                 ///< bandpass: index of first lower transition sample
  int t = 0;                                  ///< transition samples per band edge, 0..4
  Expansion expansion = Expansion::cosine;
  Binding binding = Binding::symmetric;       ///< bandpass only
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Band geometry does not fit the half spectrum (or a field is out of range).
class SpecInfeasible : public Error {
 public:
  using Error::Error;
};

/// Transition values outside [0,1] or otherwise unusable.
class BadAssignment : public Error {
 public:
  using Error::Error;
};

/// Coefficient count does not match the spec's variable count.
class ArityMismatch : public BadAssignment {
 public:
  using BadAssignment::BadAssignment;
};

class GridTooFine : public Error {
 public:
  using Error::Error;
};

class TooManyVariables : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownPreset : public Error {
 public:
  using Error::Error;
};

enum class SlotRole { unity, zero, transition };
enum class Edge { lower, upper };

/// One frequency sample slot.  position counts from the passband outward:
/// position 1 abuts the unity block, position t abuts the stopband.
struct Slot {
  double omega = 0.0;       ///< radians in [0, 2*pi)
  SlotRole role = SlotRole::zero;
  Edge edge = Edge::upper;  ///< meaningful only for transition slots
  int position = 0;         ///< 1..t, meaningful only for transition slots
};

/// Values for the free transition variables of a spec, listed in ascending
/// sample-frequency order within each edge.  Lowpass: values[i] is the
/// position-(i+1) sample.  Bandpass: values[0] is the lower edge's outermost
/// (position-t) sample and values[t-1] its position-1 sample; independent
/// binding appends the upper edge as values[t..2t) in position order 1..t.
struct TransitionAssignment {
  std::vector<double> values;
  Binding binding = Binding::symmetric;
};

/// Explicit slot map for all n samples plus the variable bookkeeping the
/// synthesis and optimization stages need.
struct SampleLayout {
  FilterSpec spec;
  std::vector<Slot> slots;  ///< k = 0..n-1
  int variables = 0;        ///< t, or 2t for independent bandpass
  int half_slots = 0;       ///< count of magnitude-distinct slots k = 0..half_slots-1

  /// Conjugate partner of slot k: (n-k) mod n for cosine, n-1-k for sine.
  int pairing(int k) const;

  /// Sign the mirrored half of the spectrum carries relative to its partner:
  /// +1 for odd n, -1 for even n (linear phase makes A(2*pi-w) = sign*A(w)).
  double mirror_sign() const { return spec.n % 2 ? 1.0 : -1.0; }

  /// Free-variable index feeding slot k, or -1 for fixed (unity/zero) slots.
  int variable_of(int k) const;

  /// Signed per-slot sample values A(omega_k) for the given assignment.
  /// Throws ArityMismatch / BadAssignment.
  std::vector<double> signed_samples(const TransitionAssignment& a) const;

  /// Signed samples with every transition slot at zero.
  std::vector<double> fixed_signed_samples() const;

  /// Signed samples with variable v's slot set at one and all else zero.
  std::vector<double> basis_signed_samples(int v) const;
};

enum class BandTag { stopband, passband, transition };

struct BandInterval {
  double lo = 0.0;
  double hi = 0.0;
  BandTag tag = BandTag::stopband;
};

/// Disjoint sorted closed intervals within [0, pi].
struct BandRegion {
  std::vector<BandInterval> intervals;
};

/// Throws SpecInfeasible when the spec violates its invariants.
void validate(const FilterSpec& spec);

/// Maps a valid spec to the explicit slot list.  Throws SpecInfeasible.
SampleLayout layout(const FilterSpec& spec);

/// Stopband intervals of a valid spec.  Each interval begins and ends at the
/// frequency of a zero-valued sample bordering the band, except that the
/// upper end of the top interval is always pi.  Throws SpecInfeasible.
BandRegion stopband_region(const FilterSpec& spec);

const char* to_string(FilterKind k);
const char* to_string(Expansion e);
const char* to_string(Binding b);

}  // namespace fsf
