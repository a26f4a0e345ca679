#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bpi/tolerances.hpp"

namespace bpi {

/// Complex probability amplitude.
using Amplitude = std::complex<double>;

/// Optical mode label ("q1", "c2", ...). Labels are strings so that
/// network states read like the legs they model.
using ModeId = std::string;

/// A scalar input is malformed: non-finite angle, zero-norm state,
/// out-of-range target, ...
struct InvalidParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Mode sets do not line up: unknown mode, mismatched networks,
/// colliding output legs.
struct TopologyError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Conditioning on empty detectors left (almost) no probability mass,
/// i.e. the interferometer configuration is degenerate.
struct PostSelectionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One photon spread over a set of named modes.
///
/// The key set of the amplitude map is the declared mode network; modes
/// with zero amplitude stay in the map. Values are immutable after
/// construction, so states can be shared across threads freely.
class SinglePhotonState {
 public:
  /// Builds a state from mode -> amplitude. At least one mode is
  /// required and all amplitudes must be finite.
  explicit SinglePhotonState(std::map<ModeId, Amplitude> amplitudes);

  /// Convenience constructor for the abstract two-mode problems, with
  /// modes named "q1" and "q2".
  static SinglePhotonState two_mode(Amplitude q1, Amplitude q2);

  const std::map<ModeId, Amplitude>& amplitudes() const { return amps_; }

  /// Amplitude on `mode`; throws TopologyError for a mode outside the
  /// declared network.
  Amplitude amplitude(const ModeId& mode) const;

  bool has_mode(const ModeId& mode) const { return amps_.count(mode) != 0; }

  /// Declared modes in lexicographic order.
  std::vector<ModeId> modes() const;

  /// Sum of |amplitude|^2 over all modes.
  double norm_sq() const;

  bool is_normalized(double tolerance = tol::amplitude) const;

  /// Returns the unit-norm copy; throws InvalidParameterError when the
  /// state has (numerically) zero norm.
  SinglePhotonState normalized() const;

  bool same_mode_set(const SinglePhotonState& other) const;

 private:
  std::map<ModeId, Amplitude> amps_;
};

/// Lossless two-leg coupler, the symmetric 2x2 unitary [[t, r], [r, t]].
///
/// Leg convention used by every propagation routine in the library:
///
///   input leg  ->  output contribution
///   ---------------------------------------------
///   leg 1      ->  t * (out leg 1) + r * (out leg 2)
///   leg 2      ->  r * (out leg 1) + t * (out leg 2)
///
/// i.e. `t` keeps a photon on its leg index (transmission) and `r`
/// crosses it over (reflection). The matrix is unitary exactly when
///
///   |t|^2 + |r|^2 = 1   and   t*conj(r) + conj(t)*r = 0
///
/// and both conditions are enforced on construction. The single-angle
/// form uses t = cos(theta), r = i*sin(theta); theta = pi/4 is the
/// symmetric (50:50) splitter.
class BeamSplitter {
 public:
  /// t = cos(theta), r = i*sin(theta). Throws InvalidParameterError for
  /// non-finite theta.
  static BeamSplitter from_theta(double theta);

  /// General coefficient pair, validated against both unitarity
  /// conditions within tol::amplitude.
  static BeamSplitter from_coefficients(Amplitude t, Amplitude r);

  Amplitude transmission() const { return t_; }
  Amplitude reflection() const { return r_; }

 private:
  BeamSplitter(Amplitude t, Amplitude r) : t_(t), r_(r) {}
  Amplitude t_;
  Amplitude r_;
};

/// Applies `bs` to the photon content of `in` legs, writing the image
/// onto `out` legs (created if absent); all other modes pass through.
/// Norm is preserved. Throws TopologyError when an input leg is not in
/// the state's network, legs coincide, or an output leg would silently
/// merge with an occupied unrelated mode.
SinglePhotonState apply_beam_splitter(const BeamSplitter& bs,
                                      const SinglePhotonState& state,
                                      std::pair<ModeId, ModeId> in,
                                      std::pair<ModeId, ModeId> out);

/// sum_m conj(a_m) * b_m over the shared mode set; conjugate-symmetric.
/// Throws TopologyError when the mode sets differ.
Amplitude inner_product(const SinglePhotonState& a, const SinglePhotonState& b);

}  // namespace bpi
