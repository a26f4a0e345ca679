#pragma once

// Shared helpers for the test suites: deterministic random states,
// random 2x2 unitaries, and complex comparison shorthands.

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "bpi/core.hpp"

namespace bpi::testing {

inline std::mt19937_64 make_rng(std::uint64_t seed = 0x5eedULL) {
  return std::mt19937_64(seed);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Random normalized state over the given modes (complex gaussian
/// entries, then rescale).
inline SinglePhotonState random_state(std::mt19937_64& rng,
                                      const std::vector<ModeId>& modes) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::map<ModeId, Amplitude> amps;
  for (const ModeId& mode : modes) {
    amps[mode] = Amplitude(gauss(rng), gauss(rng));
  }
  return SinglePhotonState(std::move(amps)).normalized();
}

/// 2x2 unitary in row-major order {u00, u01, u10, u11}, Haar-distributed.
inline std::array<Amplitude, 4> random_unitary(std::mt19937_64& rng) {
  const double alpha = uniform(rng, 0.0, 2 * std::numbers::pi);
  const double psi = uniform(rng, 0.0, 2 * std::numbers::pi);
  const double chi = uniform(rng, 0.0, 2 * std::numbers::pi);
  const double theta = std::asin(std::sqrt(uniform(rng, 0.0, 1.0)));
  const double c = std::cos(theta), s = std::sin(theta);
  const Amplitude phase = std::polar(1.0, alpha);
  return {phase * std::polar(c, psi), phase * std::polar(s, chi),
          phase * -std::polar(s, -chi), phase * std::polar(c, -psi)};
}

/// Applies a general 2x2 unitary to a two-mode state (legs in
/// lexicographic mode order). Test-only: deliberately independent of
/// apply_beam_splitter.
inline SinglePhotonState apply_unitary(const SinglePhotonState& state,
                                       const std::array<Amplitude, 4>& u) {
  const std::vector<ModeId> modes = state.modes();
  const Amplitude a1 = state.amplitude(modes[0]);
  const Amplitude a2 = state.amplitude(modes[1]);
  return SinglePhotonState({{modes[0], u[0] * a1 + u[1] * a2},
                            {modes[1], u[2] * a1 + u[3] * a2}});
}

inline bool close(Amplitude a, Amplitude b, double tolerance = 1e-12) {
  return std::abs(a - b) <= tolerance;
}

inline bool close(double a, double b, double tolerance = 1e-12) {
  return std::abs(a - b) <= tolerance;
}

}  // namespace bpi::testing
