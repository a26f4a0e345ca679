#pragma once

#include "bpi/core.hpp"

namespace bpi {

/// Two photons over one shared mode set, either distinguishable (carrying
/// an ignored orthogonal label) or indistinguishable.
///
/// Construction normalizes both states. Inputs whose squared norm is off
/// by more than tol::normalize_trigger are flagged so callers can warn
/// (or reject) instead of silently accepting unnormalized data.
struct PhotonPair {
  PhotonPair(SinglePhotonState a, SinglePhotonState b, bool distinguishable_photons);

  SinglePhotonState photon_a;
  SinglePhotonState photon_b;
  bool distinguishable = false;
  bool photon_a_was_normalized = false;
  bool photon_b_was_normalized = false;

  bool was_normalized() const {
    return photon_a_was_normalized || photon_b_was_normalized;
  }

  /// Same pair with the distinguishability flag replaced.
  PhotonPair with_distinguishable(bool flag) const;
};

/// Bunching summary for a photon pair.
struct BunchingReport {
  double overlap_sq;    ///< |<a|b>|^2, clamped to [0, 1]
  double beta;          ///< 2 / (1 + overlap_sq), in [1, 2]
  double n_b;           ///< symmetrized-state normalization, 1 + overlap_sq
  double n_d;           ///< distinguishable normalization, always 1
  bool was_normalized;  ///< true when an input state had to be rescaled
};

/// Probability that both distinguishable photons land in `target`:
/// |a_target|^2 * |b_target|^2.
double prob_same_state_distinguishable(const PhotonPair& pair,
                                       const ModeId& target);

/// Probability that both indistinguishable photons land in `target`:
/// 2 * |a_target * b_target|^2 / (1 + overlap_sq).
double prob_same_state_indistinguishable(const PhotonPair& pair,
                                         const ModeId& target);

/// The bunching parameter beta = 2 / (1 + |<a|b>|^2) and its
/// normalization bookkeeping. beta is always computed from the overlap,
/// never as an empirical probability ratio, so modes with zero
/// distinguishable probability cause no division trouble.
BunchingReport bunching_beta(const PhotonPair& pair);

}  // namespace bpi
