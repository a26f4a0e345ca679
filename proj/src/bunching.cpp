#include "bpi/bunching.hpp"

#include <algorithm>
#include <cmath>

namespace bpi {

namespace {

// Returns the unit-norm state; sets `flagged` when the deviation was
// large enough to be worth reporting.
SinglePhotonState normalize_input(SinglePhotonState state, bool& flagged) {
  const double deviation = std::abs(state.norm_sq() - 1.0);
  if (deviation > tol::normalize_trigger) {
    flagged = true;
    return state.normalized();
  }
  if (deviation > tol::amplitude) {
    return state.normalized();
  }
  return state;
}

}  // namespace

PhotonPair::PhotonPair(SinglePhotonState a, SinglePhotonState b,
                       bool distinguishable_photons)
    : photon_a(std::move(a)),
      photon_b(std::move(b)),
      distinguishable(distinguishable_photons) {
  if (!photon_a.same_mode_set(photon_b)) {
    throw TopologyError("photon pair must share one mode set");
  }
  photon_a = normalize_input(std::move(photon_a), photon_a_was_normalized);
  photon_b = normalize_input(std::move(photon_b), photon_b_was_normalized);
}

PhotonPair PhotonPair::with_distinguishable(bool flag) const {
  PhotonPair copy = *this;
  copy.distinguishable = flag;
  return copy;
}

double prob_same_state_distinguishable(const PhotonPair& pair,
                                       const ModeId& target) {
  return std::norm(pair.photon_a.amplitude(target)) *
         std::norm(pair.photon_b.amplitude(target));
}

double prob_same_state_indistinguishable(const PhotonPair& pair,
                                         const ModeId& target) {
  const double joint = std::norm(pair.photon_a.amplitude(target) *
                                 pair.photon_b.amplitude(target));
  const double overlap_sq = std::norm(inner_product(pair.photon_a, pair.photon_b));
  return 2.0 * joint / (1.0 + overlap_sq);
}

BunchingReport bunching_beta(const PhotonPair& pair) {
  const double raw = std::norm(inner_product(pair.photon_a, pair.photon_b));
  // roundoff can push |I|^2 a few ulp outside [0, 1]; beta must stay in [1, 2]
  const double overlap_sq = std::clamp(raw, 0.0, 1.0);
  return BunchingReport{
      .overlap_sq = overlap_sq,
      .beta = 2.0 / (1.0 + overlap_sq),
      .n_b = 1.0 + overlap_sq,
      .n_d = 1.0,
      .was_normalized = pair.was_normalized(),
  };
}

}  // namespace bpi
