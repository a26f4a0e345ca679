#pragma once

#include "bpi/bunching.hpp"
#include "bpi/core.hpp"

namespace bpi {

/// The four-splitter post-selection network.
///
/// Layout: photon A enters leg 2 of splitter A, photon B enters leg 2 of
/// splitter B. Splitter A feeds legs a1/a2, splitter B legs b1/b2; a2 and
/// b2 meet at splitter C (outputs c1, c2), a1 and b1 meet at splitter D
/// (outputs d1, d2). Detectors on c2 and d2 post-select: a run is kept
/// only when both read zero, leaving the photons on {c1, d1}.
struct InterferometerConfig {
  BeamSplitter splitter_a;
  BeamSplitter splitter_b;
  BeamSplitter splitter_c;
  BeamSplitter splitter_d;

  static InterferometerConfig from_angles(double theta_a, double theta_b,
                                          double theta_c, double theta_d);
};

/// Single-photon output amplitudes over {c1, c2, d1, d2}, before any
/// post-selection. Both states are normalized, and they are orthogonal
/// by unitarity of the network.
struct PropagatedPair {
  SinglePhotonState photon_a;
  SinglePhotonState photon_b;
};

/// Closed-form propagation through the network:
///   photon A: c1: r_C t_A, c2: t_C t_A, d1: r_D r_A, d2: t_D r_A
///   photon B: c1: t_C t_B, c2: r_C t_B, d1: t_D r_B, d2: r_D r_B
PropagatedPair propagate(const InterferometerConfig& config);

/// The post-selected photon pair on {c1, d1}.
struct PostSelectedPair {
  SinglePhotonState photon_a;  ///< (r_C t_A c1 + r_D r_A d1) / sqrt(n1)
  SinglePhotonState photon_b;  ///< (t_C t_B c1 + t_D r_B d1) / sqrt(n2)
  double n1;                   ///< |r_C t_A|^2 + |r_D r_A|^2
  double n2;                   ///< |t_C t_B|^2 + |t_D r_B|^2
  Amplitude overlap;           ///< <photon_a|photon_b>
};

/// Conditions on the c2/d2 detectors reading zero. Throws
/// PostSelectionError when either photon cannot reach {c1, d1}
/// (n1 or n2 below tol::degenerate).
PostSelectedPair post_select(const InterferometerConfig& config);

/// Bunching parameter realized by the network:
/// beta = 2 / (1 + |overlap|^2) of the post-selected pair.
BunchingReport interferometer_beta(const InterferometerConfig& config);

/// Probability that a run survives post-selection.
struct SuccessProbabilities {
  double distinguishable;    ///< n1 * n2
  double indistinguishable;  ///< n1 * n2 * (1 + |overlap|^2)
};

/// Total on every configuration: degenerate networks report (0, 0)
/// rather than throwing, since "no run ever survives" is a meaningful
/// success rate.
SuccessProbabilities success_probabilities(const InterferometerConfig& config);

}  // namespace bpi
