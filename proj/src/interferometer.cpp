#include "bpi/interferometer.hpp"

#include <cmath>

namespace bpi {

InterferometerConfig InterferometerConfig::from_angles(double theta_a,
                                                       double theta_b,
                                                       double theta_c,
                                                       double theta_d) {
  return InterferometerConfig{
      BeamSplitter::from_theta(theta_a), BeamSplitter::from_theta(theta_b),
      BeamSplitter::from_theta(theta_c), BeamSplitter::from_theta(theta_d)};
}

PropagatedPair propagate(const InterferometerConfig& config) {
  const Amplitude ta = config.splitter_a.transmission();
  const Amplitude ra = config.splitter_a.reflection();
  const Amplitude tb = config.splitter_b.transmission();
  const Amplitude rb = config.splitter_b.reflection();
  const Amplitude tc = config.splitter_c.transmission();
  const Amplitude rc = config.splitter_c.reflection();
  const Amplitude td = config.splitter_d.transmission();
  const Amplitude rd = config.splitter_d.reflection();

  SinglePhotonState photon_a({{"c1", rc * ta},
                              {"c2", tc * ta},
                              {"d1", rd * ra},
                              {"d2", td * ra}});
  SinglePhotonState photon_b({{"c1", tc * tb},
                              {"c2", rc * tb},
                              {"d1", td * rb},
                              {"d2", rd * rb}});
  return PropagatedPair{std::move(photon_a), std::move(photon_b)};
}

PostSelectedPair post_select(const InterferometerConfig& config) {
  const PropagatedPair full = propagate(config);
  const Amplitude a_c1 = full.photon_a.amplitude("c1");
  const Amplitude a_d1 = full.photon_a.amplitude("d1");
  const Amplitude b_c1 = full.photon_b.amplitude("c1");
  const Amplitude b_d1 = full.photon_b.amplitude("d1");

  const double n1 = std::norm(a_c1) + std::norm(a_d1);
  const double n2 = std::norm(b_c1) + std::norm(b_d1);
  if (n1 < tol::degenerate) {
    throw PostSelectionError("photon A cannot reach the kept legs {c1, d1}");
  }
  if (n2 < tol::degenerate) {
    throw PostSelectionError("photon B cannot reach the kept legs {c1, d1}");
  }

  const double s1 = 1.0 / std::sqrt(n1);
  const double s2 = 1.0 / std::sqrt(n2);
  SinglePhotonState photon_a({{"c1", a_c1 * s1}, {"d1", a_d1 * s1}});
  SinglePhotonState photon_b({{"c1", b_c1 * s2}, {"d1", b_d1 * s2}});
  const Amplitude overlap = inner_product(photon_a, photon_b);
  return PostSelectedPair{std::move(photon_a), std::move(photon_b), n1, n2,
                          overlap};
}

BunchingReport interferometer_beta(const InterferometerConfig& config) {
  const PostSelectedPair pair = post_select(config);
  return bunching_beta(PhotonPair(pair.photon_a, pair.photon_b, false));
}

SuccessProbabilities success_probabilities(const InterferometerConfig& config) {
  const PropagatedPair full = propagate(config);
  const double n1 = std::norm(full.photon_a.amplitude("c1")) +
                    std::norm(full.photon_a.amplitude("d1"));
  const double n2 = std::norm(full.photon_b.amplitude("c1")) +
                    std::norm(full.photon_b.amplitude("d1"));
  if (n1 < tol::degenerate || n2 < tol::degenerate) {
    // degenerate network: no run can ever survive post-selection
    return SuccessProbabilities{0.0, 0.0};
  }
  const PostSelectedPair pair = post_select(config);
  const double p_dist = pair.n1 * pair.n2;
  return SuccessProbabilities{p_dist,
                              p_dist * (1.0 + std::norm(pair.overlap))};
}

}  // namespace bpi
