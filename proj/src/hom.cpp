#include "bpi/hom.hpp"

#include <numbers>

namespace bpi {

TwoPhotonDistribution hom_distribution(const PhotonPair& pair,
                                       const BeamSplitter& bs) {
  const std::vector<ModeId> modes = pair.photon_a.modes();
  if (modes.size() != 2) {
    throw InvalidParameterError("HOM setup needs a pair over exactly two modes");
  }
  const std::pair<ModeId, ModeId> legs{modes[0], modes[1]};
  PhotonPair out(apply_beam_splitter(bs, pair.photon_a, legs, legs),
                 apply_beam_splitter(bs, pair.photon_b, legs, legs),
                 pair.distinguishable);
  return joint_distribution(out);
}

DipPoint dip_point(const PhotonPair& pair) {
  const BeamSplitter symmetric = BeamSplitter::from_theta(std::numbers::pi / 4);
  const TwoPhotonDistribution dist =
      hom_distribution(pair.with_distinguishable(true), symmetric);
  const std::vector<ModeId> modes = pair.photon_a.modes();
  const double same_leg_d = dist.probability(modes[0], modes[0]) +
                            dist.probability(modes[1], modes[1]);
  const double beta = bunching_beta(pair).beta;
  const double same_leg_id = beta * same_leg_d;
  return DipPoint{beta, same_leg_d, same_leg_id, 1.0 - same_leg_id};
}

std::vector<DipPoint> dip_curve(const std::vector<double>& betas) {
  std::vector<DipPoint> points;
  points.reserve(betas.size());
  for (double beta : betas) {
    if (!(beta >= 1.0 && beta <= 2.0)) {
      throw InvalidParameterError("beta must lie in [1, 2]");
    }
    points.push_back(DipPoint{beta, 0.5, beta / 2.0, 1.0 - beta / 2.0});
  }
  return points;
}

}  // namespace bpi
