#pragma once

#include <vector>

#include "bpi/bunching.hpp"
#include "bpi/core.hpp"
#include "bpi/oracle.hpp"

namespace bpi {

/// Sends both photons of a two-mode pair through `bs` (the
/// lexicographically first mode is leg 1) and returns the brute-force
/// outcome distribution of whichever case the pair is flagged as.
/// Throws InvalidParameterError when the pair is not over exactly two
/// modes.
TwoPhotonDistribution hom_distribution(const PhotonPair& pair,
                                       const BeamSplitter& bs);

/// One point of the generalized dip: the output statistics of a pair on
/// a symmetric splitter, expressed through the bunching parameter.
struct DipPoint {
  double beta;
  double same_leg_distinguishable;    ///< both photons on one leg, distinguishable case
  double same_leg_indistinguishable;  ///< beta * same_leg_distinguishable
  double coincidence;                 ///< 1 - same_leg_indistinguishable, the dip minimum
};

/// Dip minimum for an arbitrary pair on the symmetric (theta = pi/4)
/// splitter. The same-leg distinguishable probability is computed, not
/// assumed to be 1/2, so the relation holds for arbitrary input states.
DipPoint dip_point(const PhotonPair& pair);

/// Dip minima for a list of beta values with the same-leg
/// distinguishable probability fixed at the symmetric-splitter value
/// 1/2, i.e. coincidence = 1 - beta/2. Throws InvalidParameterError for
/// beta outside [1, 2].
std::vector<DipPoint> dip_curve(const std::vector<double>& betas);

}  // namespace bpi
