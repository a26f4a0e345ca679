#pragma once

#include <map>
#include <set>
#include <utility>

#include "bpi/bunching.hpp"
#include "bpi/core.hpp"

namespace bpi {

/// Unordered detector outcome {m, m'}; stored with lo <= hi.
using OutcomeKey = std::pair<ModeId, ModeId>;

/// Canonical key for the unordered pair (m1, m2); m1 == m2 is allowed.
OutcomeKey make_outcome(ModeId m1, ModeId m2);

/// Probability per unordered mode-pair outcome for one photon pair.
/// Every outcome over the pair's mode set is present, zeros included.
struct TwoPhotonDistribution {
  std::map<OutcomeKey, double> outcomes;
  bool indistinguishable = false;

  /// Sum of all stored probabilities: 1 for a full distribution, the
  /// success mass for a conditioned one before renormalization.
  double total() const;

  /// Probability of the unordered outcome {m1, m2}; 0 for outcomes that
  /// have been dropped by conditioning.
  double probability(const ModeId& m1, const ModeId& m2) const;

  /// Modes mentioned by the stored outcomes.
  std::set<ModeId> mode_set() const;
};

/// Brute-force two-photon outcome distribution, computed from explicit
/// labeled-particle amplitudes:
///
///   indistinguishable: T[m][m'] = a_m b_m' + b_m a_m', divided by the
///     explicitly summed |T|^2 (no overlap shortcut), unordered outcomes
///     folded from the labeled grid;
///   distinguishable: labeled probabilities |a_m|^2 |b_m'|^2, never
///     interfered, folded the same way.
///
/// This is the independent ground-truth route the closed forms are
/// tested against.
TwoPhotonDistribution joint_distribution(const PhotonPair& pair);

struct ConditionedDistribution {
  TwoPhotonDistribution distribution;  ///< renormalized to total() == 1
  double success_probability;          ///< pre-renormalization mass
};

/// Conditions on every mode in `empty` detecting zero photons, i.e.
/// keeps only outcomes disjoint from `empty` and renormalizes. `empty`
/// must be a strict subset of the distribution's modes (TopologyError
/// otherwise); a success mass below tol::degenerate throws
/// PostSelectionError.
ConditionedDistribution condition_on_empty_modes(
    const TwoPhotonDistribution& dist, const std::set<ModeId>& empty);

}  // namespace bpi
