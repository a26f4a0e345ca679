#include "bpi/oracle.hpp"

#include <vector>

namespace bpi {

OutcomeKey make_outcome(ModeId m1, ModeId m2) {
  if (m2 < m1) std::swap(m1, m2);
  return {std::move(m1), std::move(m2)};
}

double TwoPhotonDistribution::total() const {
  double sum = 0.0;
  for (const auto& [key, p] : outcomes) sum += p;
  return sum;
}

double TwoPhotonDistribution::probability(const ModeId& m1,
                                          const ModeId& m2) const {
  auto it = outcomes.find(make_outcome(m1, m2));
  return it == outcomes.end() ? 0.0 : it->second;
}

std::set<ModeId> TwoPhotonDistribution::mode_set() const {
  std::set<ModeId> modes;
  for (const auto& [key, p] : outcomes) {
    modes.insert(key.first);
    modes.insert(key.second);
  }
  return modes;
}

TwoPhotonDistribution joint_distribution(const PhotonPair& pair) {
  const std::vector<ModeId> modes = pair.photon_a.modes();
  const std::size_t m = modes.size();

  std::vector<Amplitude> a(m), b(m);
  for (std::size_t i = 0; i < m; ++i) {
    a[i] = pair.photon_a.amplitude(modes[i]);
    b[i] = pair.photon_b.amplitude(modes[i]);
  }

  // labeled[i][j] = probability of photon 1 at modes[i], photon 2 at modes[j]
  std::vector<std::vector<double>> labeled(m, std::vector<double>(m, 0.0));
  double mass = 0.0;
  if (pair.distinguishable) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        labeled[i][j] = std::norm(a[i]) * std::norm(b[j]);
        mass += labeled[i][j];
      }
    }
  } else {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        labeled[i][j] = std::norm(a[i] * b[j] + b[i] * a[j]);
        mass += labeled[i][j];
      }
    }
  }

  TwoPhotonDistribution dist;
  dist.indistinguishable = !pair.distinguishable;
  for (std::size_t i = 0; i < m; ++i) {
    dist.outcomes[make_outcome(modes[i], modes[i])] = labeled[i][i] / mass;
    for (std::size_t j = i + 1; j < m; ++j) {
      dist.outcomes[make_outcome(modes[i], modes[j])] =
          (labeled[i][j] + labeled[j][i]) / mass;
    }
  }
  return dist;
}

ConditionedDistribution condition_on_empty_modes(
    const TwoPhotonDistribution& dist, const std::set<ModeId>& empty) {
  const std::set<ModeId> modes = dist.mode_set();
  for (const ModeId& mode : empty) {
    if (modes.count(mode) == 0) {
      throw TopologyError("conditioning mode " + mode +
                          " is not part of the distribution");
    }
  }
  if (empty.size() >= modes.size()) {
    throw TopologyError("empty set must be a strict subset of the modes");
  }

  TwoPhotonDistribution kept;
  kept.indistinguishable = dist.indistinguishable;
  double success = 0.0;
  for (const auto& [key, p] : dist.outcomes) {
    if (empty.count(key.first) || empty.count(key.second)) continue;
    kept.outcomes[key] = p;
    success += p;
  }
  if (success < tol::degenerate) {
    throw PostSelectionError(
        "post-selection success probability is (numerically) zero");
  }
  for (auto& [key, p] : kept.outcomes) p /= success;
  return ConditionedDistribution{std::move(kept), success};
}

}  // namespace bpi
