#include "bpi/core.hpp"

#include <cmath>

namespace bpi {

namespace {

bool finite(Amplitude z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

SinglePhotonState::SinglePhotonState(std::map<ModeId, Amplitude> amplitudes)
    : amps_(std::move(amplitudes)) {
  if (amps_.empty()) {
    throw InvalidParameterError("state needs at least one mode");
  }
  for (const auto& [mode, amp] : amps_) {
    if (!finite(amp)) {
      throw InvalidParameterError("non-finite amplitude on mode " + mode);
    }
  }
}

SinglePhotonState SinglePhotonState::two_mode(Amplitude q1, Amplitude q2) {
  return SinglePhotonState({{"q1", q1}, {"q2", q2}});
}

Amplitude SinglePhotonState::amplitude(const ModeId& mode) const {
  auto it = amps_.find(mode);
  if (it == amps_.end()) {
    throw TopologyError("mode " + mode + " is not part of this network");
  }
  return it->second;
}

std::vector<ModeId> SinglePhotonState::modes() const {
  std::vector<ModeId> out;
  out.reserve(amps_.size());
  for (const auto& [mode, amp] : amps_) out.push_back(mode);
  return out;
}

double SinglePhotonState::norm_sq() const {
  double total = 0.0;
  for (const auto& [mode, amp] : amps_) total += std::norm(amp);
  return total;
}

bool SinglePhotonState::is_normalized(double tolerance) const {
  return std::abs(norm_sq() - 1.0) <= tolerance;
}

SinglePhotonState SinglePhotonState::normalized() const {
  const double n2 = norm_sq();
  if (n2 < tol::degenerate) {
    throw InvalidParameterError("cannot normalize a zero state");
  }
  const double inv = 1.0 / std::sqrt(n2);
  std::map<ModeId, Amplitude> scaled = amps_;
  for (auto& [mode, amp] : scaled) amp *= inv;
  return SinglePhotonState(std::move(scaled));
}

bool SinglePhotonState::same_mode_set(const SinglePhotonState& other) const {
  if (amps_.size() != other.amps_.size()) return false;
  auto it = other.amps_.begin();
  for (const auto& [mode, amp] : amps_) {
    if (mode != it->first) return false;
    ++it;
  }
  return true;
}

BeamSplitter BeamSplitter::from_theta(double theta) {
  if (!std::isfinite(theta)) {
    throw InvalidParameterError("beam splitter angle must be finite");
  }
  return BeamSplitter(Amplitude(std::cos(theta), 0.0),
                      Amplitude(0.0, std::sin(theta)));
}

BeamSplitter BeamSplitter::from_coefficients(Amplitude t, Amplitude r) {
  if (!finite(t) || !finite(r)) {
    throw InvalidParameterError("beam splitter coefficients must be finite");
  }
  const double power = std::norm(t) + std::norm(r);
  if (std::abs(power - 1.0) > tol::amplitude) {
    throw InvalidParameterError("beam splitter violates |t|^2 + |r|^2 = 1");
  }
  const Amplitude cross = t * std::conj(r) + std::conj(t) * r;
  if (std::abs(cross) > tol::amplitude) {
    throw InvalidParameterError(
        "beam splitter violates t*conj(r) + conj(t)*r = 0");
  }
  return BeamSplitter(t, r);
}

SinglePhotonState apply_beam_splitter(const BeamSplitter& bs,
                                      const SinglePhotonState& state,
                                      std::pair<ModeId, ModeId> in,
                                      std::pair<ModeId, ModeId> out) {
  if (in.first == in.second || out.first == out.second) {
    throw TopologyError("beam splitter legs must be distinct modes");
  }
  if (!state.has_mode(in.first) || !state.has_mode(in.second)) {
    throw TopologyError("input legs (" + in.first + ", " + in.second +
                        ") are not both part of the network");
  }

  std::map<ModeId, Amplitude> amps = state.amplitudes();
  const Amplitude a1 = amps.at(in.first);
  const Amplitude a2 = amps.at(in.second);
  amps.erase(in.first);
  amps.erase(in.second);

  for (const ModeId& target : {out.first, out.second}) {
    auto it = amps.find(target);
    if (it != amps.end() && std::abs(it->second) > tol::amplitude) {
      throw TopologyError("output leg " + target +
                          " would merge with an occupied mode");
    }
  }

  const Amplitude t = bs.transmission();
  const Amplitude r = bs.reflection();
  amps[out.first] += t * a1 + r * a2;
  amps[out.second] += r * a1 + t * a2;
  return SinglePhotonState(std::move(amps));
}

Amplitude inner_product(const SinglePhotonState& a, const SinglePhotonState& b) {
  if (!a.same_mode_set(b)) {
    throw TopologyError("inner product requires identical mode sets");
  }
  Amplitude sum(0.0, 0.0);
  auto ib = b.amplitudes().begin();
  for (const auto& [mode, amp] : a.amplitudes()) {
    sum += std::conj(amp) * ib->second;
    ++ib;
  }
  return sum;
}

}  // namespace bpi
