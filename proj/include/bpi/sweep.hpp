#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bpi/core.hpp"

namespace bpi {

/// One grid point of a (theta_c, theta_d) sweep. `beta` is empty when
/// post-selection is impossible there; degeneracies are data, not
/// failures.
struct SweepCell {
  double theta_c;
  double theta_d;
  std::optional<double> beta;
};

struct SweepResult {
  double theta_a;
  double theta_b;
  std::size_t grid_n;           ///< points per axis, endpoints included
  std::vector<SweepCell> cells; ///< row-major: theta_c outer, theta_d inner
  std::size_t degenerate_count;
  double beta_min;
  double beta_max;
  /// (beta_max - beta_min) / 1.0, the fraction of the full [1, 2] range
  /// the network reaches.
  double coverage_fraction;
};

/// Evaluates the network's bunching parameter on a grid_n x grid_n
/// lattice over (theta_c, theta_d) in [0, pi/2]^2 with splitters A and B
/// fixed at the given angles. `threads` = 0 picks the hardware count;
/// the result is bit-identical regardless of the worker count.
SweepResult sweep_beta(double theta_a, double theta_b, std::size_t grid_n,
                       unsigned threads = 1);

/// Angles realizing a requested bunching parameter.
struct DesignSolution {
  double theta_c;
  double theta_d;
  double achieved_beta;  ///< re-evaluated through the full network
  double residual;       ///< |achieved_beta - target|, < tol::design_residual
};

/// Inverse design on the anti-diagonal slice theta_d = pi/2 - theta_c
/// (where |overlap|^2 = sin^2(2 theta_c)), with theta_a = theta_b = pi/4:
///
///   theta_c = asin(sqrt((2 - target) / target)) / 2
///
/// The answer is verified by forward evaluation through the full
/// network, never trusted from the slice formula alone. Throws
/// InvalidParameterError for targets outside [1, 2].
DesignSolution solve_for_beta(double target);

}  // namespace bpi
