#include "bpi/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "bpi/interferometer.hpp"

namespace bpi {

namespace {

constexpr double half_pi = std::numbers::pi / 2;

std::optional<double> beta_at(double theta_a, double theta_b, double theta_c,
                              double theta_d) {
  try {
    return interferometer_beta(
               InterferometerConfig::from_angles(theta_a, theta_b, theta_c,
                                                 theta_d))
        .beta;
  } catch (const PostSelectionError&) {
    return std::nullopt;
  }
}

}  // namespace

SweepResult sweep_beta(double theta_a, double theta_b, std::size_t grid_n,
                       unsigned threads) {
  if (grid_n < 2) {
    throw InvalidParameterError("sweep needs at least a 2x2 grid");
  }
  if (!std::isfinite(theta_a) || !std::isfinite(theta_b)) {
    throw InvalidParameterError("sweep angles must be finite");
  }

  const double step = half_pi / static_cast<double>(grid_n - 1);
  std::vector<SweepCell> cells(grid_n * grid_n);

  auto fill_rows = [&](std::size_t row_begin, std::size_t row_end) {
    for (std::size_t ic = row_begin; ic < row_end; ++ic) {
      const double theta_c = static_cast<double>(ic) * step;
      for (std::size_t id = 0; id < grid_n; ++id) {
        const double theta_d = static_cast<double>(id) * step;
        cells[ic * grid_n + id] =
            SweepCell{theta_c, theta_d,
                      beta_at(theta_a, theta_b, theta_c, theta_d)};
      }
    }
  };

  unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(grid_n));
  if (workers == 1) {
    fill_rows(0, grid_n);
  } else {
    // workers own disjoint row ranges of the preallocated cell vector,
    // so the merged result cannot depend on scheduling
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (grid_n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = static_cast<std::size_t>(w) * chunk;
      const std::size_t end = std::min(grid_n, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(fill_rows, begin, end);
    }
    for (std::thread& t : pool) t.join();
  }

  SweepResult result{theta_a, theta_b, grid_n, std::move(cells), 0, 0.0, 0.0,
                     0.0};
  bool any = false;
  for (const SweepCell& cell : result.cells) {
    if (!cell.beta) {
      ++result.degenerate_count;
      continue;
    }
    if (!any) {
      result.beta_min = result.beta_max = *cell.beta;
      any = true;
    } else {
      result.beta_min = std::min(result.beta_min, *cell.beta);
      result.beta_max = std::max(result.beta_max, *cell.beta);
    }
  }
  if (!any) {
    throw PostSelectionError("every grid point is degenerate");
  }
  result.coverage_fraction = result.beta_max - result.beta_min;
  return result;
}

DesignSolution solve_for_beta(double target) {
  if (!(target >= 1.0 && target <= 2.0)) {
    throw InvalidParameterError("target beta must lie in [1, 2]");
  }
  const double overlap_sq = (2.0 - target) / target;
  const double theta_c =
      0.5 * std::asin(std::sqrt(std::clamp(overlap_sq, 0.0, 1.0)));
  const double theta_d = half_pi - theta_c;

  const double achieved =
      interferometer_beta(InterferometerConfig::from_angles(
                              std::numbers::pi / 4, std::numbers::pi / 4,
                              theta_c, theta_d))
          .beta;
  const double residual = std::abs(achieved - target);
  if (residual > tol::design_residual) {
    throw PostSelectionError("inverse design failed to reproduce the target");
  }
  return DesignSolution{theta_c, theta_d, achieved, residual};
}

}  // namespace bpi
