#pragma once

// CSV and SVG emitters for the command-line tool. All functions are
// pure string builders with fixed formatting, so identical inputs give
// byte-identical artifacts.

#include <string>
#include <vector>

#include "bpi/hom.hpp"
#include "bpi/sweep.hpp"

namespace bpi::render {

/// Full-precision decimal (17 significant digits, round-trip exact).
std::string format_full(double value);

/// Columns: theta_c,theta_d,beta,degenerate. Degenerate cells leave the
/// beta field empty and set the marker to 1.
std::string sweep_csv(const SweepResult& result);

/// Columns: beta,p_11.
std::string dip_csv(const std::vector<DipPoint>& points);

/// Self-contained heatmap of beta over the (theta_c, theta_d) grid;
/// degenerate cells are drawn gray.
std::string sweep_svg(const SweepResult& result);

/// Self-contained line plot of the dip minimum versus beta.
std::string dip_svg(const std::vector<DipPoint>& points);

}  // namespace bpi::render
