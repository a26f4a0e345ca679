#pragma once

// Central numeric tolerances. Every comparison in the library routes
// through one of these constants.
namespace bpi::tol {

// Absolute tolerance for amplitude-level checks: unitarity, state norms,
// complex equality.
inline constexpr double amplitude = 1e-12;

// Absolute tolerance for probability-level checks: distribution sums,
// cross-checks between closed forms and brute-force enumeration.
inline constexpr double distribution = 1e-10;

// Squared-norm deviation above which an input state is auto-normalized
// and the normalization is reported to the caller.
inline constexpr double normalize_trigger = 1e-9;

// Post-selection success mass below this marks a degenerate configuration.
inline constexpr double degenerate = 1e-14;

// Maximum |achieved - target| accepted from the inverse design solver.
inline constexpr double design_residual = 1e-10;

}  // namespace bpi::tol
