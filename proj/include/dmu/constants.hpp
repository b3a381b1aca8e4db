#pragma once

// Central tolerance table. Every numeric comparison in the library uses one
// of these; tests and the acceptance suite reuse them so a tolerance is never
// re-declared ad hoc.
namespace dmu::tol {

// Hermiticity checks, eigensystem contracts, density-matrix invariants.
inline constexpr double kEig = 1e-10;

// Agreement between closed-form expressions and the spectral oracle.
inline constexpr double kNumeric = 1e-9;

// Agreement between closed-form conditional entropies and the
// measurement-channel pipeline.
inline constexpr double kEntropyMatch = 1e-6;

// Jacobi eigensolver: relative off-diagonal mass at convergence and the
// sweep budget.
inline constexpr double kJacobiOffDiag = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

// Spectral weights in [-kEntropyClamp, 0) are rounded to zero; anything
// below that is a genuine invariant violation.
inline constexpr double kEntropyClamp = 1e-10;

// |W| below this makes the ratio L/W undefined.
inline constexpr double kUndefinedRatio = 1e-9;

// Maximum interpolated deviation for the fixed-sign collapse claim to hold.
inline constexpr double kCollapse = 1e-3;

}  // namespace dmu::tol
