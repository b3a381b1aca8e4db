#pragma once

#include <random>

#include "dmu/density_matrix.hpp"
#include "dmu/model.hpp"

namespace dmu {

/// -sum lambda_i log2 lambda_i in bits, with 0 log 0 = 0. Eigenvalues in
/// [-tol::kEntropyClamp, 0) count as 0; anything lower throws
/// InvalidStateError.
double von_neumann_entropy(const DensityMatrix& rho);

/// Wootters concurrence of a two-qubit state: max(0, 2 max_i s_i - sum s_i)
/// where the s_i are the square roots of the eigenvalues of rho.(sy sy).
/// rho*.(sy sy). The s_i are computed as singular values of
/// sqrt(rho) (sy sy) conj(sqrt(rho)), which keeps them accurate even when
/// they sit near zero. Reference implementation for concurrence_closed.
double concurrence_wootters(const DensityMatrix& rho);

/// Thermal-state concurrence in closed form, shift-protected against
/// overflow. Matches concurrence_wootters(thermal_state_numeric(p)).
double concurrence_closed(const ModelParams& p);

/// Linear entropy 1 - tr(rho^2); 0 for pure states, 1 - 1/d at the maximally
/// mixed state.
double mixedness(const DensityMatrix& rho);

/// Closed-form mixedness of the thermal state plus its numeric cross-check.
/// `value` is the numeric result and is authoritative; `deviates` reports a
/// disagreement beyond tol::kNumeric.
struct MixednessCheck {
  double value = 0.0;
  double closed_form = 0.0;
  bool deviates = false;
};
MixednessCheck mixedness_closed(const ModelParams& p);

/// Y(x a + (1-x) b) - [x Y(a) + (1-x) Y(b)]; nonnegative because mixedness
/// is concave in the state.
double convexity_margin(const DensityMatrix& a, const DensityMatrix& b, double x);

/// Random full-rank state G G^dagger / tr(G G^dagger) with complex Gaussian
/// G, for property suites.
DensityMatrix random_density_matrix(std::mt19937_64& rng, int dim);

}  // namespace dmu
