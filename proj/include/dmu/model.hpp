#pragma once

#include "dmu/complex_matrix.hpp"
#include "dmu/density_matrix.hpp"

namespace dmu {

/// Couplings and temperature for the two-qubit chain. Energy units with the
/// Boltzmann constant set to 1, so beta = 1/T.
struct ModelParams {
  double J = 1.0;  // exchange coupling, nonzero
  double D = 0.0;  // antisymmetric-exchange strength along z, >= 0
  double T = 1.0;  // temperature, > 0

  double beta() const { return 1.0 / T; }
  /// Gap between the two entangled levels; carries the sign of J.
  double delta() const;
  /// Off-diagonal phase angle of the coupling, arctan(D).
  double theta() const;

  /// Throws ParamDomainError unless J != 0, D >= 0, T > 0 and all finite.
  void validate() const;
};

/// Two-qubit Hamiltonian in the ordered basis {|ee>, |eg>, |ge>, |gg>}:
/// (J/2) [sx sx + sy sy + sz sz + D (sx sy - sy sx)] acting on qubits 1, 2.
ComplexMatrix build_hamiltonian(const ModelParams& p);

/// Closed-form spectrum: J/2 twice (|ee>, |gg>) and -J/2 +- delta/2 for the
/// states (|ge> +- e^{i theta} |eg>)/sqrt(2). Same ordering and phase
/// conventions as hermitian_eig, so the two agree column by column away from
/// degeneracies.
EigenSystem analytic_eigensystem(const ModelParams& p);

/// Gibbs state exp(-beta H)/Z through the spectral decomposition of H, with
/// the smallest energy subtracted before exponentiating. Reference
/// implementation that every closed form is checked against.
DensityMatrix thermal_state_numeric(const ModelParams& p);

/// Gibbs state from the closed-form matrix elements, evaluated with a shared
/// exponent shift so large beta|J| cannot overflow. Matches
/// thermal_state_numeric entrywise.
DensityMatrix thermal_state_closed(const ModelParams& p);

/// (|ge> + e^{i theta} |eg>)/sqrt(2) as a density matrix.
DensityMatrix bell_plus_state(double theta);
/// (|ge> - e^{i theta} |eg>)/sqrt(2) as a density matrix.
DensityMatrix bell_minus_state(double theta);
/// Computational basis state |index> of the four-dimensional space.
DensityMatrix basis_state(int index);

/// T -> 0 limit: |-> for J > 0, |+> for J < 0 with D > 0. Throws
/// ParamDomainError for J < 0, D = 0, where the ground level is
/// triply degenerate and no pure limit exists.
DensityMatrix ground_state(const ModelParams& p);

}  // namespace dmu
