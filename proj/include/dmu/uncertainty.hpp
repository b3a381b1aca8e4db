#pragma once

#include <array>
#include <optional>

#include "dmu/density_matrix.hpp"
#include "dmu/model.hpp"

namespace dmu {

/// A non-degenerate 2x2 Hermitian measurement with a fixed orthonormal
/// eigenbasis. The eigenbasis is computed once at construction so projectors
/// and overlaps are deterministic.
class Observable {
 public:
  /// Throws NotHermitianError or, for a (near-)degenerate spectrum,
  /// DegenerateObservableError.
  static Observable from_matrix(const ComplexMatrix& m);

  static const Observable& sigma_x();
  static const Observable& sigma_y();
  static const Observable& sigma_z();

  const ComplexMatrix& matrix() const { return mat_; }
  const EigenSystem& eigensystem() const { return es_; }
  /// Rank-1 projector v_i v_i^dagger onto eigenvector i (0 or 1).
  ComplexMatrix projector(int i) const;

 private:
  Observable(ComplexMatrix m, EigenSystem es) : mat_(std::move(m)), es_(std::move(es)) {}
  ComplexMatrix mat_;
  EigenSystem es_;
};

/// Projective measurement of `obs` on the first qubit with the outcome
/// forgotten: sum_i (P_i (x) I) rho (P_i (x) I). Leaves the second qubit's
/// reduced state untouched.
DensityMatrix post_measurement_state(const DensityMatrix& rho, const Observable& obs);

/// c = max_{i,j} |<r_i|s_j>|^2 over the two eigenbases; 1/2 for mutually
/// unbiased qubit bases, 1 for commuting observables.
double complementarity(const Observable& r, const Observable& s);

/// H(rho) - H(rho_B) in bits, where rho_B traces out the first qubit.
/// Negative values witness entanglement.
double conditional_entropy(const DensityMatrix& rho);

/// Probabilities of the two outcomes of measuring `obs` on the first qubit.
std::array<double, 2> outcome_probabilities(const DensityMatrix& rho, const Observable& obs);

/// Shannon entropy in bits of a two-outcome distribution.
double shannon_entropy(const std::array<double, 2>& probs);

/// Conditional entropies of the thermal state in closed form, for the fixed
/// measurement pair R = sigma_x, S = sigma_z. Evaluated with exponent shifts
/// (log-sum-exp for hAB) so large beta|J| cannot overflow.
struct ClosedFormEntropies {
  double hRB = 0.0;
  double hSB = 0.0;
  double hAB = 0.0;
};
ClosedFormEntropies closed_form_entropies(const ModelParams& p);

/// Everything the uncertainty analysis produces at one parameter point. The
/// entropies always come from the measurement-channel pipeline; when the
/// closed forms apply (default R = sigma_x, S = sigma_z) they are evaluated
/// as a cross-check and any disagreement is flagged, never substituted.
struct UncertaintyReport {
  ModelParams params;
  double c = 0.0;    // complementarity of the measurement pair
  double hRB = 0.0;  // H(R|B)
  double hSB = 0.0;  // H(S|B)
  double hAB = 0.0;  // H(A|B)
  double W = 0.0;    // lower bound log2(1/c) + hAB
  double L = 0.0;    // left side hRB + hSB
  std::optional<double> U;  // L / W; empty when |W| < tol::kUndefinedRatio
  double V = 0.0;    // L - W
  double C = 0.0;    // concurrence
  double Y = 0.0;    // mixedness
  bool closed_form_checked = false;
  double closed_form_deviation = 0.0;
  bool closed_form_deviates = false;
};

/// Report for the default pair R = sigma_x, S = sigma_z, with the closed-form
/// entropy cross-check attached.
UncertaintyReport uncertainty_report(const ModelParams& p);

/// Report for an arbitrary measurement pair; no closed forms exist here, so
/// no cross-check is attached.
UncertaintyReport uncertainty_report(const ModelParams& p, const Observable& r,
                                     const Observable& s);

/// Reduced state of the memory qubit, tr_A of the thermal state. Equals I/2
/// for every parameter choice of this model.
DensityMatrix reduced_memory_state(const ModelParams& p);

}  // namespace dmu
