#pragma once

#include "dmu/complex_matrix.hpp"

namespace dmu {

/// A validated density operator: Hermitian, unit trace, positive
/// semidefinite up to tolerance. Construction is the validation point; code
/// that holds a DensityMatrix may assume all three properties.
class DensityMatrix {
 public:
  /// Throws InvalidStateError when any property fails.
  explicit DensityMatrix(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return m_; }
  int dim() const { return m_.dim(); }
  const Complex& operator()(int r, int c) const { return m_(r, c); }

  /// Eigendecomposition of the state (ascending eigenvalues).
  EigenSystem eig() const { return hermitian_eig(m_); }

 private:
  ComplexMatrix m_;
};

/// Pure state |v><v| from an un-normalized state vector.
DensityMatrix pure_state(const std::vector<Complex>& v);

/// Convex combination p*a + (1-p)*b; p must lie in [0, 1].
DensityMatrix mix(double p, const DensityMatrix& a, const DensityMatrix& b);

}  // namespace dmu
