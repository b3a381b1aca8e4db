#include "dmu/density_matrix.hpp"

#include <cmath>

#include "dmu/constants.hpp"

namespace dmu {

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (!m_.is_finite()) throw InvalidStateError("density matrix has non-finite entries");
  if (m_.hermiticity_defect() > tol::kEig) {
    throw InvalidStateError("density matrix is not Hermitian");
  }
  if (std::abs(m_.trace() - Complex{1.0, 0.0}) > tol::kEig) {
    throw InvalidStateError("density matrix trace is not 1");
  }
  const EigenSystem es = hermitian_eig(m_);
  if (es.values.front() < -tol::kEig) {
    throw InvalidStateError("density matrix has a negative eigenvalue");
  }
}

DensityMatrix pure_state(const std::vector<Complex>& v) {
  const int n = static_cast<int>(v.size());
  double nrm2 = 0.0;
  for (const auto& x : v) nrm2 += std::norm(x);
  if (nrm2 <= 0.0) throw InvalidStateError("pure_state: zero vector");
  ComplexMatrix m(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = v[r] * std::conj(v[c]) / nrm2;
  return DensityMatrix(std::move(m));
}

DensityMatrix mix(double p, const DensityMatrix& a, const DensityMatrix& b) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParamDomainError("mix: weight must lie in [0, 1]");
  return DensityMatrix(p * a.matrix() + (1.0 - p) * b.matrix());
}

}  // namespace dmu
