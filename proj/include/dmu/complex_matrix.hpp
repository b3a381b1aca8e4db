#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "dmu/errors.hpp"

namespace dmu {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Everything this library builds is
/// 2x2 or 4x4 (plus an 8x8 Hermitian embedding inside the concurrence), so
/// the implementation favors clarity over asymptotics.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {}

  /// Build from nested rows; all rows must have length equal to the row count.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(int dim);

  int dim() const { return dim_; }

  Complex& operator()(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
  const Complex& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);
  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;  // entrywise, no transpose
  Complex trace() const;

  double max_abs() const;
  double frobenius_norm() const;
  /// max entrywise |a - a^dagger|
  double hermiticity_defect() const;
  bool is_finite() const;

 private:
  int dim_ = 0;
  std::vector<Complex> a_;
};

// 2x2 operator constants (basis {|e>, |g>}, excited first).
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();
const ComplexMatrix& identity2();

/// Tensor product: (a (x) b)[i*dim(b)+k, j*dim(b)+l] = a[i,j] * b[k,l].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace out the first qubit of a two-qubit operator:
/// out[k,l] = sum_i rho[i*2+k, i*2+l]. Input must be 4x4.
ComplexMatrix partial_trace_first(const ComplexMatrix& rho);

/// Eigenvalues ascending, paired orthonormal eigenvectors as the columns of
/// `vectors`. Ties keep the pre-sort column order, and each vector's first
/// component above 1e-9 in magnitude is made real positive, so identical
/// inputs always produce identical output.
struct EigenSystem {
  std::vector<double> values;
  ComplexMatrix vectors;
};

/// Cyclic complex Jacobi diagonalization. Throws NotHermitianError when the
/// entrywise defect |a - a^dagger| exceeds tol::kEig.
EigenSystem hermitian_eig(const ComplexMatrix& a);

/// sum_i f(lambda_i) v_i v_i^dagger from a precomputed eigensystem.
template <class F>
ComplexMatrix spectral_apply(const EigenSystem& es, F&& f) {
  const int n = es.vectors.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) {
    const double w = f(es.values[i]);
    if (w == 0.0) continue;
    for (int r = 0; r < n; ++r) {
      const Complex vr = es.vectors(r, i);
      for (int c = 0; c < n; ++c) {
        out(r, c) += w * vr * std::conj(es.vectors(c, i));
      }
    }
  }
  return out;
}

/// Matrix function of a Hermitian matrix through its spectral decomposition.
template <class F>
ComplexMatrix mat_func(const ComplexMatrix& a, F&& f) {
  return spectral_apply(hermitian_eig(a), std::forward<F>(f));
}

}  // namespace dmu
