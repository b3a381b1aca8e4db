#include "dmu/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dmu/constants.hpp"

namespace dmu {

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(static_cast<int>(rows.size())) {
  a_.reserve(static_cast<size_t>(dim_) * dim_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dim_) {
      throw DimensionMismatchError("matrix initializer rows must be square");
    }
    a_.insert(a_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (dim_ != o.dim_) throw DimensionMismatchError("matrix addition dimension mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (dim_ != o.dim_) throw DimensionMismatchError("matrix subtraction dimension mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& x : a_) x *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatchError("matrix product dimension mismatch");
  const int n = a.dim_;
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out = *this;
  for (auto& x : out.a_) x = std::conj(x);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : a_) m = std::max(m, std::abs(x));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& x : a_) s += std::norm(x);
  return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
  double m = 0.0;
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c)
      m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return m;
}

bool ComplexMatrix::is_finite() const {
  for (const auto& x : a_)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  return true;
}

const ComplexMatrix& pauli_x() {
  static const ComplexMatrix m{{0.0, 1.0}, {1.0, 0.0}};
  return m;
}

const ComplexMatrix& pauli_y() {
  static const ComplexMatrix m{{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}};
  return m;
}

const ComplexMatrix& pauli_z() {
  static const ComplexMatrix m{{1.0, 0.0}, {0.0, -1.0}};
  return m;
}

const ComplexMatrix& identity2() {
  static const ComplexMatrix m = ComplexMatrix::identity(2);
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int na = a.dim();
  const int nb = b.dim();
  ComplexMatrix out(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix partial_trace_first(const ComplexMatrix& rho) {
  if (rho.dim() != 4) throw DimensionMismatchError("partial trace expects a 4x4 operator");
  ComplexMatrix out(2);
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l)
      out(k, l) = rho(0 * 2 + k, 0 * 2 + l) + rho(1 * 2 + k, 1 * 2 + l);
  return out;
}

namespace {

/// One two-sided rotation zeroing a[p][q]. The rotation is the complex Jacobi
/// unitary U with U_pp = c, U_pq = s e^{i phi}, U_qp = -s e^{-i phi},
/// U_qq = c, where phi = arg(a_pq) and (c, s) solve the 2x2 Hermitian
/// subproblem exactly.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
  const Complex apq = a(p, q);
  const double m = std::abs(apq);
  if (m == 0.0) return;
  const double phi = std::arg(apq);
  const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * m);
  double t;
  if (tau == 0.0) {
    t = 1.0;
  } else {
    t = std::copysign(1.0, tau) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex eip = std::polar(1.0, phi);

  const int n = a.dim();
  ComplexMatrix u = ComplexMatrix::identity(n);
  u(p, p) = c;
  u(p, q) = s * eip;
  u(q, p) = -s * std::conj(eip);
  u(q, q) = c;

  a = u.adjoint() * a * u;
  v = v * u;
}

double offdiag_frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  const int n = a.dim();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

}  // namespace

EigenSystem hermitian_eig(const ComplexMatrix& a) {
  if (a.hermiticity_defect() > tol::kEig) {
    throw NotHermitianError("hermitian_eig: input is not Hermitian");
  }
  const int n = a.dim();

  // Work on the exactly Hermitian average of a and its adjoint so roundoff in
  // the caller cannot leak into the iteration.
  ComplexMatrix w(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) w(r, c) = 0.5 * (a(r, c) + std::conj(a(c, r)));

  ComplexMatrix v = ComplexMatrix::identity(n);
  const double stop = tol::kJacobiOffDiag * std::max(1.0, w.frobenius_norm());
  for (int sweep = 0; sweep < tol::kJacobiMaxSweeps; ++sweep) {
    if (offdiag_frobenius(w) <= stop) break;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) jacobi_rotate(w, v, p, q);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return w(i, i).real() < w(j, j).real(); });

  EigenSystem es;
  es.values.resize(n);
  es.vectors = ComplexMatrix(n);
  for (int col = 0; col < n; ++col) {
    const int src = order[col];
    es.values[col] = w(src, src).real();
    // Rotate the phase so the first non-negligible component is real positive.
    Complex phase = 1.0;
    for (int r = 0; r < n; ++r) {
      const Complex x = v(r, src);
      if (std::abs(x) > 1e-9) {
        phase = std::conj(x) / std::abs(x);
        break;
      }
    }
    for (int r = 0; r < n; ++r) es.vectors(r, col) = v(r, src) * phase;
  }
  return es;
}

}  // namespace dmu
