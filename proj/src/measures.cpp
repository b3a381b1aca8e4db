#include "dmu/measures.hpp"

#include <algorithm>
#include <cmath>

#include "dmu/constants.hpp"

namespace dmu {

double von_neumann_entropy(const DensityMatrix& rho) {
  double h = 0.0;
  for (const double lam : rho.eig().values) {
    if (lam < -tol::kEntropyClamp) {
      throw InvalidStateError("entropy of a state with a negative eigenvalue");
    }
    if (lam > 0.0) h -= lam * std::log2(lam);
  }
  return h;
}

namespace {

const ComplexMatrix& spin_flip_operator() {
  static const ComplexMatrix theta = kron(pauli_y(), pauli_y());
  return theta;
}

}  // namespace

double concurrence_wootters(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw DimensionMismatchError("concurrence expects a two-qubit state");
  const ComplexMatrix sqrt_rho =
      spectral_apply(rho.eig(), [](double lam) { return lam > 0.0 ? std::sqrt(lam) : 0.0; });
  const ComplexMatrix m = sqrt_rho * spin_flip_operator() * sqrt_rho.conjugate();

  // Singular values of m via the Hermitian embedding [[0, m], [m^dagger, 0]],
  // whose spectrum is {+s_i, -s_i}.
  ComplexMatrix embed(8);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      embed(r, 4 + c) = m(r, c);
      embed(4 + r, c) = std::conj(m(c, r));
    }
  }
  const EigenSystem es = hermitian_eig(embed);
  const double s1 = std::max(0.0, es.values[7]);
  const double s2 = std::max(0.0, es.values[6]);
  const double s3 = std::max(0.0, es.values[5]);
  const double s4 = std::max(0.0, es.values[4]);
  return std::max(0.0, s1 - s2 - s3 - s4);
}

double concurrence_closed(const ModelParams& p) {
  p.validate();
  const double beta = p.beta();
  const double e1 = -0.5 * beta * p.J;
  const double ep = 0.5 * beta * (p.J - p.delta());
  const double em = 0.5 * beta * (p.J + p.delta());
  const double s = std::max({e1, ep, em});
  const double w1 = std::exp(e1 - s);
  const double wp = std::exp(ep - s);
  const double wm = std::exp(em - s);
  const double z = 2.0 * w1 + wp + wm;
  return 2.0 * std::max(0.5 * std::abs(wp - wm) - w1, 0.0) / z;
}

double mixedness(const DensityMatrix& rho) {
  // For Hermitian rho, tr(rho^2) equals the squared Frobenius norm.
  const double fn = rho.matrix().frobenius_norm();
  return std::max(0.0, 1.0 - fn * fn);
}

MixednessCheck mixedness_closed(const ModelParams& p) {
  p.validate();
  const double beta = p.beta();
  const double q1 = beta * (p.J + p.delta());
  const double q2 = beta * p.J;
  const double q3 = 0.5 * beta * p.delta();

  // Numerator and denominator share the scale exp(q1 + v) / exp(2u), which
  // never exceeds 1, so the printed expression can be evaluated at any beta.
  const double u = std::max({q1, q2, q3});
  const double den = std::exp(q1 - u) + std::exp(q2 - u) + 2.0 * std::exp(q3 - u);
  const double v = std::max(std::abs(q2), std::abs(q3));
  const double num = 0.5 * (std::exp(q2 - v) + std::exp(-q2 - v)) + std::exp(q3 - v) +
                     std::exp(-q3 - v);

  MixednessCheck out;
  out.closed_form = 4.0 * std::exp(q1 + v - 2.0 * u) * num / (den * den);
  out.value = mixedness(thermal_state_numeric(p));
  out.deviates = std::abs(out.value - out.closed_form) > tol::kNumeric;
  return out;
}

double convexity_margin(const DensityMatrix& a, const DensityMatrix& b, double x) {
  if (a.dim() != b.dim()) throw DimensionMismatchError("convexity margin needs equal dims");
  const DensityMatrix blend = mix(x, a, b);
  return mixedness(blend) - (x * mixedness(a) + (1.0 - x) * mixedness(b));
}

DensityMatrix random_density_matrix(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = Complex{gauss(rng), gauss(rng)};
  ComplexMatrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace();
  return DensityMatrix(std::move(rho));
}

}  // namespace dmu
