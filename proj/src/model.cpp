#include "dmu/model.hpp"

#include <algorithm>
#include <cmath>

#include "dmu/constants.hpp"

namespace dmu {

double ModelParams::delta() const { return 2.0 * J * std::sqrt(1.0 + D * D); }

double ModelParams::theta() const { return std::atan(D); }

void ModelParams::validate() const {
  if (!std::isfinite(J) || !std::isfinite(D) || !std::isfinite(T)) {
    throw ParamDomainError("model parameters must be finite");
  }
  if (J == 0.0) throw ParamDomainError("coupling J must be nonzero");
  if (D < 0.0) throw ParamDomainError("interaction strength D must be >= 0");
  if (T <= 0.0) throw ParamDomainError("temperature T must be > 0");
}

ComplexMatrix build_hamiltonian(const ModelParams& p) {
  p.validate();
  const ComplexMatrix heisenberg = kron(pauli_x(), pauli_x()) + kron(pauli_y(), pauli_y()) +
                                   kron(pauli_z(), pauli_z());
  const ComplexMatrix dm = kron(pauli_x(), pauli_y()) - kron(pauli_y(), pauli_x());
  return (0.5 * p.J) * (heisenberg + p.D * dm);
}

namespace {

void set_column(ComplexMatrix& m, int col, const std::vector<Complex>& v) {
  for (int r = 0; r < m.dim(); ++r) m(r, col) = v[r];
}

std::vector<Complex> phase_fixed(std::vector<Complex> v) {
  for (const auto& x : v) {
    if (std::abs(x) > 1e-9) {
      const Complex phase = std::conj(x) / std::abs(x);
      for (auto& y : v) y *= phase;
      break;
    }
  }
  return v;
}

}  // namespace

EigenSystem analytic_eigensystem(const ModelParams& p) {
  p.validate();
  const double half = 0.5 * std::sqrt(2.0);
  const Complex eit = std::polar(1.0, p.theta());

  struct Level {
    double energy;
    std::vector<Complex> vec;
  };
  const Level levels[4] = {
      {0.5 * p.J, {1.0, 0.0, 0.0, 0.0}},
      {-0.5 * p.J + 0.5 * p.delta(), phase_fixed({0.0, half * eit, half, 0.0})},
      {-0.5 * p.J - 0.5 * p.delta(), phase_fixed({0.0, -half * eit, half, 0.0})},
      {0.5 * p.J, {0.0, 0.0, 0.0, 1.0}},
  };

  std::vector<int> order = {0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return levels[i].energy < levels[j].energy; });

  EigenSystem es;
  es.values.resize(4);
  es.vectors = ComplexMatrix(4);
  for (int col = 0; col < 4; ++col) {
    es.values[col] = levels[order[col]].energy;
    set_column(es.vectors, col, levels[order[col]].vec);
  }
  return es;
}

DensityMatrix thermal_state_numeric(const ModelParams& p) {
  p.validate();
  const EigenSystem es = hermitian_eig(build_hamiltonian(p));
  const double beta = p.beta();
  const double e_min = es.values.front();
  ComplexMatrix rho = spectral_apply(es, [&](double e) { return std::exp(-beta * (e - e_min)); });
  rho *= 1.0 / rho.trace();
  return DensityMatrix(std::move(rho));
}

DensityMatrix thermal_state_closed(const ModelParams& p) {
  p.validate();
  const double beta = p.beta();
  const double j = p.J;
  const double d = p.delta();

  // Gibbs exponents of the four levels, shifted by their maximum so every
  // exponential stays in (0, 1].
  const double e1 = -0.5 * beta * j;       // |ee> and |gg>
  const double ep = 0.5 * beta * (j - d);  // entangled level at -J/2 + delta/2
  const double em = 0.5 * beta * (j + d);  // entangled level at -J/2 - delta/2
  const double s = std::max({e1, ep, em});
  const double w1 = std::exp(e1 - s);
  const double wp = std::exp(ep - s);
  const double wm = std::exp(em - s);
  const double z = 2.0 * w1 + wp + wm;

  ComplexMatrix rho(4);
  rho(0, 0) = w1 / z;
  rho(3, 3) = w1 / z;
  rho(1, 1) = (wp + wm) / (2.0 * z);
  rho(2, 2) = rho(1, 1);
  rho(1, 2) = std::polar(1.0, p.theta()) * ((wp - wm) / (2.0 * z));
  rho(2, 1) = std::conj(rho(1, 2));
  return DensityMatrix(std::move(rho));
}

DensityMatrix bell_plus_state(double theta) {
  return pure_state({0.0, std::polar(1.0, theta), 1.0, 0.0});
}

DensityMatrix bell_minus_state(double theta) {
  return pure_state({0.0, -std::polar(1.0, theta), 1.0, 0.0});
}

DensityMatrix basis_state(int index) {
  if (index < 0 || index > 3) throw ParamDomainError("basis state index must be 0..3");
  std::vector<Complex> v(4);
  v[index] = 1.0;
  return pure_state(v);
}

DensityMatrix ground_state(const ModelParams& p) {
  p.validate();
  if (p.J > 0.0) return bell_minus_state(p.theta());
  if (p.D > 0.0) return bell_plus_state(p.theta());
  throw ParamDomainError("ground level is triply degenerate for J < 0, D = 0");
}

}  // namespace dmu
