#include "dmu/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "dmu/constants.hpp"
#include "dmu/measures.hpp"

namespace dmu {

Observable Observable::from_matrix(const ComplexMatrix& m) {
  if (m.dim() != 2) throw DimensionMismatchError("observables must be 2x2");
  EigenSystem es = hermitian_eig(m);
  const double scale = std::max({1.0, std::abs(es.values[0]), std::abs(es.values[1])});
  if (std::abs(es.values[1] - es.values[0]) <= tol::kEig * scale) {
    throw DegenerateObservableError("observable has a degenerate spectrum");
  }
  return Observable(m, std::move(es));
}

const Observable& Observable::sigma_x() {
  static const Observable obs = Observable::from_matrix(pauli_x());
  return obs;
}

const Observable& Observable::sigma_y() {
  static const Observable obs = Observable::from_matrix(pauli_y());
  return obs;
}

const Observable& Observable::sigma_z() {
  static const Observable obs = Observable::from_matrix(pauli_z());
  return obs;
}

ComplexMatrix Observable::projector(int i) const {
  ComplexMatrix p(2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) p(r, c) = es_.vectors(r, i) * std::conj(es_.vectors(c, i));
  return p;
}

DensityMatrix post_measurement_state(const DensityMatrix& rho, const Observable& obs) {
  ComplexMatrix out(4);
  for (int i = 0; i < 2; ++i) {
    const ComplexMatrix pi = kron(obs.projector(i), identity2());
    out += pi * rho.matrix() * pi;
  }
  return DensityMatrix(std::move(out));
}

double complementarity(const Observable& r, const Observable& s) {
  double c = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Complex overlap = 0.0;
      for (int k = 0; k < 2; ++k) {
        overlap += std::conj(r.eigensystem().vectors(k, i)) * s.eigensystem().vectors(k, j);
      }
      c = std::max(c, std::norm(overlap));
    }
  }
  return c;
}

double conditional_entropy(const DensityMatrix& rho) {
  const DensityMatrix memory(partial_trace_first(rho.matrix()));
  return von_neumann_entropy(rho) - von_neumann_entropy(memory);
}

std::array<double, 2> outcome_probabilities(const DensityMatrix& rho, const Observable& obs) {
  std::array<double, 2> probs{};
  for (int i = 0; i < 2; ++i) {
    const ComplexMatrix pi = kron(obs.projector(i), identity2());
    probs[i] = (pi * rho.matrix()).trace().real();
  }
  return probs;
}

double shannon_entropy(const std::array<double, 2>& probs) {
  double h = 0.0;
  for (const double p : probs) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

namespace {

double log_sum_exp(std::initializer_list<double> xs) {
  const double m = std::max(xs);
  double s = 0.0;
  for (const double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

/// x log2(x / (2 total)) under the 0 log 0 = 0 convention; shifted weights
/// can underflow to exactly zero at extreme beta.
double entropy_term(double x, double total) {
  return x > 0.0 ? x * std::log2(x / (2.0 * total)) : 0.0;
}

}  // namespace

ClosedFormEntropies closed_form_entropies(const ModelParams& p) {
  p.validate();
  const double beta = p.beta();
  const double j = p.J;
  const double d = p.delta();
  ClosedFormEntropies out;

  // H(R|B): the two distinct eigenvalue weights are exp(beta J) + exp(beta
  // delta / 2) and exp(beta delta / 2) + exp(beta (J + delta)). Their entropy
  // formula only uses ratios, so all exponents are shifted by the maximum.
  {
    const double a1 = beta * j;
    const double a2 = 0.5 * beta * d;
    const double a3 = beta * (j + d);
    const double m = std::max({a1, a2, a3});
    const double l1 = std::exp(a1 - m) + std::exp(a2 - m);
    const double l2 = std::exp(a2 - m) + std::exp(a3 - m);
    const double total = l1 + l2;
    out.hRB = -(entropy_term(l1, total) + entropy_term(l2, total)) / total - 1.0;
  }

  // H(S|B): weights 1 and exp(beta J) cosh(beta delta / 2), same pattern.
  {
    const double b1 = beta * (j + 0.5 * d);
    const double b2 = beta * (j - 0.5 * d);
    const double m = std::max({0.0, b1, b2});
    const double d1 = std::exp(-m);
    const double d2 = 0.5 * (std::exp(b1 - m) + std::exp(b2 - m));
    const double total = d1 + d2;
    out.hSB = -(entropy_term(d1, total) + entropy_term(d2, total)) / total - 1.0;
  }

  // H(A|B): log2(O1)/O1 + 2 log2(O2)/O2 + (O3/O2)(log2(O2) - log2(O3)) - 1
  // with O1 = 1 + e^{beta delta} + 2 e^{beta(delta/2 - J)}, O2 = Z e^{beta
  // J/2}, O3 = e^{beta(J + delta/2)}. O1, O2 >= 1 and O3 < O2, so in log
  // space every term stays finite.
  {
    const double ln2 = std::log(2.0);
    const double ln_o1 = log_sum_exp({0.0, beta * d, ln2 + beta * (0.5 * d - j)});
    const double ln_z =
        log_sum_exp({ln2 - 0.5 * beta * j, 0.5 * beta * (j - d), 0.5 * beta * (j + d)});
    const double ln_o2 = ln_z + 0.5 * beta * j;
    const double ln_o3 = beta * (j + 0.5 * d);
    out.hAB = (ln_o1 * std::exp(-ln_o1) + 2.0 * ln_o2 * std::exp(-ln_o2) +
               std::exp(ln_o3 - ln_o2) * (ln_o2 - ln_o3)) /
                  ln2 -
              1.0;
  }
  return out;
}

namespace {

UncertaintyReport build_report(const ModelParams& p, const Observable& r, const Observable& s) {
  const DensityMatrix rho = thermal_state_numeric(p);
  UncertaintyReport rep;
  rep.params = p;
  rep.c = complementarity(r, s);
  rep.hRB = conditional_entropy(post_measurement_state(rho, r));
  rep.hSB = conditional_entropy(post_measurement_state(rho, s));
  rep.hAB = conditional_entropy(rho);
  rep.W = std::log2(1.0 / rep.c) + rep.hAB;
  rep.L = rep.hRB + rep.hSB;
  rep.V = rep.L - rep.W;
  if (std::abs(rep.W) >= tol::kUndefinedRatio) rep.U = rep.L / rep.W;
  rep.C = concurrence_wootters(rho);
  rep.Y = mixedness(rho);
  return rep;
}

}  // namespace

UncertaintyReport uncertainty_report(const ModelParams& p) {
  UncertaintyReport rep = build_report(p, Observable::sigma_x(), Observable::sigma_z());
  const ClosedFormEntropies cf = closed_form_entropies(p);
  rep.closed_form_checked = true;
  rep.closed_form_deviation = std::max(
      {std::abs(rep.hRB - cf.hRB), std::abs(rep.hSB - cf.hSB), std::abs(rep.hAB - cf.hAB)});
  rep.closed_form_deviates = rep.closed_form_deviation > tol::kEntropyMatch;
  return rep;
}

UncertaintyReport uncertainty_report(const ModelParams& p, const Observable& r,
                                     const Observable& s) {
  return build_report(p, r, s);
}

DensityMatrix reduced_memory_state(const ModelParams& p) {
  return DensityMatrix(partial_trace_first(thermal_state_numeric(p).matrix()));
}

}  // namespace dmu
