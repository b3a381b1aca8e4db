#include <cmath>
#include <random>

#include <doctest.h>

#include "dmu/constants.hpp"
#include "dmu/model.hpp"
#include "test_helpers.hpp"

using dmu::Complex;
using dmu::ComplexMatrix;
using dmu::ModelParams;
using dmu_test::max_entry_diff;
using dmu_test::random_params;

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS((ModelParams{0.0, 1.0, 1.0}.validate()), dmu::ParamDomainError);
  CHECK_THROWS_AS((ModelParams{1.0, -0.5, 1.0}.validate()), dmu::ParamDomainError);
  CHECK_THROWS_AS((ModelParams{1.0, 1.0, 0.0}.validate()), dmu::ParamDomainError);
  CHECK_THROWS_AS((ModelParams{1.0, 1.0, -2.0}.validate()), dmu::ParamDomainError);
  CHECK_THROWS_AS((ModelParams{std::nan(""), 1.0, 1.0}.validate()), dmu::ParamDomainError);
  CHECK_NOTHROW((ModelParams{-2.0, 0.0, 0.3}.validate()));
}

TEST_CASE("derived parameters") {
  const ModelParams p{2.0, 1.0, 0.5};
  CHECK(p.beta() == doctest::Approx(2.0));
  CHECK(p.delta() == doctest::Approx(4.0 * std::sqrt(2.0)));
  CHECK(p.theta() == doctest::Approx(std::atan(1.0)));
  CHECK(ModelParams{-2.0, 1.0, 0.5}.delta() == doctest::Approx(-4.0 * std::sqrt(2.0)));
}

TEST_CASE("hamiltonian matrix elements") {
  const ComplexMatrix h0 = build_hamiltonian(ModelParams{1.0, 0.0, 1.0});
  const ComplexMatrix h0_expected{{0.5, 0.0, 0.0, 0.0},
                                  {0.0, -0.5, 1.0, 0.0},
                                  {0.0, 1.0, -0.5, 0.0},
                                  {0.0, 0.0, 0.0, 0.5}};
  CHECK(max_entry_diff(h0, h0_expected) < 1e-15);

  const ComplexMatrix h1 = build_hamiltonian(ModelParams{1.0, 1.0, 1.0});
  CHECK(std::abs(h1(1, 2) - Complex{1.0, 1.0}) < 1e-15);
  CHECK(std::abs(h1(2, 1) - Complex{1.0, -1.0}) < 1e-15);
  CHECK(h1.hermiticity_defect() == 0.0);

  const dmu::EigenSystem es = hermitian_eig(h1);
  const double r2 = std::sqrt(2.0);
  CHECK(es.values[0] == doctest::Approx(-r2 - 0.5).epsilon(1e-12));
  CHECK(es.values[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(es.values[2] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(es.values[3] == doctest::Approx(r2 - 0.5).epsilon(1e-12));
}

TEST_CASE("analytic eigensystem matches the numeric one") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const ModelParams p = random_params(rng);
    const dmu::EigenSystem analytic = analytic_eigensystem(p);
    const dmu::EigenSystem numeric = hermitian_eig(build_hamiltonian(p));
    REQUIRE(analytic.values.size() == 4);
    const double scale = std::max(1.0, std::abs(p.J) * (1.0 + p.D));
    for (int i = 0; i < 4; ++i) {
      CHECK(std::abs(analytic.values[i] - numeric.values[i]) < 1e-10 * scale);
    }
    // The spectral projectors agree even where individual eigenvectors are
    // only defined up to a degenerate rotation.
    const auto on_spectrum = [](const dmu::EigenSystem& es) {
      return dmu::spectral_apply(es, [](double x) { return x; });
    };
    CHECK(max_entry_diff(on_spectrum(analytic), on_spectrum(numeric)) < 1e-9);
  }

  const dmu::EigenSystem es = analytic_eigensystem(ModelParams{-1.0, 1.0, 1.0});
  const double r2 = std::sqrt(2.0);
  CHECK(es.values[0] == doctest::Approx(-r2 + 0.5).epsilon(1e-12));
  CHECK(es.values[1] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(es.values[2] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(es.values[3] == doctest::Approx(r2 + 0.5).epsilon(1e-12));
}

TEST_CASE("thermal state limits") {
  const dmu::DensityMatrix hot = thermal_state_numeric(ModelParams{1.0, 1.0, 1e9});
  CHECK(max_entry_diff(hot.matrix(), 0.25 * ComplexMatrix::identity(4)) < 1e-8);

  const dmu::DensityMatrix cold = thermal_state_numeric(ModelParams{1.0, 1.0, 1e-4});
  CHECK(max_entry_diff(cold.matrix(), dmu::ground_state(ModelParams{1.0, 1.0, 1.0}).matrix()) <
        1e-12);
}

TEST_CASE("thermal state golden fixture at J = 1, D = 1, T = 1") {
  const dmu::DensityMatrix rho = thermal_state_numeric(ModelParams{1.0, 1.0, 1.0});
  CHECK(std::abs(rho(0, 0) - Complex{0.07224476407147179}) < 1e-12);
  CHECK(std::abs(rho(3, 3) - Complex{0.07224476407147179}) < 1e-12);
  CHECK(std::abs(rho(1, 1) - Complex{0.42775523592852843}) < 1e-12);
  CHECK(std::abs(rho(2, 2) - Complex{0.42775523592852843}) < 1e-12);
  CHECK(std::abs(rho(1, 2) - Complex{-0.26870876195947435, -0.26870876195947441}) < 1e-12);
  CHECK(std::abs(rho(2, 1) - Complex{-0.26870876195947435, 0.26870876195947441}) < 1e-12);
  CHECK(std::abs(rho(0, 1)) == 0.0);

  CHECK(max_entry_diff(thermal_state_closed(ModelParams{1.0, 1.0, 1.0}).matrix(),
                       rho.matrix()) < 1e-9);
}

TEST_CASE("closed thermal state equals the spectral oracle on a random grid") {
  std::mt19937_64 rng(42);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const ModelParams p = random_params(rng);
    worst = std::max(worst, max_entry_diff(thermal_state_closed(p).matrix(),
                                           thermal_state_numeric(p).matrix()));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("closed thermal state diagonal identities") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    ModelParams p = random_params(rng);
    p.T = std::max(p.T, 0.5);  // keep the unshifted partition function finite
    const double beta = p.beta();
    const double z = 2.0 * std::exp(-beta * p.J / 2.0) *
                     (1.0 + std::exp(beta * p.J) * std::cosh(beta * p.delta() / 2.0));
    const dmu::DensityMatrix rho = thermal_state_closed(p);
    CHECK(rho(0, 0).real() == doctest::Approx(std::exp(-beta * p.J / 2.0) / z).epsilon(1e-12));
    CHECK(rho(3, 3).real() == doctest::Approx(rho(0, 0).real()).epsilon(1e-14));
  }

  const dmu::DensityMatrix hot = thermal_state_closed(ModelParams{1.0, 1.0, 1e9});
  for (int i = 0; i < 4; ++i) CHECK(std::abs(hot(i, i).real() - 0.25) < 1e-9);
  CHECK(std::abs(hot(1, 2)) < 1e-9);
}

TEST_CASE("thermal state commutes with the hamiltonian") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const ModelParams p = random_params(rng);
    const ComplexMatrix h = build_hamiltonian(p);
    const ComplexMatrix rho = thermal_state_numeric(p).matrix();
    CHECK((rho * h - h * rho).max_abs() < 1e-9);
  }
}

TEST_CASE("off-diagonal phase carries theta up to sign") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const ModelParams p = random_params(rng);
    const Complex r23 = thermal_state_closed(p)(1, 2);
    if (std::abs(r23) < 1e-12) continue;
    const double mag = std::abs(std::arg(r23));
    const double theta = p.theta();
    const double pi = std::acos(-1.0);
    const double dev =
        std::min({std::abs(mag - theta), std::abs(mag - (pi - theta)), std::abs(mag - (pi + theta))});
    CHECK(dev < 1e-9);
  }
}

TEST_CASE("ground state selection") {
  const dmu::DensityMatrix minus = dmu::ground_state(ModelParams{1.0, 1.0, 1.0});
  CHECK(max_entry_diff(minus.matrix(), dmu::bell_minus_state(std::atan(1.0)).matrix()) == 0.0);

  const dmu::DensityMatrix plus = dmu::ground_state(ModelParams{-1.0, 0.7, 1.0});
  CHECK(max_entry_diff(plus.matrix(), dmu::bell_plus_state(std::atan(0.7)).matrix()) == 0.0);

  CHECK_THROWS_AS(dmu::ground_state(ModelParams{-1.0, 0.0, 1.0}), dmu::ParamDomainError);

  CHECK(dmu::basis_state(0)(0, 0) == Complex{1.0});
  CHECK_THROWS_AS(dmu::basis_state(4), dmu::ParamDomainError);

  // The ground state is the lowest-energy eigenvector: its thermal limit was
  // checked above, here check it is an eigenvector of H.
  const ModelParams p{-2.0, 1.3, 1.0};
  const ComplexMatrix h = build_hamiltonian(p);
  const ComplexMatrix g = dmu::ground_state(p).matrix();
  const double e0 = hermitian_eig(h).values.front();
  CHECK(max_entry_diff(h * g, e0 * g) < 1e-12);
}
