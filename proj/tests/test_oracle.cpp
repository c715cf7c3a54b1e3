#include <doctest.h>

#include <cmath>
#include <numbers>

#include "patomo/errors.hpp"
#include "patomo/oracle.hpp"
#include "patomo/tomograms.hpp"

using namespace patomo;

namespace {

const double kInvSqrtPi = 1.0 / std::sqrt(std::numbers::pi);

QuadraturePoint at(double X, double th) { return {X, std::cos(th), std::sin(th)}; }

}  // namespace

TEST_CASE("oracle reproduces the vacuum and coherent Gaussians") {
  const auto env = stationary_envelope(0.0);
  const SampledWavefunction vac(make_wavefunction(PhotonAddedCoherent{0.0, 0}, env), {});
  for (double th : {0.2, 1.5, 3.0, 4.4}) {
    CHECK(std::abs(tomogram_numeric(vac, at(0.0, th)) - kInvSqrtPi) < 1e-10);
  }
  // |alpha=1> at theta = 0: Gaussian centred on sqrt(2).
  const SampledWavefunction coh(make_wavefunction(PhotonAddedCoherent{1.0, 0}, env), {});
  for (double X : {-0.5, 0.7, std::sqrt(2.0), 2.5}) {
    const double expect = kInvSqrtPi * std::exp(-(X - std::sqrt(2.0)) * (X - std::sqrt(2.0)));
    CHECK(std::abs(tomogram_numeric(coh, at(X, 0.4)) -
                   kInvSqrtPi * std::exp(-std::pow(X - std::sqrt(2.0) * std::cos(0.4), 2))) < 1e-9);
    CHECK(std::abs(tomogram_numeric(coh, {X, 1.0, 0.0}) - expect) < 1e-10);
  }
}

TEST_CASE("oracle is stable under resolution doubling") {
  const auto wf = make_wavefunction(PhotonAddedCoherent{{0.8, -0.4}, 3}, stationary_envelope(1.1));
  QuadratureConfig fine;
  fine.n_points *= 2;
  for (double th : {0.5, 2.0}) {
    const double a = tomogram_numeric(wf, at(0.9, th));
    const double b = tomogram_numeric(wf, at(0.9, th), fine);
    CHECK(std::abs(a - b) < 1e-10);
  }
}

TEST_CASE("oracle rotation covariance for stationary envelopes") {
  const PhotonAddedCoherent s{{1.0, 0.5}, 2};
  const SampledWavefunction psi0(make_wavefunction(s, stationary_envelope(0.0)), {});
  const SampledWavefunction psi1(make_wavefunction(s, stationary_envelope(0.9)), {});
  for (double X : {-1.0, 0.3, 1.8}) {
    CHECK(std::abs(tomogram_numeric(psi1, at(X, 0.6)) - tomogram_numeric(psi0, at(X, 1.5))) < 1e-9);
  }
}

TEST_CASE("mixed oracle") {
  const auto env = stationary_envelope(0.0);
  const MixedOracle thermal(thermal_weights(0, 1.0, 1e-13), env);
  const MixedOracle pat(thermal_weights(1, 1.0, 1e-13), env);
  // Hot enough that the mixture needs Fock states wider than the default window.
  const MixedOracle hot(thermal_weights(2, 2.0, 1e-11), env);
  CHECK(std::abs(hot(at(0.4, 1.0)) - tomogram_pat_closed(2.0, 2, 0.4)) < 1e-9);
  CHECK_THROWS_AS(MixedOracle(thermal_weights(2, 2.0, 1e-13), env), DomainError);
  for (double X : {-1.0, 0.0, 0.9}) {
    CHECK(std::abs(thermal(at(X, 0.7)) - tomogram_thermal(1.0, X)) < 1e-9);
    CHECK(std::abs(pat(at(X, 2.2)) - tomogram_pat_closed(1.0, 1, X)) < 1e-9);
  }
  const std::vector<std::pair<int, double>> fock1{{1, 1.0}};
  for (double X : {-0.7, 1.3}) {
    const double expect = 2.0 * X * X * kInvSqrtPi * std::exp(-X * X);
    CHECK(std::abs(tomogram_mixed_numeric(fock1, env, at(X, 1.0)) - expect) < 1e-10);
  }
  const std::vector<std::pair<int, double>> bad{{0, 0.5}, {1, 0.4}};
  CHECK_THROWS_AS(MixedOracle(bad, env), DomainError);
}

TEST_CASE("oracle reports non-convergence") {
  const auto wf = make_wavefunction(PhotonAddedCoherent{1.0, 2}, stationary_envelope(0.0));
  QuadratureConfig tight;
  tight.n_points = 2048;
  tight.max_refinements = 0;
  tight.tol = 1e-12;
  CHECK_THROWS_AS(tomogram_numeric(wf, {0.5, 1.0, 1e-3}, tight), ConvergenceError);

  // A state that is not contained in the window.
  QuadratureConfig narrow;
  narrow.y_half_width = 8.0;
  const auto far = make_wavefunction(PhotonAddedCoherent{6.0, 0}, stationary_envelope(0.0));
  CHECK_THROWS_AS(tomogram_numeric(far, at(0.5, 1.0), narrow), ConvergenceError);

  QuadratureConfig coarse;
  coarse.n_points = 1000;
  CHECK_THROWS_AS(tomogram_numeric(wf, at(0.5, 1.0), coarse), DomainError);
}
