#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "patomo/analysis.hpp"
#include "patomo/errors.hpp"
#include "patomo/tomograms.hpp"

using namespace patomo;

namespace {

OpticalTomogram pac(Complex alpha, int m) {
  return make_optical_tomogram(PhotonAddedCoherent{alpha, m}, stationary_envelope(0.0));
}

OpticalTomogram thermal(double T) {
  return [T](double X, double) { return tomogram_thermal(T, X); };
}

}  // namespace

TEST_CASE("moments of simple states") {
  const auto vac = moment_report(pac(0.0, 0));
  CHECK(vac.normalization == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(vac.var_q == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(vac.var_p == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(std::abs(vac.mean_photon_number) < 1e-10);
  CHECK(vac.uncertainty_product == doctest::Approx(0.25).epsilon(1e-10));

  const auto coh = moment_report(pac({1.0, 0.5}, 0));
  CHECK(coh.mean_q == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  CHECK(coh.mean_p == doctest::Approx(0.5 * std::sqrt(2.0)).epsilon(1e-10));
  CHECK(coh.mean_photon_number == doctest::Approx(1.25).epsilon(1e-9));

  const double nbar = 1.0 / (std::numbers::e - 1.0);
  CHECK(mean_photon_number(thermal(1.0)) == doctest::Approx(nbar).epsilon(1e-9));
  CHECK(quadrature_moment(thermal(1.0), 2, 0.4) ==
        doctest::Approx(thermal_variance(1.0)).epsilon(1e-10));
  CHECK_THROWS_AS(quadrature_moment(thermal(1.0), 9, 0.0), DomainError);

  // A state too wide for the window is reported rather than truncated.
  MomentOptions narrow;
  narrow.x_max = 3.0;
  CHECK_THROWS_AS(quadrature_moment(thermal(5.0), 2, 0.0, narrow), ConvergenceError);

  const std::string kv = coh.to_key_value();
  CHECK(kv.find("mean_photon_number=") != std::string::npos);
  CHECK(MomentReport::csv_header().find("uncertainty_product") != std::string::npos);
}

TEST_CASE("photon addition raises the photon number") {
  // <n> = (m+1) L_{m+1}(-|a|^2) / L_m(-|a|^2) - 1 = 2.5 for alpha = 1, m = 1.
  CHECK(mean_photon_number(pac(1.0, 1)) == doctest::Approx(2.5).epsilon(1e-9));
  for (double a : {0.3, 1.0, 1.7}) {
    CHECK(mean_photon_number(pac(a, 1)) > mean_photon_number(pac(a, 0)));
    CHECK(mean_photon_number(pac(a, 2)) > mean_photon_number(pac(a, 1)));
  }
  for (int m : {0, 1, 3}) {
    CHECK(uncertainty_product(pac({0.5, 0.5}, m)) >= 0.25 - 1e-9);
  }
}

TEST_CASE("symmetry check detects a broken tomogram") {
  GridSpec g;
  g.n_x = 25;
  g.n_theta = 13;
  CHECK(check_symmetry(pac({1.0, 0.5}, 2), g) < 1e-12);
  const OpticalTomogram broken = [](double X, double th) {
    return std::exp(-(X - 0.3) * (X - 0.3)) / std::sqrt(std::numbers::pi) * (1.0 + 0.0 * th);
  };
  CHECK(check_symmetry(broken, g) > 1e-2);
}

TEST_CASE("density matrix reconstruction") {
  const auto r0 = reconstruct_density_matrix(pac(0.0, 0), 6, 1e-4);
  const auto vac = coherent_fock_amplitudes(0.0, 7);
  CHECK(fidelity(r0.rho, vac) >= 0.999);
  CHECK(r0.trace_before_normalization == doctest::Approx(1.0).epsilon(1e-3));

  const auto r1 = reconstruct_density_matrix(pac(0.5, 0), 8, 1e-4);
  CHECK(fidelity(r1.rho, coherent_fock_amplitudes(0.5, 9)) >= 0.99);
  CHECK(r1.reg_sensitivity >= 0.0);

  // Damping bias: vacuum goes to a thermal state with mean photon number 2 reg.
  const auto biased = reconstruct_density_matrix(pac(0.0, 0), 6, 0.01);
  CHECK(fidelity(biased.rho, vac) == doctest::Approx(1.0 / 1.02).epsilon(1e-4));

  CHECK_THROWS_AS(reconstruct_density_matrix(pac(0.0, 0), 33, 0.01), DomainError);
  CHECK_THROWS_AS(reconstruct_density_matrix(pac(0.0, 0), 4, 0.0), DomainError);
}

TEST_CASE("reconstruction closes the loop on a known density matrix") {
  DensityMatrix rho;
  rho.dimension = 4;
  rho.entries = Eigen::MatrixXcd::Zero(4, 4);
  rho.entries(0, 0) = 0.4;
  rho.entries(1, 1) = 0.3;
  rho.entries(2, 2) = 0.2;
  rho.entries(3, 3) = 0.1;
  rho.entries(0, 1) = Complex{0.1, 0.05};
  rho.entries(1, 0) = std::conj(rho.entries(0, 1));
  rho.entries(1, 3) = Complex{-0.05, 0.08};
  rho.entries(3, 1) = std::conj(rho.entries(1, 3));

  // tomogram_from_density against the vacuum Gaussian.
  DensityMatrix vac{1, Eigen::MatrixXcd::Ones(1, 1)};
  CHECK(tomogram_from_density(vac, 0.4, 1.0) ==
        doctest::Approx(std::exp(-0.16) / std::sqrt(std::numbers::pi)).epsilon(1e-13));

  const OpticalTomogram w = [&](double X, double th) { return tomogram_from_density(rho, X, th); };
  const auto res = reconstruct_density_matrix(w, 3, 0.005);
  CHECK((res.rho.entries - rho.entries).cwiseAbs().maxCoeff() < 1e-2);
  CHECK(res.min_eigenvalue > -1e-2);
}

TEST_CASE("homodyne sampling") {
  const auto xs = sample_homodyne(thermal(1.0), 0.0, 20000, 42);
  REQUIRE(xs.size() == 20000);
  double s = 0.0, s2 = 0.0;
  for (double x : xs) {
    s += x;
    s2 += x * x;
  }
  const double mean = s / xs.size();
  CHECK(std::abs(mean) < 0.03);
  CHECK(s2 / xs.size() - mean * mean == doctest::Approx(thermal_variance(1.0)).epsilon(0.03));

  CHECK(sample_homodyne(thermal(1.0), 0.0, 100, 7) == sample_homodyne(thermal(1.0), 0.0, 100, 7));
  CHECK(sample_homodyne(thermal(1.0), 0.0, 100, 7) != sample_homodyne(thermal(1.0), 0.0, 100, 8));

  const double sigma = std::sqrt(thermal_variance(1.0));
  const auto cdf = [sigma](double x) { return 0.5 * std::erfc(-x / (sigma * std::sqrt(2.0))); };
  CHECK(ks_statistic(xs, cdf) < 1.36 / std::sqrt(20000.0));
  const auto shifted = [&](double x) { return cdf(x - 0.2); };
  CHECK(ks_statistic(xs, shifted) > 0.05);
  CHECK_THROWS_AS(sample_homodyne(thermal(1.0), 0.0, 0, 1), DomainError);
}
