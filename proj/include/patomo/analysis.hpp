#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "patomo/grid.hpp"
#include "patomo/tomograms.hpp"

namespace patomo {

/// Composite Simpson over [-x_max, x_max] for quadrature statistics.
struct MomentOptions {
  double x_max = 12.0;
  int intervals = 1200;
  /// Largest tolerated |X|^n w at the window edges.
  double tail_tol = 1e-10;
};

/// <X^n>(theta) = int X^n w(X, theta) dX, n <= 8.
double quadrature_moment(const OpticalTomogram& w, int n, double theta,
                         const MomentOptions& opts = {});

struct MomentReport {
  double normalization = 0.0;
  double mean_q = 0.0;
  double mean_p = 0.0;
  double var_q = 0.0;
  double var_p = 0.0;
  double uncertainty_product = 0.0;
  double mean_photon_number = 0.0;

  /// key=value lines in a fixed order.
  std::string to_key_value() const;
  static std::string csv_header();
  std::string to_csv_row() const;
};

MomentReport moment_report(const OpticalTomogram& w,
                           const MomentOptions& opts = {});

/// (1/2) int X^2 [w(X,0) + w(X,pi/2)] dX - 1/2.
double mean_photon_number(const OpticalTomogram& w,
                          const MomentOptions& opts = {});
/// Var(theta=0) * Var(theta=pi/2).
double uncertainty_product(const OpticalTomogram& w,
                           const MomentOptions& opts = {});

/// max over the grid of |w(X, theta + pi) - w(-X, theta)|.
double check_symmetry(const OpticalTomogram& w, const GridSpec& grid);

struct DensityMatrix {
  int dimension = 0;
  Eigen::MatrixXcd entries;
};

/// The radial damping adds 2 reg to every quadrature variance, so a pure
/// state's fidelity is biased down by roughly 2 reg (1/(1 + 2 reg) for vacuum).
inline constexpr double kDefaultReconstructionReg = 1e-4;

struct ReconstructionOptions {
  double r_max = 8.0;
  int r_intervals = 400;
  int n_theta = 64;
  double x_max = 10.0;
  int x_intervals = 1024;
  /// Fock dimension in which the quadrature operator is exponentiated.
  int working_dim = 160;
};

struct ReconstructionResult {
  DensityMatrix rho;
  double trace_before_normalization = 0.0;
  double min_eigenvalue = 0.0;
  /// Trace norm over trace of the Hermitized estimate (1 for a positive one).
  double condition_estimate = 0.0;
  /// max |rho(reg) - rho(2 reg)| elementwise.
  double reg_sensitivity = 0.0;
};

/// Inverts rho = (1/2pi) int M(X,mu,nu) e^{i(X - mu q - nu p)} in polar
/// coordinates, with e^{-i r X_theta} obtained by exponentiating the
/// truncated quadrature operator and a Gaussian radial damping e^{-reg r^2}.
/// Fock indices 0..n_max. Throws ConvergenceError when the raw trace is off
/// by more than 0.05.
ReconstructionResult reconstruct_density_matrix(
    const OpticalTomogram& w, int n_max, double reg,
    const ReconstructionOptions& opts = {});

/// Fock amplitudes e^{-|a|^2/2} a^n / sqrt(n!) for n < dim.
std::vector<Complex> coherent_fock_amplitudes(Complex alpha, int dim);

/// <psi|rho|psi> with psi given by Fock amplitudes.
double fidelity(const DensityMatrix& rho, std::span<const Complex> psi);

/// Optical tomogram of a Fock-basis density matrix.
double tomogram_from_density(const DensityMatrix& rho, double X, double theta);

struct SamplingOptions {
  double x_max = 12.0;
  int intervals = 24000;
};

/// Inverse-CDF homodyne samples from a tabulated CDF of w(., theta).
/// Output depends only on (w, theta, count, seed).
std::vector<double> sample_homodyne(const OpticalTomogram& w, double theta,
                                    int count, std::uint64_t seed,
                                    const SamplingOptions& opts = {});

/// Kolmogorov-Smirnov distance between samples and a CDF.
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

}  // namespace patomo
