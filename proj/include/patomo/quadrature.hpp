#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "patomo/geometry.hpp"
#include "patomo/states.hpp"

namespace patomo {

/// Below this |nu| the tomographic kernel is replaced by its nu -> 0 limit.
inline constexpr double kNuMin = 1e-6;

/// Composite Simpson rule on [-y_half_width, y_half_width].
struct QuadratureConfig {
  double y_half_width = 12.0;
  /// Number of Simpson intervals at the base resolution (multiple of 4).
  int n_points = 8192;
  /// Target absolute error of the returned quantity.
  double tol = 1e-9;
  /// Resolution doublings allowed when the Richardson estimate exceeds tol.
  int max_refinements = 6;

  void validate() const;
};

/// Integrates samples f_0..f_n (n even) with composite Simpson, step h.
template <class T>
T simpson(std::span<const T> f, double h) {
  const std::size_t n = f.size() - 1;
  T odd{}, even{};
  for (std::size_t j = 1; j < n; j += 2) odd += f[j];
  for (std::size_t j = 2; j < n; j += 2) even += f[j];
  return (f[0] + f[n] + 4.0 * odd + 2.0 * even) * (h / 3.0);
}

/// Wavefunction samples on the nested Simpson grids of a QuadratureConfig.
/// Levels are filled lazily and at most once; concurrent readers are safe.
class SampledWavefunction {
 public:
  SampledWavefunction(Wavefunction psi, const QuadratureConfig& cfg);

  const Wavefunction& wavefunction() const { return psi_; }
  const QuadratureConfig& config() const { return cfg_; }
  int intervals(int level) const { return cfg_.n_points << level; }
  double step(int level) const;
  /// Samples at y_j = -W + j h, j = 0..intervals(level).
  const std::vector<Complex>& level(int k) const;

 private:
  struct Level {
    std::once_flag once;
    std::vector<Complex> values;
  };

  Wavefunction psi_;
  QuadratureConfig cfg_;
  std::vector<std::unique_ptr<Level>> levels_;
};

struct AmplitudeResult {
  Complex value;
  double error_estimate = 0.0;
  int intervals = 0;
};

/// <X,mu,nu|psi> for several wavefunctions sharing one kernel pass:
///   (2 pi |nu|)^{-1/2} int psi(y) exp(i mu y^2 / 2nu - i X y / nu) dy.
/// Resolution doubles until `accept` returns true for the current results;
/// ConvergenceError when max_refinements is exhausted. For |nu| < kNuMin the
/// limit psi(X/mu)/sqrt|mu| is returned (exact up to a common unit phase).
std::vector<AmplitudeResult> tomographic_amplitudes(
    std::span<const SampledWavefunction* const> psis, const QuadraturePoint& p,
    const std::function<bool(std::span<const AmplitudeResult>)>& accept);

}  // namespace patomo
