#include "patomo/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace patomo {

double tomogram_numeric(const SampledWavefunction& psi,
                        const QuadraturePoint& p) {
  const std::array<const SampledWavefunction*, 1> one{&psi};
  const double tol = psi.config().tol;
  const auto r = tomographic_amplitudes(
      one, p, [tol](std::span<const AmplitudeResult> a) {
        const double e = a[0].error_estimate;
        return 2.0 * std::abs(a[0].value) * e + e * e <= tol;
      });
  return std::norm(r[0].value);
}

double tomogram_numeric(const Wavefunction& psi, const QuadraturePoint& p,
                        const QuadratureConfig& cfg) {
  return tomogram_numeric(SampledWavefunction(psi, cfg), p);
}

MixedOracle::MixedOracle(std::vector<std::pair<int, double>> weights,
                         const ModeEnvelope& env, const QuadratureConfig& cfg)
    : weights_(std::move(weights)), tol_(cfg.tol) {
  // High Fock states reach past the default window; widen it (same step)
  // so the classical turning point sqrt(2n+1) stays well inside.
  int n_top = 0;
  for (const auto& [n, w] : weights_) n_top = std::max(n_top, n);
  QuadratureConfig wide = cfg;
  const double needed = std::sqrt(2.0 * n_top + 1.0) + 7.0;
  if (needed > cfg.y_half_width) {
    wide.y_half_width = needed;
    wide.n_points = 4 * static_cast<int>(std::ceil(cfg.n_points * needed / cfg.y_half_width / 4.0));
  }
  double total = 0.0;
  for (const auto& [n, w] : weights_) {
    if (w < 0.0) throw DomainError("MixedOracle: negative weight");
    if (n < 0 || n > kMaxDegree) {
      throw DomainError("MixedOracle: Fock index " + std::to_string(n) + " outside [0, " +
                        std::to_string(kMaxDegree) + "]");
    }
    total += w;
    fock_.push_back(std::make_unique<SampledWavefunction>(
        Wavefunction{[n, env](double q) {
                       return photon_added_wavefunction(0.0, n, env, q);
                     },
                     "fock n=" + std::to_string(n), env.t},
        wide));
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw DomainError("MixedOracle: weights sum to " + std::to_string(total));
  }
}

double MixedOracle::operator()(const QuadraturePoint& p) const {
  std::vector<const SampledWavefunction*> ptrs;
  ptrs.reserve(fock_.size());
  for (const auto& f : fock_) ptrs.push_back(f.get());
  const auto& weights = weights_;
  const double tol = tol_;
  const auto amps = tomographic_amplitudes(
      ptrs, p, [&weights, tol](std::span<const AmplitudeResult> a) {
        double err = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
          const double e = a[i].error_estimate;
          err += weights[i].second * (2.0 * std::abs(a[i].value) * e + e * e);
        }
        return err <= tol;
      });
  double sum = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    sum += weights_[i].second * std::norm(amps[i].value);
  }
  return sum;
}

double tomogram_mixed_numeric(std::span<const std::pair<int, double>> weights,
                              const ModeEnvelope& env, const QuadraturePoint& p,
                              const QuadratureConfig& cfg) {
  return MixedOracle({weights.begin(), weights.end()}, env, cfg)(p);
}

}  // namespace patomo
