#pragma once

#include <utility>
#include <vector>

#include "patomo/quadrature.hpp"
#include "patomo/states.hpp"

namespace patomo {

/// Brute-force tomogram |<X,mu,nu|psi>|^2 from the wavefunction alone.
/// Throws ConvergenceError when the Richardson estimate stays above cfg.tol.
double tomogram_numeric(const Wavefunction& psi, const QuadraturePoint& p,
                        const QuadratureConfig& cfg = {});

/// Same, reusing samples of a wavefunction across many points.
double tomogram_numeric(const SampledWavefunction& psi,
                        const QuadraturePoint& p);

/// Fock mixture sum_n weight_n |<X,mu,nu|n,t>|^2 with the number states
/// taken from photon_added_wavefunction(0, n, env, .).
double tomogram_mixed_numeric(std::span<const std::pair<int, double>> weights,
                              const ModeEnvelope& env, const QuadraturePoint& p,
                              const QuadratureConfig& cfg = {});

/// Precomputed Fock samples for repeated tomogram_mixed_numeric evaluation.
/// The window widens with the highest Fock index in the mixture.
class MixedOracle {
 public:
  MixedOracle(std::vector<std::pair<int, double>> weights,
              const ModeEnvelope& env, const QuadratureConfig& cfg = {});
  double operator()(const QuadraturePoint& p) const;

 private:
  std::vector<std::pair<int, double>> weights_;
  std::vector<std::unique_ptr<SampledWavefunction>> fock_;
  double tol_;
};

}  // namespace patomo
