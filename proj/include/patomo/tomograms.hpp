#pragma once

#include <functional>
#include <memory>

#include "patomo/evolution.hpp"
#include "patomo/geometry.hpp"
#include "patomo/quadrature.hpp"
#include "patomo/states.hpp"

namespace patomo {

using SymplecticTomogram = std::function<double(const QuadraturePoint&)>;
using OpticalTomogram = std::function<double(double X, double theta)>;

/// w(X, theta) = M(X, cos theta, sin theta).
double optical_from_symplectic(const SymplecticTomogram& M,
                               const OpticalPoint& p);

/// M(X, mu, nu) = w(X/r, atan2(nu, mu)) / r with r = sqrt(mu^2 + nu^2).
double symplectic_from_optical(const OpticalTomogram& w,
                               const QuadraturePoint& p);

/// Closed-form tomogram of the photon-added coherent state |alpha, m, t>.
/// Throws DegeneratePointError when |mu eps + nu epsdot| < 1e-12.
double tomogram_pac(Complex alpha, int m, const ModeEnvelope& env,
                    const QuadraturePoint& p);

/// Stationary-Hamiltonian form; depends on theta and t only through theta+t.
double tomogram_pac_stationary(Complex alpha, int m, double X,
                               double theta_plus_t);

/// <X,mu,nu|psi> by Simpson quadrature (see tomographic_amplitudes).
Complex tomographic_amplitude(const Wavefunction& psi, const QuadraturePoint& p,
                              const QuadratureConfig& cfg = {});

/// Even/odd photon-added coherent tomogram: closed-form diagonal terms plus
/// a cross term 2 Re[<X|alpha,m,t><-alpha,m,t|X>] from numerical amplitudes.
/// Keeps the sampled wavefunctions so repeated evaluation is cheap.
class EvenOddTomogram {
 public:
  EvenOddTomogram(Complex alpha, int m, Parity parity, const ModeEnvelope& env,
                  const QuadratureConfig& cfg = {});

  double operator()(const QuadraturePoint& p) const;
  double norm2() const { return norm2_; }

 private:
  Complex alpha_;
  int m_;
  double sign_;
  ModeEnvelope env_;
  double norm2_;
  double tol_;
  std::shared_ptr<const SampledWavefunction> plus_;
  std::shared_ptr<const SampledWavefunction> minus_;
};

double tomogram_even_odd(Complex alpha, int m, Parity parity,
                         const ModeEnvelope& env, const QuadraturePoint& p,
                         const QuadratureConfig& cfg = {});

/// Thermal Gaussian with sigma^2 = coth(1/2T)/2.
double tomogram_thermal(double T, double X);
double thermal_variance(double T);

/// Photon-added thermal tomogram as a Hermite series over the Fock weights,
/// truncated by thermal_cutoff(m, T, tol).
double tomogram_pat_series(double T, int m, const ModeEnvelope& env,
                           const QuadraturePoint& p, double tol = 1e-12);

/// Closed forms of the photon-added thermal tomogram for m = 1, 2.
double tomogram_pat_closed(double T, int m, double X);

/// Closed-form symplectic tomogram of any StateSpec at an envelope.
SymplecticTomogram make_symplectic_tomogram(const StateSpec& spec,
                                            const ModeEnvelope& env,
                                            const QuadratureConfig& cfg = {});
OpticalTomogram make_optical_tomogram(const StateSpec& spec,
                                      const ModeEnvelope& env,
                                      const QuadratureConfig& cfg = {});

}  // namespace patomo
