#pragma once

#include <cmath>
#include <numbers>

#include "patomo/errors.hpp"

namespace patomo {

/// Symplectic tomogram coordinates: X = mu q + nu p.
struct QuadraturePoint {
  double X = 0.0;
  double mu = 1.0;
  double nu = 0.0;
};

/// Optical (homodyne) coordinates: quadrature X at local-oscillator phase.
struct OpticalPoint {
  double X = 0.0;
  double theta = 0.0;
};

/// Reduces a phase to [0, 2pi).
inline double canonical_phase(double theta) {
  if (!std::isfinite(theta)) throw DomainError("canonical_phase: non-finite");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(theta, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;
  return r;
}

inline QuadraturePoint to_symplectic(const OpticalPoint& p) {
  return {p.X, std::cos(p.theta), std::sin(p.theta)};
}

inline void check_point(const QuadraturePoint& p) {
  if (p.mu == 0.0 && p.nu == 0.0) {
    throw DomainError("quadrature point with (mu, nu) = (0, 0)");
  }
}

}  // namespace patomo
