#pragma once

#include <functional>
#include <string>
#include <vector>

#include "patomo/special_fn.hpp"

namespace patomo {

/// Classical envelope eps(t) of the parametric oscillator and its derivative.
/// eps(0) = 1, epsdot(0) = i; the Wronskian eps epsdot* - eps* epsdot = -2i
/// is conserved.
struct ModeEnvelope {
  double t = 0.0;
  Complex epsilon{1.0, 0.0};
  Complex epsilon_dot{0.0, 1.0};

  /// eps epsdot* - eps* epsdot (should be -2i).
  Complex wronskian() const;
  /// True when the envelope is e^{it} to within `tol` componentwise.
  bool is_stationary(double tol = 1e-12) const;
};

/// Squared frequency Omega^2(t) with a label for reports.
struct FrequencyProfile {
  std::function<double(double)> omega2;
  std::string label;
};

FrequencyProfile constant_profile();
/// Omega^2(t) = 1 + a cos(b t).
FrequencyProfile cosine_profile(double a, double b);

/// Fixed-step RK4 for eps'' + Omega^2(t) eps = 0 from eps(0)=1, epsdot(0)=i.
/// The grid is t_k = k*step; when t_end is not a multiple of step one final
/// short step lands exactly on t_end. Throws DomainError for bad arguments or
/// non-finite Omega^2.
std::vector<ModeEnvelope> solve_epsilon(const FrequencyProfile& profile,
                                        double t_end, double step);

/// Analytic envelope for Omega = 1: eps = e^{it}, epsdot = i e^{it}.
ModeEnvelope stationary_envelope(double t);

/// Envelope at the ODE grid point nearest to t. `snap` receives |t - t_grid|.
ModeEnvelope envelope_at(const FrequencyProfile& profile, double t,
                         double step, double* snap = nullptr);

}  // namespace patomo
