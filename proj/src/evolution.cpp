#include "patomo/evolution.hpp"

#include <cmath>

#include "patomo/errors.hpp"

namespace patomo {

Complex ModeEnvelope::wronskian() const {
  return epsilon * std::conj(epsilon_dot) - std::conj(epsilon) * epsilon_dot;
}

bool ModeEnvelope::is_stationary(double tol) const {
  const Complex e = std::polar(1.0, t);
  return std::abs(epsilon - e) <= tol &&
         std::abs(epsilon_dot - Complex(0.0, 1.0) * e) <= tol;
}

FrequencyProfile constant_profile() {
  return {[](double) { return 1.0; }, "const1"};
}

FrequencyProfile cosine_profile(double a, double b) {
  return {[a, b](double t) { return 1.0 + a * std::cos(b * t); },
          "cos(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")"};
}

namespace {

struct State {
  Complex x;  // eps
  Complex v;  // epsdot
};

double omega2_at(const FrequencyProfile& profile, double t) {
  const double w2 = profile.omega2(t);
  if (!std::isfinite(w2)) {
    throw DomainError("solve_epsilon: non-finite Omega^2 at t=" +
                      std::to_string(t));
  }
  return w2;
}

State rk4_step(const FrequencyProfile& profile, double t, double h,
               const State& s) {
  const double w0 = omega2_at(profile, t);
  const double wm = omega2_at(profile, t + 0.5 * h);
  const double w1 = omega2_at(profile, t + h);

  const Complex k1x = s.v;
  const Complex k1v = -w0 * s.x;
  const Complex k2x = s.v + 0.5 * h * k1v;
  const Complex k2v = -wm * (s.x + 0.5 * h * k1x);
  const Complex k3x = s.v + 0.5 * h * k2v;
  const Complex k3v = -wm * (s.x + 0.5 * h * k2x);
  const Complex k4x = s.v + h * k3v;
  const Complex k4v = -w1 * (s.x + h * k3x);

  return {s.x + h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x),
          s.v + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)};
}

}  // namespace

std::vector<ModeEnvelope> solve_epsilon(const FrequencyProfile& profile,
                                        double t_end, double step) {
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw DomainError("solve_epsilon: t_end must be positive and finite");
  }
  if (!(step > 0.0) || step > 0.01) {
    throw DomainError("solve_epsilon: step must lie in (0, 0.01]");
  }
  if (!profile.omega2) throw DomainError("solve_epsilon: empty profile");

  // Full steps up to the last grid point strictly before t_end.
  const auto full = static_cast<long>(std::floor(t_end / step * (1.0 + 1e-12)));
  std::vector<ModeEnvelope> out;
  out.reserve(static_cast<std::size_t>(full) + 2);

  State s{{1.0, 0.0}, {0.0, 1.0}};
  out.push_back({0.0, s.x, s.v});
  for (long k = 0; k < full; ++k) {
    const double t = k * step;
    s = rk4_step(profile, t, step, s);
    out.push_back({(k + 1) * step, s.x, s.v});
  }
  const double rest = t_end - full * step;
  if (rest > 1e-12 * step) {
    s = rk4_step(profile, full * step, rest, s);
    out.push_back({t_end, s.x, s.v});
  } else {
    out.back().t = t_end;
  }
  return out;
}

ModeEnvelope stationary_envelope(double t) {
  if (!std::isfinite(t)) throw DomainError("stationary_envelope: non-finite t");
  const Complex e = std::polar(1.0, t);
  return {t, e, Complex(0.0, 1.0) * e};
}

ModeEnvelope envelope_at(const FrequencyProfile& profile, double t,
                         double step, double* snap) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError("envelope_at: t must be finite and non-negative");
  }
  const double k = std::round(t / step);
  const double t_grid = k * step;
  if (snap) *snap = std::abs(t - t_grid);
  if (k == 0.0) return stationary_envelope(0.0);
  return solve_epsilon(profile, t_grid, step).back();
}

}  // namespace patomo
