#include "patomo/tomograms.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace patomo {

namespace {

constexpr double kNegativeClamp = 1e-12;

double clamp_nonnegative(double v, double slack, const char* what) {
  if (v >= 0.0) return v;
  if (v >= -slack) return 0.0;
  throw ConvergenceError(std::string(what) + ": negative value " +
                         std::to_string(v));
}

double pac_log_normalization(Complex alpha, int m) {
  // -ln(m! L_m(-|alpha|^2)) - ln(sqrt(pi) 2^m)
  return -log_factorial(m) - std::log(laguerre(m, -std::norm(alpha))) -
         0.5 * std::log(std::numbers::pi) - m * std::numbers::ln2;
}

}  // namespace

double optical_from_symplectic(const SymplecticTomogram& M,
                               const OpticalPoint& p) {
  return M(to_symplectic(p));
}

double symplectic_from_optical(const OpticalTomogram& w,
                               const QuadraturePoint& p) {
  check_point(p);
  const double r = std::hypot(p.mu, p.nu);
  return w(p.X / r, std::atan2(p.nu, p.mu)) / r;
}

double tomogram_pac(Complex alpha, int m, const ModeEnvelope& env,
                    const QuadraturePoint& p) {
  check_point(p);
  if (m < 0 || m > kMaxDegree) {
    throw DomainError("tomogram_pac: m outside [0, " +
                      std::to_string(kMaxDegree) + "]");
  }
  const Complex i{0.0, 1.0};
  const Complex eps = env.epsilon;
  const Complex eps_c = std::conj(eps);
  const double abs_eps = std::abs(eps);
  const Complex d = p.mu * eps + p.nu * env.epsilon_dot;
  const double abs_d = std::abs(d);
  if (abs_d < 1e-12) {
    throw DegeneratePointError("tomogram_pac: |mu eps + nu epsdot| ~ 0");
  }
  const Complex d_c = p.mu * eps_c + p.nu * std::conj(env.epsilon_dot);

  const Complex s = envelope_phase_root(env);
  const Complex rot =
      std::sqrt(abs_eps * abs_eps * d / (eps * eps * d_c));
  const Complex arg =
      ((p.X * eps + i * std::numbers::sqrt2 * alpha * p.nu) / (abs_eps * d) -
       s * alpha) *
      rot;
  const Complex exponent = -0.5 * std::norm(alpha) -
                           p.X * p.X / (2.0 * abs_d * abs_d) +
                           std::numbers::sqrt2 * alpha * p.X / d -
                           alpha * alpha * eps_c / (2.0 * eps) +
                           i * p.nu * alpha * alpha / (eps * d);

  const double value =
      std::norm(hermite(m, arg)) *
      std::exp(pac_log_normalization(alpha, m) + 2.0 * exponent.real()) / abs_d;
  return clamp_nonnegative(value, kNegativeClamp, "tomogram_pac");
}

double tomogram_pac_stationary(Complex alpha, int m, double X,
                               double theta_plus_t) {
  const Complex phase = std::polar(1.0, -theta_plus_t);
  const Complex h =
      hermite(m, X - alpha / std::numbers::sqrt2 * phase);
  const double exponent = -X * X - std::norm(alpha) +
                          2.0 * std::numbers::sqrt2 * X * (alpha * phase).real() -
                          (alpha * alpha * phase * phase).real();
  return std::norm(h) * std::exp(pac_log_normalization(alpha, m) + exponent);
}

Complex tomographic_amplitude(const Wavefunction& psi, const QuadraturePoint& p,
                              const QuadratureConfig& cfg) {
  const SampledWavefunction sampled(psi, cfg);
  const std::array<const SampledWavefunction*, 1> one{&sampled};
  const double tol = cfg.tol;
  return tomographic_amplitudes(one, p,
                                [tol](std::span<const AmplitudeResult> r) {
                                  return r[0].error_estimate <= tol;
                                })[0]
      .value;
}

EvenOddTomogram::EvenOddTomogram(Complex alpha, int m, Parity parity,
                                 const ModeEnvelope& env,
                                 const QuadratureConfig& cfg)
    : alpha_(alpha),
      m_(m),
      sign_(parity == Parity::Even ? 1.0 : -1.0),
      env_(env),
      norm2_(0.0),
      tol_(cfg.tol) {
  validate(EvenOddPAC{alpha, m, parity});
  norm2_ = even_odd_norm2(alpha, m, parity);
  plus_ = std::make_shared<const SampledWavefunction>(
      make_wavefunction(PhotonAddedCoherent{alpha, m}, env), cfg);
  minus_ = std::make_shared<const SampledWavefunction>(
      make_wavefunction(PhotonAddedCoherent{-alpha, m}, env), cfg);
}

double EvenOddTomogram::operator()(const QuadraturePoint& p) const {
  const double diag =
      tomogram_pac(alpha_, m_, env_, p) + tomogram_pac(-alpha_, m_, env_, p);
  const std::array<const SampledWavefunction*, 2> pair{plus_.get(),
                                                       minus_.get()};
  const double tol = tol_ / (2.0 * norm2_);
  const auto amps = tomographic_amplitudes(
      pair, p, [tol](std::span<const AmplitudeResult> r) {
        const double err = std::abs(r[0].value) * r[1].error_estimate +
                           std::abs(r[1].value) * r[0].error_estimate +
                           r[0].error_estimate * r[1].error_estimate;
        return err <= tol;
      });
  const double cross = 2.0 * (amps[0].value * std::conj(amps[1].value)).real();
  return clamp_nonnegative(norm2_ * (diag + sign_ * cross), 1e-10,
                           "tomogram_even_odd");
}

double tomogram_even_odd(Complex alpha, int m, Parity parity,
                         const ModeEnvelope& env, const QuadraturePoint& p,
                         const QuadratureConfig& cfg) {
  return EvenOddTomogram(alpha, m, parity, env, cfg)(p);
}

double thermal_variance(double T) {
  if (!(T > 0.0)) throw DomainError("thermal_variance: T must be positive");
  return 0.5 / std::tanh(0.5 / T);
}

double tomogram_thermal(double T, double X) {
  const double var = thermal_variance(T);
  return std::exp(-X * X / (2.0 * var)) /
         std::sqrt(2.0 * std::numbers::pi * var);
}

double tomogram_pat_series(double T, int m, const ModeEnvelope& env,
                           const QuadraturePoint& p, double tol) {
  check_point(p);
  if (m < 0 || m > kMaxDegree) {
    throw DomainError("tomogram_pat_series: m outside [0, " +
                      std::to_string(kMaxDegree) + "]");
  }
  const Complex eps = env.epsilon;
  const double abs_eps = std::abs(eps);
  const Complex d = p.mu * eps + p.nu * env.epsilon_dot;
  const double abs_d = std::abs(d);
  if (abs_d < 1e-12) {
    throw DegeneratePointError("tomogram_pat_series: |mu eps + nu epsdot| ~ 0");
  }
  const Complex d_c = p.mu * std::conj(eps) + p.nu * std::conj(env.epsilon_dot);
  const Complex arg = p.X * eps / (abs_eps * d) *
                      std::sqrt(abs_eps * abs_eps * d / (eps * eps * d_c));

  const auto weights = thermal_weights(m, T, tol);
  const auto h = hermite_function_table(weights.back().first, arg);
  // Each term is weight(n) |H_n(z)|^2 e^{-|z|^2} / (2^n n! sqrt(pi)); the
  // damping e^{-|z|^2} equals e^{-X^2/|D|^2} because z^2 = X^2/|D|^2.
  double sum = 0.0;
  for (const auto& [n, w] : weights) sum += w * std::norm(h[n]);
  return sum / (std::sqrt(std::numbers::pi) * abs_d);
}

double tomogram_pat_closed(double T, int m, double X) {
  if (!(T > 0.0)) throw DomainError("tomogram_pat_closed: T must be positive");
  const double q = std::exp(-1.0 / T);
  const double one_m_q2 = 1.0 - q * q;
  const double one_p_q = 1.0 + q;
  const double gauss = std::exp(-X * X * std::tanh(0.5 / T));
  const double root_pi = std::sqrt(std::numbers::pi);
  const double x2 = X * X;
  if (m == 1) {
    return (1.0 - q) * (1.0 - q) / (root_pi * std::sqrt(one_m_q2)) * gauss *
           (2.0 * x2 / (one_p_q * one_p_q) + q / one_m_q2);
  }
  if (m == 2) {
    const double p2 = one_p_q * one_p_q;
    return std::pow(1.0 - q, 3) / (2.0 * root_pi * std::sqrt(one_m_q2)) *
           gauss *
           (4.0 * x2 * x2 / (p2 * p2) +
            4.0 * x2 * (2.0 * q - 1.0) / (p2 * one_m_q2) +
            (2.0 * q * q + 1.0) / (one_m_q2 * one_m_q2));
  }
  throw DomainError("tomogram_pat_closed: only m = 1 and m = 2 have closed forms");
}

SymplecticTomogram make_symplectic_tomogram(const StateSpec& spec,
                                            const ModeEnvelope& env,
                                            const QuadratureConfig& cfg) {
  validate(spec);
  if (const auto* s = std::get_if<PhotonAddedCoherent>(&spec)) {
    return [a = s->alpha, m = s->m, env](const QuadraturePoint& p) {
      return tomogram_pac(a, m, env, p);
    };
  }
  if (const auto* s = std::get_if<EvenOddPAC>(&spec)) {
    auto eval =
        std::make_shared<const EvenOddTomogram>(s->alpha, s->m, s->parity, env, cfg);
    return [eval](const QuadraturePoint& p) { return (*eval)(p); };
  }
  if (const auto* s = std::get_if<Thermal>(&spec)) {
    if (env.is_stationary()) {
      return [T = s->T](const QuadraturePoint& p) {
        return symplectic_from_optical(
            [T](double X, double) { return tomogram_thermal(T, X); }, p);
      };
    }
    return [T = s->T, env](const QuadraturePoint& p) {
      return tomogram_pat_series(T, 0, env, p);
    };
  }
  const auto& s = std::get<PhotonAddedThermal>(spec);
  return [T = s.T, m = s.m, env](const QuadraturePoint& p) {
    return tomogram_pat_series(T, m, env, p);
  };
}

OpticalTomogram make_optical_tomogram(const StateSpec& spec,
                                      const ModeEnvelope& env,
                                      const QuadratureConfig& cfg) {
  auto M = make_symplectic_tomogram(spec, env, cfg);
  return [M = std::move(M)](double X, double theta) {
    return optical_from_symplectic(M, {X, theta});
  };
}

}  // namespace patomo
