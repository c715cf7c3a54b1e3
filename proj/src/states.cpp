#include "patomo/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "patomo/errors.hpp"

namespace patomo {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_m(int m) {
  if (m < 0 || m > kMaxDegree) {
    throw DomainError("photon number m=" + std::to_string(m) +
                      " outside [0, " + std::to_string(kMaxDegree) + "]");
  }
}

void check_T(double T) {
  if (!(T > 0.0) || !std::isfinite(T)) {
    throw DomainError("temperature must be positive and finite");
  }
}

// -0.5 * ln(m! L_m(-|alpha|^2)).
double log_pac_norm(Complex alpha, int m) {
  return -0.5 * (log_factorial(m) + std::log(laguerre(m, -std::norm(alpha))));
}

}  // namespace

void validate(const StateSpec& spec) {
  std::visit(overloaded{
                 [](const PhotonAddedCoherent& s) { check_m(s.m); },
                 [](const EvenOddPAC& s) {
                   check_m(s.m);
                   if (s.parity == Parity::Odd && s.alpha == Complex{}) {
                     throw DomainError("odd state requires alpha != 0");
                   }
                 },
                 [](const Thermal& s) { check_T(s.T); },
                 [](const PhotonAddedThermal& s) {
                   check_T(s.T);
                   check_m(s.m);
                 },
             },
             spec);
}

std::string describe(const StateSpec& spec) {
  std::ostringstream os;
  os.precision(17);
  std::visit(overloaded{
                 [&](const PhotonAddedCoherent& s) {
                   os << "pac alpha=(" << s.alpha.real() << ","
                      << s.alpha.imag() << ") m=" << s.m;
                 },
                 [&](const EvenOddPAC& s) {
                   os << (s.parity == Parity::Even ? "even" : "odd")
                      << " alpha=(" << s.alpha.real() << "," << s.alpha.imag()
                      << ") m=" << s.m;
                 },
                 [&](const Thermal& s) { os << "thermal T=" << s.T; },
                 [&](const PhotonAddedThermal& s) {
                   os << "thermal-added T=" << s.T << " m=" << s.m;
                 },
             },
             spec);
  return os.str();
}

bool is_pure(const StateSpec& spec) {
  return std::holds_alternative<PhotonAddedCoherent>(spec) ||
         std::holds_alternative<EvenOddPAC>(spec);
}

Complex coherent_wavefunction(Complex alpha, const ModeEnvelope& env,
                              double q) {
  const Complex eps = env.epsilon;
  const Complex i{0.0, 1.0};
  const Complex exponent = i * env.epsilon_dot * q * q / (2.0 * eps) +
                           std::numbers::sqrt2 * alpha * q / eps -
                           alpha * alpha * std::conj(eps) / (2.0 * eps) -
                           0.5 * std::norm(alpha);
  return std::pow(std::numbers::pi, -0.25) / std::sqrt(eps) * std::exp(exponent);
}

Complex envelope_phase_root(const ModeEnvelope& env) {
  return std::conj(env.epsilon) /
         (std::numbers::sqrt2 * std::abs(env.epsilon));
}

Complex photon_added_wavefunction(Complex alpha, int m,
                                  const ModeEnvelope& env, double q) {
  check_m(m);
  const Complex coherent = coherent_wavefunction(alpha, env, q);
  if (m == 0) return coherent;
  const Complex s = envelope_phase_root(env);
  const Complex h = hermite(m, q / std::abs(env.epsilon) - s * alpha);
  return std::exp(log_pac_norm(alpha, m)) * std::pow(s, m) * h * coherent;
}

double even_odd_norm2(Complex alpha, int m, Parity parity) {
  check_m(m);
  const double a2 = std::norm(alpha);
  // Ratio e^{-|a|^2} L_m(|a|^2) / (e^{|a|^2} L_m(-|a|^2)), formed without
  // ever evaluating e^{|a|^2}.
  const double overlap =
      std::exp(-2.0 * a2) * laguerre(m, a2) / laguerre(m, -a2);
  const double sign = parity == Parity::Even ? 1.0 : -1.0;
  const double denom = 2.0 * (1.0 + sign * overlap);
  if (!(denom > 0.0)) {
    throw DomainError("even/odd state has zero norm (odd parity at alpha=0?)");
  }
  return 1.0 / denom;
}

Complex even_odd_wavefunction(Complex alpha, int m, Parity parity,
                              const ModeEnvelope& env, double q) {
  if (parity == Parity::Odd && alpha == Complex{}) {
    throw DomainError("odd state requires alpha != 0");
  }
  const double n = std::sqrt(even_odd_norm2(alpha, m, parity));
  const Complex plus = photon_added_wavefunction(alpha, m, env, q);
  const Complex minus = photon_added_wavefunction(-alpha, m, env, q);
  return parity == Parity::Even ? n * (plus + minus) : n * (plus - minus);
}

Wavefunction make_wavefunction(const StateSpec& spec, const ModeEnvelope& env) {
  validate(spec);
  if (const auto* s = std::get_if<PhotonAddedCoherent>(&spec)) {
    return {[a = s->alpha, m = s->m, env](double q) {
              return photon_added_wavefunction(a, m, env, q);
            },
            describe(spec), env.t};
  }
  if (const auto* s = std::get_if<EvenOddPAC>(&spec)) {
    const double n = std::sqrt(even_odd_norm2(s->alpha, s->m, s->parity));
    const double sign = s->parity == Parity::Even ? 1.0 : -1.0;
    return {[a = s->alpha, m = s->m, env, n, sign](double q) {
              return n * (photon_added_wavefunction(a, m, env, q) +
                          sign * photon_added_wavefunction(-a, m, env, q));
            },
            describe(spec), env.t};
  }
  throw DomainError("mixed state has no wavefunction: " + describe(spec));
}

double thermal_fock_weight(int n, int m, double T) {
  check_T(T);
  if (m < 0) throw DomainError("thermal_fock_weight: negative m");
  if (n < m) return 0.0;
  const double beta = 1.0 / T;
  // (1 - e^{-1/T})^{m+1} / m! * n!/(n-m)! * e^{-(n-m)/T}
  const double log_w = (m + 1) * std::log1p(-std::exp(-beta)) -
                       log_factorial(m) + log_factorial(n) -
                       log_factorial(n - m) - (n - m) * beta;
  return std::exp(log_w);
}

int thermal_cutoff(int m, double T, double tol) {
  check_T(T);
  if (m < 0) throw DomainError("thermal_cutoff: negative m");
  const double q = std::exp(-1.0 / T);
  // Successive weight ratio r_n = w(n+1)/w(n) = q (n+1)/(n+1-m) decreases in
  // n, so once r < 1 the tail beyond n is bounded by w(n+1) / (1 - r_{n+1}).
  for (int n = m; n < kMaxFockCutoff; ++n) {
    const double next = thermal_fock_weight(n + 1, m, T);
    const double ratio = q * (n + 2.0) / (n + 2.0 - m);
    if (ratio < 1.0 && next / (1.0 - ratio) < tol) return n;
  }
  throw ConvergenceError("thermal Fock tail above " + std::to_string(tol) +
                         " at the hard cap n_max=" +
                         std::to_string(kMaxFockCutoff));
}

std::vector<std::pair<int, double>> thermal_weights(int m, double T,
                                                    double tol) {
  const int n_max = thermal_cutoff(m, T, tol);
  std::vector<std::pair<int, double>> out;
  out.reserve(static_cast<std::size_t>(n_max - m) + 1);
  for (int n = m; n <= n_max; ++n) out.emplace_back(n, thermal_fock_weight(n, m, T));
  return out;
}

}  // namespace patomo
