#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "patomo/evolution.hpp"
#include "patomo/special_fn.hpp"

namespace patomo {

enum class Parity { Even, Odd };

/// a^dagger^m |alpha>, normalized. m = 0 is the coherent state.
struct PhotonAddedCoherent {
  Complex alpha;
  int m = 0;
};

/// Normalized (|alpha,m> +/- |-alpha,m>).
struct EvenOddPAC {
  Complex alpha;
  int m = 0;
  Parity parity = Parity::Even;
};

struct Thermal {
  double T = 1.0;
};

/// a^dagger^m rho_T a^m, normalized.
struct PhotonAddedThermal {
  double T = 1.0;
  int m = 0;
};

using StateSpec =
    std::variant<PhotonAddedCoherent, EvenOddPAC, Thermal, PhotonAddedThermal>;

/// Throws DomainError when the spec violates its invariants
/// (m outside [0, kMaxDegree], T <= 0, odd parity with alpha = 0).
void validate(const StateSpec& spec);
std::string describe(const StateSpec& spec);
bool is_pure(const StateSpec& spec);

/// Coordinate-representation wavefunction of a pure state at an envelope.
struct Wavefunction {
  std::function<Complex(double)> fn;
  std::string label;
  double t = 0.0;

  Complex operator()(double q) const { return fn(q); }
};

/// Time-dependent coherent state <q|alpha,t>.
Complex coherent_wavefunction(Complex alpha, const ModeEnvelope& env, double q);

/// Branch of sqrt(eps*/2eps) used throughout: eps* / (sqrt(2)|eps|).
/// It is continuous in t and coincides with the principal branch only while
/// arg(eps) stays in (-pi/2, pi/2].
Complex envelope_phase_root(const ModeEnvelope& env);

/// <q|alpha,m,t>.
Complex photon_added_wavefunction(Complex alpha, int m,
                                  const ModeEnvelope& env, double q);

/// Squared normalization N_+/-^2 of the even/odd photon-added state.
double even_odd_norm2(Complex alpha, int m, Parity parity);

/// N_+/- (Psi_{alpha,m} +/- Psi_{-alpha,m}).
Complex even_odd_wavefunction(Complex alpha, int m, Parity parity,
                              const ModeEnvelope& env, double q);

/// Wavefunction object for a pure StateSpec; DomainError for mixed states.
Wavefunction make_wavefunction(const StateSpec& spec, const ModeEnvelope& env);

/// Diagonal Fock weight <n|rho_{T,m}|n>; zero for n < m.
double thermal_fock_weight(int n, int m, double T);

/// Hard cap for Fock truncation of thermal mixtures.
inline constexpr int kMaxFockCutoff = 512;

/// Smallest n_max whose neglected weight tail is below `tol`. Throws
/// ConvergenceError if kMaxFockCutoff does not suffice.
int thermal_cutoff(int m, double T, double tol = 1e-12);

/// (n, weight) pairs for n = m .. thermal_cutoff(m, T, tol).
std::vector<std::pair<int, double>> thermal_weights(int m, double T,
                                                    double tol = 1e-12);

}  // namespace patomo
