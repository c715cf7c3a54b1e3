#pragma once

#include <complex>
#include <vector>

namespace patomo {

using Complex = std::complex<double>;

/// Largest polynomial degree accepted by hermite() and laguerre().
inline constexpr int kMaxDegree = 64;

/// Physicists' Hermite polynomial H_m(z) by three-term recurrence.
/// Throws DomainError for m < 0, m > kMaxDegree or non-finite z.
Complex hermite(int m, Complex z);

/// Laguerre polynomial L_m(x) = L_m^{(0)}(x) by recurrence.
double laguerre(int m, double x);

/// ln(n!) from a cached cumulative-log table (lgamma beyond the table).
double log_factorial(int n);

/// Damped, normalized Hermite values
///   h_k(z) = H_k(z) exp(-|z|^2/2) / sqrt(2^k k!),  k = 0..n_max.
/// The recurrence is run on h_k directly, so it neither overflows nor is
/// limited by kMaxDegree. For real z, |h_k|^2 / sqrt(pi) is the squared
/// k-th oscillator eigenfunction.
std::vector<Complex> hermite_function_table(int n_max, Complex z);

}  // namespace patomo
