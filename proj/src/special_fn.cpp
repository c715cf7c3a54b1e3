#include "patomo/special_fn.hpp"

#include <array>
#include <cmath>
#include <string>

#include "patomo/errors.hpp"

namespace patomo {

namespace {

void check_degree(int m, const char* what) {
  if (m < 0 || m > kMaxDegree) {
    throw DomainError(std::string(what) + ": degree " + std::to_string(m) +
                      " outside [0, " + std::to_string(kMaxDegree) + "]");
  }
}

constexpr int kFactorialTable = 1024;

const std::array<double, kFactorialTable>& log_factorial_table() {
  static const auto table = [] {
    std::array<double, kFactorialTable> t{};
    t[0] = 0.0;
    for (int n = 1; n < kFactorialTable; ++n) {
      t[n] = t[n - 1] + std::log(static_cast<double>(n));
    }
    return t;
  }();
  return table;
}

}  // namespace

Complex hermite(int m, Complex z) {
  check_degree(m, "hermite");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("hermite: non-finite argument");
  }
  Complex prev{1.0, 0.0};
  if (m == 0) return prev;
  Complex cur = 2.0 * z;
  for (int k = 1; k < m; ++k) {
    Complex next = 2.0 * z * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre(int m, double x) {
  check_degree(m, "laguerre");
  double prev = 1.0;
  if (m == 0) return prev;
  double cur = 1.0 - x;
  for (int k = 1; k < m; ++k) {
    double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial: negative argument");
  if (n < kFactorialTable) return log_factorial_table()[n];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

std::vector<Complex> hermite_function_table(int n_max, Complex z) {
  if (n_max < 0) throw DomainError("hermite_function_table: negative order");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("hermite_function_table: non-finite argument");
  }
  std::vector<Complex> h(static_cast<std::size_t>(n_max) + 1);
  h[0] = std::exp(-0.5 * std::norm(z));
  if (n_max == 0) return h;
  h[1] = std::sqrt(2.0) * z * h[0];
  // h_{k+1} = sqrt(2/(k+1)) z h_k - sqrt(k/(k+1)) h_{k-1}
  for (int k = 1; k < n_max; ++k) {
    const double kp1 = k + 1.0;
    h[k + 1] = std::sqrt(2.0 / kp1) * z * h[k] - std::sqrt(k / kp1) * h[k - 1];
  }
  return h;
}

}  // namespace patomo
