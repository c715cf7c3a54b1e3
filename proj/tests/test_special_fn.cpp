#include <doctest.h>

#include <cmath>
#include <random>

#include "patomo/errors.hpp"
#include "patomo/special_fn.hpp"

using namespace patomo;

namespace {

// Explicit expansion H_m(z) = m! sum_k (-1)^k (2z)^{m-2k} / (k! (m-2k)!).
Complex hermite_explicit(int m, Complex z) {
  Complex sum{};
  for (int k = 0; 2 * k <= m; ++k) {
    const double c = std::tgamma(m + 1.0) /
                     (std::tgamma(k + 1.0) * std::tgamma(m - 2.0 * k + 1.0));
    sum += (k % 2 == 0 ? c : -c) * std::pow(2.0 * z, m - 2 * k);
  }
  return sum;
}

// L_m(x) = sum_k binom(m,k) (-x)^k / k!
double laguerre_explicit(int m, double x) {
  double sum = 0.0;
  for (int k = 0; k <= m; ++k) {
    const double binom = std::tgamma(m + 1.0) /
                         (std::tgamma(k + 1.0) * std::tgamma(m - k + 1.0));
    sum += binom * std::pow(-x, k) / std::tgamma(k + 1.0);
  }
  return sum;
}

}  // namespace

TEST_CASE("hermite examples") {
  CHECK(hermite(0, {3.7, -1.2}) == Complex(1.0, 0.0));
  CHECK(hermite(1, {2.0, 0.0}) == Complex(4.0, 0.0));
  CHECK(hermite(3, {2.0, 0.0}) == Complex(40.0, 0.0));
  CHECK(hermite_explicit(3, {2.0, 0.0}).real() == doctest::Approx(40.0));
}

TEST_CASE("hermite rejects bad input") {
  CHECK_THROWS_AS(hermite(kMaxDegree + 1, {1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(hermite(-1, {1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(hermite(2, {NAN, 0.0}), DomainError);
  CHECK_THROWS_AS(hermite(2, {0.0, INFINITY}), DomainError);
  CHECK_NOTHROW(hermite(kMaxDegree, {1.0, 0.0}));
}

TEST_CASE("hermite parity property") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> radius(0.0, 10.0), angle(0.0, 6.283185307179586);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex z = std::polar(radius(rng), angle(rng));
    for (int m = 0; m <= kMaxDegree; m += 3) {
      const Complex a = hermite(m, -z);
      const Complex b = (m % 2 == 0 ? 1.0 : -1.0) * hermite(m, z);
      CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(b)));
    }
  }
}

TEST_CASE("hermite is exactly real on the real axis") {
  for (int m = 0; m <= kMaxDegree; ++m) {
    for (double x : {-5.5, -1.0, 0.0, 0.3, 4.2}) {
      CHECK(hermite(m, {x, 0.0}).imag() == 0.0);
    }
  }
}

TEST_CASE("hermite recurrence matches explicit expansion") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> radius(0.0, 5.0), angle(0.0, 6.283185307179586);
  for (int trial = 0; trial < 100; ++trial) {
    const Complex z = std::polar(radius(rng), angle(rng));
    for (int m = 0; m <= 10; ++m) {
      const Complex ref = hermite_explicit(m, z);
      CHECK(std::abs(hermite(m, z) - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST_CASE("laguerre examples and properties") {
  CHECK(laguerre(0, -1.7) == 1.0);
  CHECK(laguerre(1, -1.0) == 2.0);
  CHECK(laguerre(2, -1.0) == doctest::Approx(3.5).epsilon(1e-15));
  CHECK(laguerre_explicit(2, -1.0) == doctest::Approx(3.5));
  for (int m = 0; m <= kMaxDegree; ++m) CHECK(laguerre(m, 0.0) == doctest::Approx(1.0).epsilon(1e-13));
  for (int m = 0; m <= 12; ++m) {
    for (double x : {-3.0, -0.4, 0.9, 2.5}) {
      const double ref = laguerre_explicit(m, x);
      CHECK(laguerre(m, x) == doctest::Approx(ref).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS(laguerre(kMaxDegree + 1, 0.0), DomainError);
}

TEST_CASE("log_factorial") {
  CHECK(log_factorial(0) == 0.0);
  CHECK(log_factorial(1) == 0.0);
  CHECK(log_factorial(5) == doctest::Approx(4.787491742782046).epsilon(1e-13));
  double product_log = 0.0;
  for (int n = 1; n <= 170; ++n) {
    product_log += std::log(static_cast<double>(n));
    CHECK(log_factorial(n) == doctest::Approx(product_log).epsilon(1e-13));
  }
  CHECK(log_factorial(2000) == doctest::Approx(std::lgamma(2001.0)).epsilon(1e-13));
  CHECK_THROWS_AS(log_factorial(-1), DomainError);
}

TEST_CASE("hermite_function_table matches scaled polynomials") {
  for (double x : {-3.0, 0.0, 0.7, 5.0}) {
    const auto h = hermite_function_table(40, x);
    for (int n = 0; n <= 40; ++n) {
      const double ref = hermite(n, x).real() * std::exp(-0.5 * x * x) /
                         std::exp(0.5 * (n * std::log(2.0) + log_factorial(n)));
      CHECK(std::abs(h[n].real() - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
    }
  }
  // Large orders stay finite and bounded (Cramer: |h_n|^2 <= 1.087^2).
  const auto big = hermite_function_table(600, 9.0);
  for (const auto& v : big) {
    CHECK(std::isfinite(v.real()));
    CHECK(std::norm(v) <= 1.19);
  }
}
