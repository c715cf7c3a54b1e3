#include <doctest.h>

#include <cmath>
#include <numbers>

#include "patomo/errors.hpp"
#include "patomo/evolution.hpp"

using namespace patomo;

TEST_CASE("stationary envelope examples") {
  const auto e0 = stationary_envelope(0.0);
  CHECK(e0.epsilon == Complex(1.0, 0.0));
  CHECK(e0.epsilon_dot == Complex(0.0, 1.0));
  const auto e1 = stationary_envelope(std::numbers::pi / 2);
  CHECK(std::abs(e1.epsilon - Complex(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(e1.epsilon_dot - Complex(-1.0, 0.0)) < 1e-15);
  const auto e2 = stationary_envelope(1.0);
  CHECK(std::abs(e2.epsilon - Complex(std::cos(1.0), std::sin(1.0))) < 1e-15);
  CHECK(std::abs(e2.epsilon_dot - Complex(-std::sin(1.0), std::cos(1.0))) < 1e-15);
  CHECK(std::abs(e2.wronskian() - Complex(0.0, -2.0)) < 1e-15);
}

TEST_CASE("constant profile reproduces e^{it}") {
  const auto traj = solve_epsilon(constant_profile(), std::numbers::pi, 0.001);
  CHECK(traj.front().t == 0.0);
  CHECK(traj.back().t == std::numbers::pi);
  CHECK(std::abs(traj.back().epsilon + 1.0) < 1e-9);

  const auto ten = solve_epsilon(constant_profile(), 10.0, 0.001);
  double worst = 0.0;
  for (const auto& e : ten) {
    const auto ref = stationary_envelope(e.t);
    worst = std::max({worst, std::abs(e.epsilon - ref.epsilon),
                      std::abs(e.epsilon_dot - ref.epsilon_dot)});
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("Wronskian is conserved") {
  for (const auto& profile : {constant_profile(), cosine_profile(0.2, 2.0),
                              cosine_profile(3.0, 1.3)}) {
    const auto traj = solve_epsilon(profile, 10.0, 0.001);
    double worst = 0.0;
    for (const auto& e : traj) {
      worst = std::max(worst, std::abs(e.wronskian() - Complex(0.0, -2.0)));
    }
    CAPTURE(profile.label);
    CHECK(worst < 1e-9);
  }
  const auto one = solve_epsilon(constant_profile(), 1.0, 0.001);
  for (const auto& e : one) CHECK(std::abs(e.wronskian() - Complex(0.0, -2.0)) < 1e-10);
}

TEST_CASE("step halving pins the cos-profile envelope") {
  const auto profile = cosine_profile(0.2, 2.0);
  const auto a = solve_epsilon(profile, 0.7, 0.001).back();
  const auto b = solve_epsilon(profile, 0.7, 0.0005).back();
  CHECK(a.t == 0.7);
  CHECK(std::abs(a.epsilon - b.epsilon) < 1e-9);
  CHECK(std::abs(a.epsilon_dot - b.epsilon_dot) < 1e-9);
}

TEST_CASE("RK4 global error scales as h^4") {
  // Reference from a much finer step; error ratio for h vs h/2 should be ~16.
  const auto profile = cosine_profile(0.2, 2.0);
  const auto ref = solve_epsilon(profile, 2.0, 0.0000625).back();
  const double e1 = std::abs(solve_epsilon(profile, 2.0, 0.01).back().epsilon - ref.epsilon);
  const double e2 = std::abs(solve_epsilon(profile, 2.0, 0.005).back().epsilon - ref.epsilon);
  const double ratio = e1 / e2;
  CHECK(ratio > 4.0);
  CHECK(ratio < 64.0);
}

TEST_CASE("solver grid and errors") {
  const auto traj = solve_epsilon(constant_profile(), 0.0105, 0.001);
  CHECK(traj.size() == 12);
  CHECK(traj.back().t == 0.0105);
  CHECK(traj[10].t == doctest::Approx(0.010));

  CHECK_THROWS_AS(solve_epsilon(constant_profile(), -1.0, 0.001), DomainError);
  CHECK_THROWS_AS(solve_epsilon(constant_profile(), 1.0, 0.02), DomainError);
  CHECK_THROWS_AS(solve_epsilon(constant_profile(), 1.0, 0.0), DomainError);
  const FrequencyProfile bad{[](double t) { return t > 0.5 ? NAN : 1.0; }, "bad"};
  CHECK_THROWS_AS(solve_epsilon(bad, 1.0, 0.001), DomainError);
}

TEST_CASE("envelope_at snaps to the grid") {
  double snap = -1.0;
  const auto e = envelope_at(constant_profile(), 0.70004, 0.001, &snap);
  CHECK(e.t == doctest::Approx(0.700));
  CHECK(snap == doctest::Approx(0.00004));
}
