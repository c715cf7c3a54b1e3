#include "patomo/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace patomo {

void QuadratureConfig::validate() const {
  if (!(y_half_width >= 8.0)) {
    throw DomainError("QuadratureConfig: y_half_width must be >= 8");
  }
  if (n_points < 2048 || n_points % 4 != 0) {
    throw DomainError("QuadratureConfig: n_points must be >= 2048 and a multiple of 4");
  }
  if (!(tol >= 1e-12)) throw DomainError("QuadratureConfig: tol must be >= 1e-12");
  if (max_refinements < 0 || max_refinements > 10) {
    throw DomainError("QuadratureConfig: max_refinements outside [0, 10]");
  }
}

SampledWavefunction::SampledWavefunction(Wavefunction psi,
                                         const QuadratureConfig& cfg)
    : psi_(std::move(psi)), cfg_(cfg) {
  cfg_.validate();
  levels_.reserve(static_cast<std::size_t>(cfg_.max_refinements) + 1);
  for (int k = 0; k <= cfg_.max_refinements; ++k) {
    levels_.push_back(std::make_unique<Level>());
  }
}

double SampledWavefunction::step(int level) const {
  return 2.0 * cfg_.y_half_width / intervals(level);
}

const std::vector<Complex>& SampledWavefunction::level(int k) const {
  Level& lv = *levels_.at(static_cast<std::size_t>(k));
  std::call_once(lv.once, [&] {
    const int n = intervals(k);
    const double h = step(k);
    lv.values.resize(static_cast<std::size_t>(n) + 1);
    if (k > 0) {
      // Even samples are shared with the coarser level.
      const auto& coarse = level(k - 1);
      for (int j = 0; j <= n; j += 2) lv.values[j] = coarse[j / 2];
      for (int j = 1; j < n; j += 2) {
        lv.values[j] = psi_(-cfg_.y_half_width + j * h);
      }
    } else {
      for (int j = 0; j <= n; ++j) {
        lv.values[j] = psi_(-cfg_.y_half_width + j * h);
      }
      const double edge = std::max(std::abs(lv.values.front()),
                                   std::abs(lv.values.back()));
      if (!(edge < 1e-10)) {
        throw ConvergenceError("wavefunction '" + psi_.label +
                               "' not negligible at |y| = " +
                               std::to_string(cfg_.y_half_width));
      }
    }
  });
  return lv.values;
}

namespace {

constexpr int kResync = 128;

// Simpson sums at full and half resolution of psi * kernel for each psi.
void kernel_pass(std::span<const SampledWavefunction* const> psis,
                 const QuadraturePoint& p, int level,
                 std::span<AmplitudeResult> out) {
  const auto& first = *psis.front();
  const int n = first.intervals(level);
  const double h = first.step(level);
  const double w = first.config().y_half_width;
  const double a = p.mu / (2.0 * p.nu);
  const double b = -p.X / p.nu;
  const Complex c = std::polar(1.0, 2.0 * a * h * h);

  std::vector<const std::vector<Complex>*> samples;
  samples.reserve(psis.size());
  for (const auto* s : psis) samples.push_back(&s->level(level));

  const std::size_t m = psis.size();
  std::vector<Complex> fine_odd(m), fine_even(m), coarse_odd(m),
      coarse_even(m), ends(m);

  Complex e, r;
  for (int j = 0; j <= n; ++j) {
    const double y = -w + j * h;
    if (j % kResync == 0) {
      e = std::polar(1.0, (a * y + b) * y);
      r = std::polar(1.0, a * (2.0 * y * h + h * h) + b * h);
    }
    for (std::size_t i = 0; i < m; ++i) {
      const Complex f = (*samples[i])[j] * e;
      if (j == 0 || j == n) {
        ends[i] += f;
      } else if (j % 2 == 1) {
        fine_odd[i] += f;
      } else {
        fine_even[i] += f;
        if ((j / 2) % 2 == 1) {
          coarse_odd[i] += f;
        } else {
          coarse_even[i] += f;
        }
      }
    }
    e *= r;
    r *= c;
  }

  const double scale = 1.0 / std::sqrt(2.0 * std::numbers::pi * std::abs(p.nu));
  for (std::size_t i = 0; i < m; ++i) {
    const Complex fine =
        (ends[i] + 4.0 * fine_odd[i] + 2.0 * fine_even[i]) * (h / 3.0);
    const Complex coarse =
        (ends[i] + 4.0 * coarse_odd[i] + 2.0 * coarse_even[i]) * (2.0 * h / 3.0);
    out[i].value = scale * fine;
    out[i].error_estimate = scale * std::abs(fine - coarse) / 15.0;
    out[i].intervals = n;
  }
}

}  // namespace

std::vector<AmplitudeResult> tomographic_amplitudes(
    std::span<const SampledWavefunction* const> psis, const QuadraturePoint& p,
    const std::function<bool(std::span<const AmplitudeResult>)>& accept) {
  check_point(p);
  std::vector<AmplitudeResult> out(psis.size());
  if (psis.empty()) return out;

  if (std::abs(p.nu) < kNuMin) {
    const double s = 1.0 / std::sqrt(std::abs(p.mu));
    for (std::size_t i = 0; i < psis.size(); ++i) {
      out[i].value = s * psis[i]->wavefunction()(p.X / p.mu);
    }
    return out;
  }

  const int max_level = psis.front()->config().max_refinements;
  for (int level = 0; level <= max_level; ++level) {
    kernel_pass(psis, p, level, out);
    if (accept(out)) return out;
  }
  double worst = 0.0;
  for (const auto& r : out) worst = std::max(worst, r.error_estimate);
  throw ConvergenceError(
      "tomographic amplitude did not converge at (X=" + std::to_string(p.X) +
      ", mu=" + std::to_string(p.mu) + ", nu=" + std::to_string(p.nu) +
      "); error estimate " + std::to_string(worst));
}

}  // namespace patomo
