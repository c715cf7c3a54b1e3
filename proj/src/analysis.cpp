#include "patomo/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace patomo {

double quadrature_moment(const OpticalTomogram& w, int n, double theta,
                         const MomentOptions& opts) {
  if (n < 0 || n > 8) throw DomainError("quadrature_moment: n outside [0, 8]");
  if (opts.intervals < 2 || opts.intervals % 2 != 0) {
    throw DomainError("quadrature_moment: intervals must be even");
  }
  const double h = 2.0 * opts.x_max / opts.intervals;
  std::vector<double> f(static_cast<std::size_t>(opts.intervals) + 1);
  for (int i = 0; i <= opts.intervals; ++i) {
    const double x = -opts.x_max + i * h;
    f[i] = std::pow(x, n) * w(x, theta);
  }
  const double tail = std::max(std::abs(f.front()), std::abs(f.back()));
  if (!(tail <= opts.tail_tol)) {
    throw ConvergenceError("quadrature_moment: tail |X^n w| = " +
                           std::to_string(tail) + " at |X| = " +
                           std::to_string(opts.x_max));
  }
  return simpson<double>(f, h);
}

std::string MomentReport::to_key_value() const {
  std::ostringstream os;
  os << "normalization=" << format_double(normalization) << '\n'
     << "mean_q=" << format_double(mean_q) << '\n'
     << "mean_p=" << format_double(mean_p) << '\n'
     << "var_q=" << format_double(var_q) << '\n'
     << "var_p=" << format_double(var_p) << '\n'
     << "uncertainty_product=" << format_double(uncertainty_product) << '\n'
     << "mean_photon_number=" << format_double(mean_photon_number) << '\n';
  return os.str();
}

std::string MomentReport::csv_header() {
  return "normalization,mean_q,mean_p,var_q,var_p,uncertainty_product,"
         "mean_photon_number";
}

std::string MomentReport::to_csv_row() const {
  return format_double(normalization) + ',' + format_double(mean_q) + ',' +
         format_double(mean_p) + ',' + format_double(var_q) + ',' +
         format_double(var_p) + ',' + format_double(uncertainty_product) + ',' +
         format_double(mean_photon_number);
}

MomentReport moment_report(const OpticalTomogram& w, const MomentOptions& opts) {
  constexpr double half_pi = 0.5 * std::numbers::pi;
  MomentReport r;
  r.normalization = quadrature_moment(w, 0, 0.0, opts);
  r.mean_q = quadrature_moment(w, 1, 0.0, opts);
  r.mean_p = quadrature_moment(w, 1, half_pi, opts);
  const double q2 = quadrature_moment(w, 2, 0.0, opts);
  const double p2 = quadrature_moment(w, 2, half_pi, opts);
  r.var_q = q2 - r.mean_q * r.mean_q;
  r.var_p = p2 - r.mean_p * r.mean_p;
  r.uncertainty_product = r.var_q * r.var_p;
  r.mean_photon_number = 0.5 * (q2 + p2) - 0.5;
  return r;
}

double mean_photon_number(const OpticalTomogram& w, const MomentOptions& opts) {
  return 0.5 * (quadrature_moment(w, 2, 0.0, opts) +
                quadrature_moment(w, 2, 0.5 * std::numbers::pi, opts)) -
         0.5;
}

double uncertainty_product(const OpticalTomogram& w, const MomentOptions& opts) {
  auto variance = [&](double theta) {
    const double m1 = quadrature_moment(w, 1, theta, opts);
    return quadrature_moment(w, 2, theta, opts) - m1 * m1;
  };
  return variance(0.0) * variance(0.5 * std::numbers::pi);
}

double check_symmetry(const OpticalTomogram& w, const GridSpec& grid) {
  grid.validate();
  double worst = 0.0;
  for (int j = 0; j < grid.n_theta; ++j) {
    const double theta = grid.theta(j);
    for (int i = 0; i < grid.n_x; ++i) {
      const double x = grid.x(i);
      worst = std::max(worst,
                       std::abs(w(x, theta + std::numbers::pi) - w(-x, theta)));
    }
  }
  return worst;
}

namespace {

// Simpson weights for n (even) intervals of width h.
std::vector<double> simpson_weights(int n, double h) {
  std::vector<double> wts(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    wts[i] = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    wts[i] *= h / 3.0;
  }
  return wts;
}

}  // namespace

ReconstructionResult reconstruct_density_matrix(
    const OpticalTomogram& w, int n_max, double reg,
    const ReconstructionOptions& opts) {
  if (n_max < 0 || n_max > 32) {
    throw DomainError("reconstruct_density_matrix: n_max outside [0, 32]");
  }
  if (!(reg > 0.0)) throw DomainError("reconstruct_density_matrix: reg <= 0");
  if (opts.r_intervals % 2 != 0 || opts.x_intervals % 2 != 0 ||
      opts.n_theta < 2 || opts.working_dim <= n_max + 1) {
    throw DomainError("reconstruct_density_matrix: bad options");
  }
  const int dim = n_max + 1;
  const int n_r = opts.r_intervals + 1;
  const int n_x = opts.x_intervals + 1;

  // Truncated q = (a + a^dagger)/sqrt2 and its spectral decomposition.
  const int big = opts.working_dim;
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(big, big);
  for (int n = 0; n + 1 < big; ++n) {
    q(n, n + 1) = q(n + 1, n) = std::sqrt((n + 1) / 2.0);
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(q);
  const Eigen::MatrixXd v = eig.eigenvectors().topRows(dim);
  const Eigen::VectorXd lambda = eig.eigenvalues();

  const double hr = opts.r_max / opts.r_intervals;
  const auto wr = simpson_weights(opts.r_intervals, hr);
  const double hx = 2.0 * opts.x_max / opts.x_intervals;
  const auto wx = simpson_weights(opts.x_intervals, hx);

  // <m| e^{-i r q} |n> for every radial node.
  std::vector<Eigen::MatrixXcd> expq(n_r);
  for (int k = 0; k < n_r; ++k) {
    const double r = k * hr;
    Eigen::VectorXcd phase(big);
    for (int l = 0; l < big; ++l) phase(l) = std::polar(1.0, -r * lambda(l));
    expq[k] = v * phase.asDiagonal() * v.transpose();
  }

  Eigen::MatrixXcd acc1 = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd acc2 = Eigen::MatrixXcd::Zero(dim, dim);
  std::vector<double> wvals(n_x);
  std::vector<Complex> chi(n_r);
  const double dtheta = std::numbers::pi / opts.n_theta;

  for (int j = 0; j < opts.n_theta; ++j) {
    const double theta = j * dtheta;
    for (int i = 0; i < n_x; ++i) {
      wvals[i] = wx[i] * w(-opts.x_max + i * hx, theta);
    }
    // chi(r) = int w(X, theta) e^{i r X} dX
    for (int k = 0; k < n_r; ++k) {
      const double r = k * hr;
      Complex sum{};
      Complex e = std::polar(1.0, -r * opts.x_max);
      const Complex step = std::polar(1.0, r * hx);
      for (int i = 0; i < n_x; ++i) {
        if (i % 128 == 0) e = std::polar(1.0, r * (-opts.x_max + i * hx));
        sum += wvals[i] * e;
        e *= step;
      }
      chi[k] = sum;
    }
    Eigen::MatrixXcd rot(dim, dim);
    for (int m = 0; m < dim; ++m) {
      for (int n = 0; n < dim; ++n) rot(m, n) = std::polar(1.0, theta * (m - n));
    }
    for (int k = 0; k < n_r; ++k) {
      const double r = k * hr;
      if (r == 0.0) continue;
      // r > 0 and its mirror -r: chi(-r) = chi(r)*, e^{+irq} = (e^{-irq})*
      const Eigen::MatrixXcd term =
          (chi[k] * expq[k] + std::conj(chi[k]) * expq[k].conjugate())
              .cwiseProduct(rot);
      const double base = wr[k] * r * dtheta / (2.0 * std::numbers::pi);
      acc1 += base * std::exp(-reg * r * r) * term;
      acc2 += base * std::exp(-2.0 * reg * r * r) * term;
    }
  }

  auto finish = [](Eigen::MatrixXcd m) -> Eigen::MatrixXcd {
    return 0.5 * (m + m.adjoint());
  };
  Eigen::MatrixXcd rho = finish(acc1);
  Eigen::MatrixXcd rho2 = finish(acc2);

  ReconstructionResult out;
  out.trace_before_normalization = rho.trace().real();
  if (std::abs(out.trace_before_normalization - 1.0) > 0.05) {
    throw ConvergenceError("reconstruction trace " +
                           std::to_string(out.trace_before_normalization) +
                           " deviates from 1 by more than 0.05");
  }
  rho /= out.trace_before_normalization;
  rho2 /= rho2.trace().real();
  out.reg_sensitivity = (rho - rho2).cwiseAbs().maxCoeff();

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> spectrum(rho);
  out.min_eigenvalue = spectrum.eigenvalues().minCoeff();
  out.condition_estimate = spectrum.eigenvalues().cwiseAbs().sum();
  out.rho = {dim, std::move(rho)};
  return out;
}

std::vector<Complex> coherent_fock_amplitudes(Complex alpha, int dim) {
  std::vector<Complex> c(static_cast<std::size_t>(std::max(dim, 0)));
  if (dim <= 0) return c;
  c[0] = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n < dim; ++n) c[n] = c[n - 1] * alpha / std::sqrt(double(n));
  return c;
}

double fidelity(const DensityMatrix& rho, std::span<const Complex> psi) {
  if (static_cast<int>(psi.size()) < rho.dimension) {
    throw DomainError("fidelity: state shorter than density matrix");
  }
  Eigen::VectorXcd v(rho.dimension);
  for (int n = 0; n < rho.dimension; ++n) v(n) = psi[n];
  return (v.adjoint() * rho.entries * v)(0, 0).real();
}

double tomogram_from_density(const DensityMatrix& rho, double X, double theta) {
  const auto h = hermite_function_table(rho.dimension - 1, X);
  const double c = std::pow(std::numbers::pi, -0.25);
  Eigen::VectorXcd u(rho.dimension);  // <n|X,theta> = e^{i n theta} phi_n(X)
  for (int n = 0; n < rho.dimension; ++n) {
    u(n) = std::polar(1.0, n * theta) * (c * h[n].real());
  }
  return (u.adjoint() * rho.entries * u)(0, 0).real();
}

std::vector<double> sample_homodyne(const OpticalTomogram& w, double theta,
                                    int count, std::uint64_t seed,
                                    const SamplingOptions& opts) {
  if (count < 1) throw DomainError("sample_homodyne: count must be >= 1");
  const int n = opts.intervals;
  const double h = 2.0 * opts.x_max / n;
  std::vector<double> cdf(static_cast<std::size_t>(n) + 1, 0.0);
  double prev = w(-opts.x_max, theta);
  for (int i = 1; i <= n; ++i) {
    const double cur = w(-opts.x_max + i * h, theta);
    if (!(cur >= 0.0) || !std::isfinite(cur)) {
      throw ConvergenceError("sample_homodyne: invalid tomogram value");
    }
    cdf[i] = cdf[i - 1] + 0.5 * h * (prev + cur);
    prev = cur;
  }
  const double total = cdf.back();
  if (!(total > 0.0)) throw ConvergenceError("sample_homodyne: zero mass");
  for (auto& c : cdf) c /= total;

  std::mt19937_64 gen(seed);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int s = 0; s < count; ++s) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto i = static_cast<int>(std::clamp<std::ptrdiff_t>(
        it - cdf.begin() - 1, 0, n - 1));
    const double lo = cdf[i];
    const double hi = cdf[i + 1];
    const double frac = hi > lo ? (u - lo) / (hi - lo) : 0.5;
    out.push_back(-opts.x_max + (i + frac) * h);
  }
  return out;
}

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf) {
  if (samples.empty()) throw DomainError("ks_statistic: no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, std::abs(f - i / n), std::abs((i + 1) / n - f)});
  }
  return d;
}

}  // namespace patomo
