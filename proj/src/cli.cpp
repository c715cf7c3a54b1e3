#include "patomo/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "patomo/analysis.hpp"
#include "patomo/grid.hpp"
#include "patomo/oracle.hpp"
#include "patomo/tomograms.hpp"

namespace patomo::cli {

namespace {

struct StateFlags {
  std::string state = "pac";
  double alpha_re = 0.0;
  double alpha_im = 0.0;
  int m = 0;
  double T = 1.0;
  std::string profile = "const1";
  double a = 0.2;
  double b = 2.0;
  double t = 0.0;
  double step = 0.001;
  double tol = 1e-9;
  double inject_scale = 1.0;

  Complex alpha() const { return {alpha_re, alpha_im}; }
};

void add_state_flags(CLI::App* app, StateFlags& f) {
  app->add_option("--state", f.state, "State family")
      ->check(CLI::IsMember({"pac", "even", "odd", "thermal", "thermal-added",
                             "coherent"}));
  app->add_option("--alpha-re", f.alpha_re, "Re(alpha)");
  app->add_option("--alpha-im", f.alpha_im, "Im(alpha)");
  app->add_option("--m", f.m, "Number of added photons")->check(CLI::NonNegativeNumber);
  app->add_option("--T", f.T, "Temperature")->check(CLI::PositiveNumber);
  app->add_option("--profile", f.profile, "Frequency profile")
      ->check(CLI::IsMember({"const1", "cos"}));
  app->add_option("--a", f.a, "cos profile amplitude");
  app->add_option("--b", f.b, "cos profile angular frequency");
  app->add_option("--t", f.t, "Evolution time")->check(CLI::NonNegativeNumber);
  app->add_option("--step", f.step, "RK4 step")->check(CLI::Range(1e-6, 0.01));
  app->add_option("--tol", f.tol, "Quadrature tolerance")->check(CLI::Range(1e-12, 1e-3));
  // Test hook: scales every tomogram value to exercise the validators.
  app->add_option("--inject-scale", f.inject_scale)->group("");
}

StateSpec make_spec(const StateFlags& f) {
  StateSpec spec;
  if (f.state == "pac") {
    spec = PhotonAddedCoherent{f.alpha(), f.m};
  } else if (f.state == "coherent") {
    spec = PhotonAddedCoherent{f.alpha(), 0};
  } else if (f.state == "even") {
    spec = EvenOddPAC{f.alpha(), f.m, Parity::Even};
  } else if (f.state == "odd") {
    spec = EvenOddPAC{f.alpha(), f.m, Parity::Odd};
  } else if (f.state == "thermal") {
    spec = Thermal{f.T};
  } else {
    spec = PhotonAddedThermal{f.T, f.m};
  }
  validate(spec);
  return spec;
}

QuadratureConfig make_quadrature(const StateFlags& f) {
  QuadratureConfig cfg;
  cfg.tol = f.tol;
  return cfg;
}

FrequencyProfile make_profile(const StateFlags& f) {
  return f.profile == "cos" ? cosine_profile(f.a, f.b) : constant_profile();
}

ModeEnvelope make_envelope(const StateFlags& f, std::ostream& err) {
  if (f.profile == "const1") return stationary_envelope(f.t);
  double snap = 0.0;
  ModeEnvelope env = envelope_at(make_profile(f), f.t, f.step, &snap);
  err << "# t snapped to ODE grid point " << format_double(env.t)
      << " (distance " << format_double(snap) << ")\n";
  return env;
}

std::string describe_envelope(const StateFlags& f, const ModeEnvelope& env) {
  std::ostringstream os;
  os << f.profile << " t=" << format_double(env.t);
  if (f.profile == "cos") os << " a=" << f.a << " b=" << f.b << " step=" << f.step;
  return os.str();
}

OpticalTomogram scaled(OpticalTomogram w, double scale) {
  if (scale == 1.0) return w;
  return [w = std::move(w), scale](double X, double theta) {
    return scale * w(X, theta);
  };
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
  return buf;
}

TomogramGrid build_grid(const StateSpec& spec, const ModeEnvelope& env,
                        const GridSpec& grid_spec, const QuadratureConfig& cfg,
                        double scale, const std::string& env_text) {
  auto grid = evaluate_grid(scaled(make_optical_tomogram(spec, env, cfg), scale),
                            grid_spec);
  grid.state = describe(spec);
  grid.envelope = env_text;
  grid.timestamp = utc_timestamp();
  grid.tool_version = kToolVersion;
  return grid;
}

void write_metadata(std::ostream& os, const TomogramGrid& grid) {
  os << "state=" << grid.state << '\n'
     << "envelope=" << grid.envelope << '\n'
     << "x_min=" << format_double(grid.spec.x_min) << '\n'
     << "x_max=" << format_double(grid.spec.x_max) << '\n'
     << "n_x=" << grid.spec.n_x << '\n'
     << "theta_min=" << format_double(grid.spec.theta_min) << '\n'
     << "theta_max=" << format_double(grid.spec.theta_max) << '\n'
     << "n_theta=" << grid.spec.n_theta << '\n'
     << "generated=" << grid.timestamp << '\n'
     << "tool_version=" << grid.tool_version << '\n';
}

template <class Fn>
void with_output(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + path);
  fn(file);
  if (!file) throw std::runtime_error("write failed: " + path);
}

// ---- validate ----------------------------------------------------------

struct Check {
  std::string name;
  double value;
  double limit;
  bool pass;
  const char* value_label = "deviation";
  const char* limit_label = "tolerance";
};

void print_check(std::ostream& out, const Check& c) {
  out << (c.pass ? "PASS " : "FAIL ") << c.name << ' ' << c.value_label << '='
      << format_double(c.value) << ' ' << c.limit_label << '='
      << format_double(c.limit) << '\n';
}

std::vector<Check> run_validation(const StateSpec& spec, const StateFlags& f,
                                  const ModeEnvelope& env,
                                  const QuadratureConfig& cfg) {
  std::vector<Check> checks;
  const OpticalTomogram w =
      scaled(make_optical_tomogram(spec, env, cfg), f.inject_scale);

  double norm_dev = 0.0;
  for (int k = 0; k < 8; ++k) {
    const double theta = k * std::numbers::pi / 4.0;
    norm_dev = std::max(norm_dev,
                        std::abs(quadrature_moment(w, 0, theta) - 1.0));
  }
  checks.push_back({"normalization", norm_dev, kNormalizationTol,
                    norm_dev <= kNormalizationTol});

  const GridSpec sym_grid{-4.0, 4.0, 17, 0.0, 2.0 * std::numbers::pi, 9};
  const double sym = check_symmetry(w, sym_grid);
  checks.push_back({"pi-shift-symmetry", sym, kSymmetryTol, sym <= kSymmetryTol});

  const double up = uncertainty_product(w);
  checks.push_back({"uncertainty-bound", up, kUncertaintyBound, up >= kUncertaintyBound,
                    "product", "bound"});

  // Closed form against the wavefunction / Fock-mixture oracle.
  const std::vector<double> xs{-1.5, 0.0, 0.5, 2.0};
  const std::vector<double> thetas{0.3, 1.2, 2.9};
  double oracle_dev = 0.0;
  std::function<double(const QuadraturePoint&)> oracle;
  if (is_pure(spec)) {
    auto sampled = std::make_shared<SampledWavefunction>(make_wavefunction(spec, env), cfg);
    oracle = [sampled](const QuadraturePoint& p) { return tomogram_numeric(*sampled, p); };
  } else {
    const int m = std::holds_alternative<PhotonAddedThermal>(spec)
                      ? std::get<PhotonAddedThermal>(spec).m
                      : 0;
    const double T = std::holds_alternative<PhotonAddedThermal>(spec)
                         ? std::get<PhotonAddedThermal>(spec).T
                         : std::get<Thermal>(spec).T;
    auto weights = thermal_weights(m, T, 1e-11);
    if (weights.back().first > kMaxDegree) {
      throw ConvergenceError("oracle check needs Fock states beyond n=" +
                        std::to_string(kMaxDegree));
    }
    double total = 0.0;
    for (const auto& [n, wt] : weights) total += wt;
    for (auto& [n, wt] : weights) wt /= total;
    auto mixed = std::make_shared<MixedOracle>(std::move(weights), env, cfg);
    oracle = [mixed](const QuadraturePoint& p) { return (*mixed)(p); };
  }
  for (double x : xs) {
    for (double th : thetas) {
      oracle_dev = std::max(oracle_dev,
                            std::abs(w(x, th) - oracle(to_symplectic({x, th}))));
    }
  }
  checks.push_back({"oracle-agreement", oracle_dev, kOracleTol, oracle_dev <= kOracleTol});

  if (env.is_stationary() && is_pure(spec)) {
    const OpticalTomogram w0 =
        scaled(make_optical_tomogram(spec, stationary_envelope(0.0), cfg),
               f.inject_scale);
    double dev = 0.0;
    for (double shift : {0.7, 2.5}) {
      const OpticalTomogram wt = scaled(
          make_optical_tomogram(spec, stationary_envelope(env.t + shift), cfg),
          f.inject_scale);
      for (double x : xs) {
        for (double th : {0.4, 1.9}) {
          dev = std::max(dev, std::abs(wt(x, th) - w0(x, th + env.t + shift)));
        }
      }
    }
    checks.push_back({"time-shift", dev, kTimeShiftTol, dev <= kTimeShiftTol});
  }

  if (!is_pure(spec) && env.is_stationary()) {
    double dev = 0.0;
    for (double x : xs) {
      const double ref = w(x, 0.0);
      for (int k = 1; k <= 16; ++k) {
        dev = std::max(dev, std::abs(w(x, k * std::numbers::pi / 8.0) - ref));
      }
    }
    checks.push_back({"theta-independence", dev, kThetaIndependenceTol,
                      dev <= kThetaIndependenceTol});
  }
  return checks;
}

// ---- reconstruct --------------------------------------------------------

// Fock amplitudes of the pure target state, empty for mixed states.
std::vector<Complex> target_fock_amplitudes(const StateSpec& spec, int dim) {
  auto pac = [dim](Complex alpha, int m) {
    std::vector<Complex> out(static_cast<std::size_t>(dim));
    const auto coh = coherent_fock_amplitudes(alpha, dim);
    double norm = 0.0;
    for (int n = m; n < dim; ++n) {
      out[n] = coh[n - m] * std::exp(0.5 * (log_factorial(n) - log_factorial(n - m)));
      norm += std::norm(out[n]);
    }
    // Normalize with the exact norm m! L_m(-|alpha|^2).
    const double exact = std::exp(log_factorial(m)) * laguerre(m, -std::norm(alpha));
    for (auto& c : out) c /= std::sqrt(exact);
    return out;
  };
  if (const auto* s = std::get_if<PhotonAddedCoherent>(&spec)) return pac(s->alpha, s->m);
  if (const auto* s = std::get_if<EvenOddPAC>(&spec)) {
    const auto plus = pac(s->alpha, s->m);
    const auto minus = pac(-s->alpha, s->m);
    const double n = std::sqrt(even_odd_norm2(s->alpha, s->m, s->parity));
    const double sign = s->parity == Parity::Even ? 1.0 : -1.0;
    std::vector<Complex> out(plus.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = n * (plus[k] + sign * minus[k]);
    return out;
  }
  return {};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Optical tomograms of photon-added coherent, even/odd and thermal states",
               "patomo"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  StateFlags flags;
  std::string grid_text = "default";
  std::string out_path;
  double theta = 0.0;
  int count = 1000;
  std::uint64_t seed = 1;
  int n_max = 12;
  double reg = kDefaultReconstructionReg;
  bool csv = false;

  auto* tomogram = app.add_subcommand("tomogram", "Evaluate a tomogram grid as CSV");
  add_state_flags(tomogram, flags);
  tomogram->add_option("--grid", grid_text, "'default' or xmin:xmax:nx:thmin:thmax:nth");
  tomogram->add_option("--out", out_path, "Output CSV (stdout if omitted)");

  auto* validate_cmd = app.add_subcommand("validate", "Run tomogram consistency checks");
  add_state_flags(validate_cmd, flags);

  auto* moments = app.add_subcommand("moments", "Quadrature moments and photon number");
  add_state_flags(moments, flags);
  moments->add_flag("--csv", csv, "Emit a CSV header and row instead of key=value");
  moments->add_option("--out", out_path, "Output file");

  auto* sample = app.add_subcommand("sample", "Draw homodyne samples");
  add_state_flags(sample, flags);
  sample->add_option("--theta", theta, "Local oscillator phase");
  sample->add_option("--count", count, "Number of samples")->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed, "Generator seed");
  sample->add_option("--out", out_path, "Output file");

  auto* reconstruct = app.add_subcommand("reconstruct", "Reconstruct the density matrix");
  add_state_flags(reconstruct, flags);
  reconstruct->add_option("--nmax", n_max, "Fock cutoff")->check(CLI::Range(0, 32));
  reconstruct->add_option("--reg", reg, "Radial regularizer")->check(CLI::PositiveNumber);
  reconstruct->add_option("--out", out_path, "Density matrix CSV (m,n,re,im)");

  auto* figures = app.add_subcommand("figures", "Emit the eight figure panels");
  figures->add_option("--out", out_path, "Output directory")->required();
  figures->add_option("--grid", grid_text, "Grid specification");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    const GridSpec grid_spec = GridSpec::parse(grid_text);

    if (figures->parsed()) {
      struct Panel {
        const char* name;
        StateSpec spec;
      };
      const std::vector<Panel> panels{
          {"fig1a", PhotonAddedCoherent{0.1, 1}},
          {"fig1b", PhotonAddedCoherent{1.0, 1}},
          {"fig2a", EvenOddPAC{0.1, 1, Parity::Even}},
          {"fig2b", EvenOddPAC{1.0, 1, Parity::Even}},
          {"fig3a", EvenOddPAC{0.1, 1, Parity::Odd}},
          {"fig3b", EvenOddPAC{1.0, 1, Parity::Odd}},
          {"fig4a", PhotonAddedThermal{1.0, 1}},
          {"fig4b", PhotonAddedThermal{1.0, 2}},
      };
      const std::filesystem::path dir(out_path);
      std::filesystem::create_directories(dir);
      for (const auto& panel : panels) {
        const auto grid = build_grid(panel.spec, stationary_envelope(0.0), grid_spec,
                                     QuadratureConfig{}, 1.0, "const1 t=0");
        const auto base = dir / panel.name;
        with_output(base.string() + ".csv", out, [&](std::ostream& os) { write_csv(os, grid); });
        const auto [lo, hi] = write_pgm(base.string() + ".pgm", grid);
        with_output(base.string() + ".txt", out, [&](std::ostream& os) {
          write_metadata(os, grid);
          os << "pgm_min=" << format_double(lo) << '\n'
             << "pgm_max=" << format_double(hi) << '\n';
        });
        out << panel.name << ' ' << grid.state << '\n';
      }
      return kSuccess;
    }

    const StateSpec spec = make_spec(flags);
    const QuadratureConfig cfg = make_quadrature(flags);
    const ModeEnvelope env = make_envelope(flags, err);

    if (tomogram->parsed()) {
      const auto grid = build_grid(spec, env, grid_spec, cfg, flags.inject_scale,
                                   describe_envelope(flags, env));
      with_output(out_path, out, [&](std::ostream& os) { write_csv(os, grid); });
      return kSuccess;
    }

    if (validate_cmd->parsed()) {
      out << "# " << describe(spec) << " | " << describe_envelope(flags, env) << '\n';
      bool ok = true;
      for (const auto& c : run_validation(spec, flags, env, cfg)) {
        print_check(out, c);
        ok = ok && c.pass;
      }
      out << (ok ? "ALL PASS" : "SOME CHECKS FAILED") << '\n';
      return ok ? kSuccess : kFailure;
    }

    const OpticalTomogram w =
        scaled(make_optical_tomogram(spec, env, cfg), flags.inject_scale);

    if (moments->parsed()) {
      const MomentReport report = moment_report(w);
      with_output(out_path, out, [&](std::ostream& os) {
        if (csv) {
          os << MomentReport::csv_header() << '\n' << report.to_csv_row() << '\n';
        } else {
          os << report.to_key_value();
        }
      });
      return kSuccess;
    }

    if (sample->parsed()) {
      const auto samples = sample_homodyne(w, theta, count, seed);
      with_output(out_path, out, [&](std::ostream& os) {
        for (double s : samples) os << format_double(s) << '\n';
      });
      return kSuccess;
    }

    if (reconstruct->parsed()) {
      const auto result = reconstruct_density_matrix(w, n_max, reg);
      out << "n_max=" << n_max << '\n'
          << "reg=" << format_double(reg) << '\n'
          << "trace_before_normalization=" << format_double(result.trace_before_normalization) << '\n'
          << "min_eigenvalue=" << format_double(result.min_eigenvalue) << '\n'
          << "condition_estimate=" << format_double(result.condition_estimate) << '\n'
          << "reg_sensitivity=" << format_double(result.reg_sensitivity) << '\n';
      const auto target = target_fock_amplitudes(spec, n_max + 1);
      if (!target.empty()) {
        out << "fidelity=" << format_double(fidelity(result.rho, target)) << '\n';
      }
      if (!out_path.empty()) {
        with_output(out_path, out, [&](std::ostream& os) {
          os << "m,n,re,im\n";
          for (int m = 0; m < result.rho.dimension; ++m) {
            for (int n = 0; n < result.rho.dimension; ++n) {
              const Complex z = result.rho.entries(m, n);
              os << m << ',' << n << ',' << format_double(z.real()) << ','
                 << format_double(z.imag()) << '\n';
            }
          }
        });
      }
      return kSuccess;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace patomo::cli
