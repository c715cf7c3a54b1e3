#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "patomo/tomograms.hpp"

namespace patomo {

/// Rectangular (X, theta) evaluation grid, endpoints included.
struct GridSpec {
  double x_min = -6.0;
  double x_max = 6.0;
  int n_x = 241;
  double theta_min = 0.0;
  double theta_max = 2.0 * std::numbers::pi;
  int n_theta = 181;

  static GridSpec default_grid() { return {}; }
  /// "default" or "x_min:x_max:n_x:theta_min:theta_max:n_theta".
  static GridSpec parse(const std::string& text);

  double x(int i) const {
    return i == n_x - 1 ? x_max : x_min + (x_max - x_min) * i / (n_x - 1);
  }
  double theta(int j) const {
    return j == n_theta - 1
               ? theta_max
               : theta_min + (theta_max - theta_min) * j / (n_theta - 1);
  }
  void validate() const;
};

struct TomogramGrid {
  GridSpec spec;
  /// Row-major in theta then X: values[j * n_x + i] = w(x(i), theta(j)).
  std::vector<double> values;
  std::string state;
  std::string envelope;
  std::string timestamp;
  std::string tool_version;

  double at(int i, int j) const {
    return values[static_cast<std::size_t>(j) * spec.n_x + i];
  }
};

/// Evaluates w over the grid, fanning out across hardware threads.
/// Throws if any value is negative or non-finite.
TomogramGrid evaluate_grid(const OpticalTomogram& w, const GridSpec& spec);

/// CSV: header "X,theta,w", rows row-major in theta then X, "%.16e" floats.
void write_csv(std::ostream& os, const TomogramGrid& grid);
TomogramGrid read_csv(std::istream& is);
std::string format_double(double v);

/// 16-bit binary PGM (P5, big-endian), min-max normalized, X along columns.
/// Returns the (min, max) used for normalization.
std::pair<double, double> write_pgm(const std::filesystem::path& path,
                                    const TomogramGrid& grid);

}  // namespace patomo
