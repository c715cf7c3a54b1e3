#include "patomo/grid.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace patomo {

void GridSpec::validate() const {
  if (n_x < 2 || n_theta < 2) throw DomainError("grid needs n_x, n_theta >= 2");
  if (!(x_max > x_min)) throw DomainError("grid needs x_max > x_min");
  if (!(theta_max > theta_min)) {
    throw DomainError("grid needs theta_max > theta_min");
  }
  if (!std::isfinite(x_min) || !std::isfinite(x_max) ||
      !std::isfinite(theta_min) || !std::isfinite(theta_max)) {
    throw DomainError("grid bounds must be finite");
  }
}

GridSpec GridSpec::parse(const std::string& text) {
  if (text.empty() || text == "default") return default_grid();
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 6) {
    throw DomainError("grid must be 'default' or 6 ':'-separated fields");
  }
  GridSpec g;
  try {
    g.x_min = std::stod(parts[0]);
    g.x_max = std::stod(parts[1]);
    g.n_x = std::stoi(parts[2]);
    g.theta_min = std::stod(parts[3]);
    g.theta_max = std::stod(parts[4]);
    g.n_theta = std::stoi(parts[5]);
  } catch (const std::logic_error&) {
    throw DomainError("grid: cannot parse '" + text + "'");
  }
  g.validate();
  return g;
}

TomogramGrid evaluate_grid(const OpticalTomogram& w, const GridSpec& spec) {
  spec.validate();
  TomogramGrid grid;
  grid.spec = spec;
  const std::size_t total =
      static_cast<std::size_t>(spec.n_x) * static_cast<std::size_t>(spec.n_theta);
  grid.values.assign(total, 0.0);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= total) return;
      const int i = static_cast<int>(k % spec.n_x);
      const int j = static_cast<int>(k / spec.n_x);
      try {
        const double v = w(spec.x(i), spec.theta(j));
        if (!std::isfinite(v) || v < 0.0) {
          throw ConvergenceError("grid value invalid at X=" +
                                 std::to_string(spec.x(i)) + ", theta=" +
                                 std::to_string(spec.theta(j)));
        }
        grid.values[k] = v;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = total;
        return;
      }
    }
  };

  const unsigned n_threads = std::max(1u, std::thread::hardware_concurrency());
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return grid;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void write_csv(std::ostream& os, const TomogramGrid& grid) {
  os << "X,theta,w\n";
  for (int j = 0; j < grid.spec.n_theta; ++j) {
    const std::string theta = format_double(grid.spec.theta(j));
    for (int i = 0; i < grid.spec.n_x; ++i) {
      os << format_double(grid.spec.x(i)) << ',' << theta << ','
         << format_double(grid.at(i, j)) << '\n';
    }
  }
}

namespace {

double parse_field(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DomainError("csv: bad number '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

TomogramGrid read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "X,theta,w") {
    throw DomainError("csv: missing 'X,theta,w' header");
  }
  std::vector<double> xs, thetas, values;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
      throw DomainError("csv: malformed row '" + line + "'");
    }
    const std::string_view sv(line);
    xs.push_back(parse_field(sv.substr(0, c1)));
    thetas.push_back(parse_field(sv.substr(c1 + 1, c2 - c1 - 1)));
    values.push_back(parse_field(sv.substr(c2 + 1)));
  }
  if (values.empty()) throw DomainError("csv: no data rows");

  int n_x = 1;
  while (n_x < static_cast<int>(thetas.size()) && thetas[n_x] == thetas[0]) ++n_x;
  if (values.size() % n_x != 0) throw DomainError("csv: ragged grid");
  TomogramGrid grid;
  grid.spec.n_x = n_x;
  grid.spec.n_theta = static_cast<int>(values.size() / n_x);
  grid.spec.x_min = xs.front();
  grid.spec.x_max = xs[n_x - 1];
  grid.spec.theta_min = thetas.front();
  grid.spec.theta_max = thetas.back();
  grid.spec.validate();
  grid.values = std::move(values);
  return grid;
}

std::pair<double, double> write_pgm(const std::filesystem::path& path,
                                    const TomogramGrid& grid) {
  const auto [lo_it, hi_it] =
      std::minmax_element(grid.values.begin(), grid.values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  const double span = hi > lo ? hi - lo : 1.0;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << "P5\n" << grid.spec.n_x << ' ' << grid.spec.n_theta << "\n65535\n";
  // First image row is the largest theta so theta increases upwards.
  for (int j = grid.spec.n_theta - 1; j >= 0; --j) {
    for (int i = 0; i < grid.spec.n_x; ++i) {
      const double scaled = (grid.at(i, j) - lo) / span * 65535.0;
      const auto v = static_cast<unsigned>(std::lround(std::clamp(scaled, 0.0, 65535.0)));
      out.put(static_cast<char>((v >> 8) & 0xff));
      out.put(static_cast<char>(v & 0xff));
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
  return {lo, hi};
}

}  // namespace patomo
