#include "beamlab/oracle/grid.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "beamlab/errors.hpp"

namespace beamlab::oracle {

Grid1D Grid1D::propagation(int n_points, double half_width) {
  require(n_points >= 64 && (n_points & (n_points - 1)) == 0,
          "Grid1D: propagation grids need a power-of-two point count >= 64, got " +
              std::to_string(n_points));
  require(std::isfinite(half_width) && half_width > 0.0, "Grid1D: half_width must be > 0");
  return Grid1D{n_points, half_width};
}

Grid1D Grid1D::sampling(int n_points, double half_width) {
  require(n_points >= 2, "Grid1D: sampling grids need at least 2 points");
  require(std::isfinite(half_width) && half_width > 0.0, "Grid1D: half_width must be > 0");
  return Grid1D{n_points, half_width};
}

std::vector<double> Grid1D::points() const {
  std::vector<double> out(n_points);
  for (int j = 0; j < n_points; ++j) out[j] = x(j);
  return out;
}

std::vector<double> Grid1D::wavenumbers() const {
  std::vector<double> k(n_points);
  const double dk = 2.0 * std::numbers::pi / (n_points * spacing());
  for (int m = 0; m < n_points; ++m) k[m] = dk * (m < n_points / 2 ? m : m - n_points);
  return k;
}

int default_grid_points() {
  if (const char* env = std::getenv("BEAMLAB_GRID_POINTS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    require(end != env && *end == '\0' && v >= 64 && v <= (1 << 16) && (v & (v - 1)) == 0,
            std::string("BEAMLAB_GRID_POINTS must be a power of two in [64, 65536], got '") + env + "'");
    return static_cast<int>(v);
  }
  return 1024;
}

}  // namespace beamlab::oracle
