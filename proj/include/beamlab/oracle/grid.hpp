#pragma once

#include <vector>

namespace beamlab::oracle {

/// Uniform grid centred on 0: x_j = (j - n/2) * spacing, j = 0..n-1.
struct Grid1D {
  int n_points = 0;
  double half_width = 0.0;

  /// Propagation grid: power of two, n >= 64.
  static Grid1D propagation(int n_points, double half_width);
  /// Plain sampling grid for kernel discretization: any n >= 2.
  static Grid1D sampling(int n_points, double half_width);

  double spacing() const { return 2.0 * half_width / n_points; }
  double x(int j) const { return (j - n_points / 2) * spacing(); }
  std::vector<double> points() const;
  /// Angular wavenumbers in FFT order.
  std::vector<double> wavenumbers() const;
};

/// Default points per axis for propagation grids: 1024, or the value of the
/// BEAMLAB_GRID_POINTS environment variable when set.
int default_grid_points();

}  // namespace beamlab::oracle
