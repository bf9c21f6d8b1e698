#include "beamlab/oracle/propagate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "beamlab/errors.hpp"
#include "beamlab/oracle/fft.hpp"
#include "beamlab/oracle/kernels.hpp"

namespace beamlab::oracle {

namespace {

std::vector<cplx> transfer_function(const Grid1D& grid, double z, double lambda_bar) {
  const std::vector<double> k = grid.wavenumbers();
  std::vector<cplx> h(k.size());
  for (std::size_t m = 0; m < k.size(); ++m) h[m] = std::polar(1.0, -0.5 * lambda_bar * z * k[m] * k[m]);
  return h;
}

void check_propagation_args(const Grid1D& grid, double z, double lambda_bar) {
  require(std::isfinite(z), "propagation distance must be finite");
  require(std::isfinite(lambda_bar) && lambda_bar > 0.0, "lambda_bar must be > 0");
  Grid1D::propagation(grid.n_points, grid.half_width);
}

bool in_edge_band(double x, const Grid1D& grid) { return std::abs(x) > 0.95 * grid.half_width; }

std::vector<cplx> column_copy(const Eigen::MatrixXcd& m, int j) {
  return std::vector<cplx>(m.col(j).data(), m.col(j).data() + m.rows());
}

}  // namespace

void check_sampling(std::span<const cplx> field, const Grid1D& grid) {
  double total = 0.0, edge = 0.0;
  for (int j = 0; j < grid.n_points; ++j) {
    const double e = std::norm(field[j]);
    total += e;
    if (in_edge_band(grid.x(j), grid)) edge += e;
  }
  if (!(total > 0.0)) throw NumericalGuardError("field has zero energy on the grid");
  if (edge > kEdgeEnergyTolerance * total) {
    throw NumericalGuardError("field inadequately sampled: edge energy fraction " +
                              std::to_string(edge / total));
  }
}

void check_sampling(const Field2D& field) {
  const Grid1D& g = field.grid;
  double total = 0.0, edge = 0.0;
  for (int j = 0; j < g.n_points; ++j) {
    for (int i = 0; i < g.n_points; ++i) {
      const double e = std::norm(field.values(i, j));
      total += e;
      if (in_edge_band(g.x(i), g) || in_edge_band(g.x(j), g)) edge += e;
    }
  }
  if (!(total > 0.0)) throw NumericalGuardError("field has zero energy on the grid");
  if (edge > kEdgeEnergyTolerance * total) {
    throw NumericalGuardError("2D field inadequately sampled: edge energy fraction " +
                              std::to_string(edge / total));
  }
}

double occupied_bandwidth(std::span<const cplx> field, const Grid1D& grid) {
  std::vector<cplx> spec(field.begin(), field.end());
  FftPlan plan(grid.n_points);
  plan.forward(spec.data());
  double peak = 0.0;
  for (const cplx& c : spec) peak = std::max(peak, std::abs(c));
  const std::vector<double> k = grid.wavenumbers();
  double band = 0.0;
  for (std::size_t m = 0; m < spec.size(); ++m) {
    if (std::abs(spec[m]) >= kBandAmplitudeFloor * peak) band = std::max(band, std::abs(k[m]));
  }
  return band;
}

void check_aliasing(double bandwidth, const Grid1D& grid, double z, double lambda_bar) {
  const double nyquist = std::numbers::pi / grid.spacing();
  if (bandwidth > kResolvedBandFraction * nyquist) {
    throw NumericalGuardError("aliasing guard: occupied band " + std::to_string(bandwidth) +
                              " reaches the Nyquist limit " + std::to_string(nyquist) +
                              "; the field is under-resolved");
  }
  const double shift = lambda_bar * std::abs(z) * bandwidth;
  if (shift > grid.half_width) {
    throw NumericalGuardError("aliasing guard: z = " + std::to_string(z) + " displaces the occupied band by " +
                              std::to_string(shift) + " > half_width " + std::to_string(grid.half_width));
  }
}

std::vector<cplx> propagate_field_1d(std::span<const cplx> field, const Grid1D& grid, double z,
                                     double lambda_bar) {
  check_propagation_args(grid, z, lambda_bar);
  require(static_cast<int>(field.size()) == grid.n_points, "propagate_field_1d: field/grid size mismatch");
  check_sampling(field, grid);
  check_aliasing(occupied_bandwidth(field, grid), grid, z, lambda_bar);

  Eigen::MatrixXcd col = Eigen::Map<const Eigen::VectorXcd>(field.data(), grid.n_points);
  FftPlan plan(grid.n_points);
  const std::vector<cplx> h = transfer_function(grid, z, lambda_bar);
  kernels::omp::transform_columns(col, plan, h);
  return column_copy(col, 0);
}

Field2D propagate_field_2d(const Field2D& field, double z, double lambda_bar) {
  const Grid1D& g = field.grid;
  check_propagation_args(g, z, lambda_bar);
  require(field.values.rows() == g.n_points && field.values.cols() == g.n_points,
          "propagate_field_2d: field/grid size mismatch");
  check_sampling(field);
  const int mid = g.n_points / 2;
  const Eigen::VectorXcd row = field.values.row(mid).transpose();
  const double band = std::max(occupied_bandwidth(column_copy(field.values, mid), g),
                               occupied_bandwidth(std::span<const cplx>(row.data(), row.size()), g));
  check_aliasing(band, g, z, lambda_bar);

  FftPlan plan(g.n_points);
  const std::vector<cplx> h = transfer_function(g, z, lambda_bar);
  Field2D out{g, field.values};
  kernels::omp::transform_columns(out.values, plan, h);  // along x
  out.values.transposeInPlace();
  kernels::omp::transform_columns(out.values, plan, h);  // along y
  out.values.transposeInPlace();
  return out;
}

KernelGrid propagate_kernel_1d(const KernelGrid& kernel, double z, double lambda_bar) {
  require(kernel.dims == 1, "propagate_kernel_1d: kernel must be one-dimensional");
  const Grid1D& g = kernel.axis;
  check_propagation_args(g, z, lambda_bar);
  require(kernel.values.rows() == g.n_points && kernel.values.cols() == g.n_points,
          "propagate_kernel_1d: kernel/grid size mismatch");
  const Eigen::VectorXcd diag = kernel.values.diagonal();
  std::vector<cplx> amp(diag.size());
  for (Eigen::Index i = 0; i < diag.size(); ++i) amp[i] = std::sqrt(std::abs(diag(i).real()));
  check_sampling(amp, g);
  check_aliasing(occupied_bandwidth(column_copy(kernel.values, g.n_points / 2), g), g, z, lambda_bar);

  FftPlan plan(g.n_points);
  const std::vector<cplx> h = transfer_function(g, z, lambda_bar);
  KernelGrid out = kernel;
  kernels::omp::transform_columns(out.values, plan, h);  // U Gamma
  out.values.adjointInPlace();                          // Gamma U^H
  kernels::omp::transform_columns(out.values, plan, h);  // U Gamma U^H
  return out;
}

double energy_1d(std::span<const cplx> field, const Grid1D& grid) {
  double s = 0.0;
  for (const cplx& c : field) s += std::norm(c);
  return s * grid.spacing();
}

double second_moment_1d(std::span<const cplx> field, const Grid1D& grid) {
  double s0 = 0.0, s2 = 0.0;
  for (int j = 0; j < grid.n_points; ++j) {
    const double e = std::norm(field[j]);
    const double x = grid.x(j);
    s0 += e;
    s2 += x * x * e;
  }
  return s2 / s0;
}

double projected_width_numeric(const Field2D& field, RotationAngle theta) {
  const kernels::ProjectedMoment m = kernels::omp::projected_moment(field, theta.cos(), theta.sin());
  return std::sqrt(4.0 * m.second / m.total);
}

std::vector<cplx> sample_field_1d(const std::function<cplx(double)>& fn, const Grid1D& grid) {
  std::vector<cplx> out(grid.n_points);
  for (int j = 0; j < grid.n_points; ++j) out[j] = fn(grid.x(j));
  return out;
}

Field2D sample_field_2d(const std::function<cplx(double, double)>& fn, const Grid1D& grid) {
  Field2D f{grid, Eigen::MatrixXcd(grid.n_points, grid.n_points)};
  for (int j = 0; j < grid.n_points; ++j) {
    for (int i = 0; i < grid.n_points; ++i) f.values(i, j) = fn(grid.x(i), grid.x(j));
  }
  return f;
}

}  // namespace beamlab::oracle
