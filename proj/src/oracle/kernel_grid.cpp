#include "beamlab/oracle/kernel_grid.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "beamlab/errors.hpp"
#include "beamlab/oracle/kernels.hpp"

namespace beamlab::oracle {

double KernelGrid::hermiticity_defect() const {
  const double scale = values.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  return (values - values.adjoint()).cwiseAbs().maxCoeff() / scale;
}

KernelGrid sample_kernel_1d(const std::function<cplx(double, double)>& gamma, const Grid1D& axis) {
  KernelGrid k{axis, 1, Eigen::MatrixXcd(axis.n_points, axis.n_points)};
  for (int j = 0; j < axis.n_points; ++j) {
    for (int i = 0; i < axis.n_points; ++i) k.values(i, j) = gamma(axis.x(i), axis.x(j));
  }
  return k;
}

KernelGrid sample_kernel_2d(const Kernel2DFn& gamma, const Grid1D& axis) {
  KernelGrid k{axis, 2, {}};
  kernels::omp::sample_kernel_matrix(gamma, axis, k.values);
  return k;
}

PsdResult kernel_psd_check(const KernelGrid& kernel) {
  const auto n = static_cast<lapack_int>(kernel.values.rows());
  require(n > 0 && kernel.values.cols() == n, "kernel_psd_check: kernel matrix must be square");
  Eigen::MatrixXcd a = kernel.values;
  std::vector<double> w(n);
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(n));
  lapack_int found = 0;
  const lapack_int info = LAPACKE_zheevr(LAPACK_COL_MAJOR, 'N', 'A', 'L', n,
                                         reinterpret_cast<lapack_complex_double*>(a.data()), n, 0.0, 0.0, 0, 0,
                                         0.0, &found, w.data(), nullptr, n, support.data());
  if (info != 0) throw NumericalGuardError("kernel_psd_check: zheevr failed, info = " + std::to_string(info));

  PsdResult r;
  r.min_eigenvalue = w.front();
  r.max_eigenvalue = w.back();
  if (r.max_eigenvalue <= 0.0) {
    r.min_eigenvalue_ratio = -1.0;
    r.psd = false;
    return r;
  }
  r.min_eigenvalue_ratio = r.min_eigenvalue / r.max_eigenvalue;
  r.psd = r.min_eigenvalue_ratio >= -kPsdTolerance;
  return r;
}

KernelGrid partial_transpose_kernel(const KernelGrid& kernel) {
  if (kernel.dims == 1) return KernelGrid{kernel.axis, 1, kernel.values.transpose()};
  require(kernel.dims == 2, "partial_transpose_kernel: dims must be 1 or 2");
  const int n = kernel.axis.n_points;
  require(kernel.values.rows() == n * n && kernel.values.cols() == n * n,
          "partial_transpose_kernel: matrix does not match the product grid");
  KernelGrid out{kernel.axis, 2, Eigen::MatrixXcd(n * n, n * n)};
  for (int jx = 0; jx < n; ++jx) {
    for (int jy = 0; jy < n; ++jy) {
      for (int ix = 0; ix < n; ++ix) {
        for (int iy = 0; iy < n; ++iy) {
          out.values(ix * n + iy, jx * n + jy) = kernel.values(jx * n + iy, ix * n + jy);
        }
      }
    }
  }
  return out;
}

KernelGrid reduce_kernel(const Field2D& rotated_field) {
  return KernelGrid{rotated_field.grid, 1, kernels::omp::trace_out_y(rotated_field)};
}

KernelGrid reduce_kernel(const KernelGrid& kernel2d) {
  require(kernel2d.dims == 2, "reduce_kernel: input must be a 2D kernel grid");
  const int n = kernel2d.axis.n_points;
  const double h = kernel2d.axis.spacing();
  KernelGrid out{kernel2d.axis, 1, Eigen::MatrixXcd::Zero(n, n)};
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      cplx acc = 0.0;
      for (int j = 0; j < n; ++j) acc += kernel2d.values(i * n + j, k * n + j);
      out.values(i, k) = h * acc;
    }
  }
  if (out.hermiticity_defect() > kHermiticityTolerance) {
    throw NumericalGuardError("reduce_kernel: reduced kernel lost Hermiticity");
  }
  return out;
}

Field2D rotate_field_bilinear(const Field2D& field, RotationAngle theta) {
  const Grid1D& g = field.grid;
  const int n = g.n_points;
  const double h = g.spacing();
  const double c = theta.cos();
  const double s = theta.sin();
  Field2D out{g, Eigen::MatrixXcd::Zero(n, n)};
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double xr = g.x(i), yr = g.x(j);
      const double fx = (c * xr - s * yr) / h + n / 2;
      const double fy = (s * xr + c * yr) / h + n / 2;
      const int i0 = static_cast<int>(std::floor(fx));
      const int j0 = static_cast<int>(std::floor(fy));
      if (i0 < 0 || j0 < 0 || i0 + 1 >= n || j0 + 1 >= n) continue;
      const double tx = fx - i0, ty = fy - j0;
      out.values(i, j) = (1 - tx) * (1 - ty) * field.values(i0, j0) + tx * (1 - ty) * field.values(i0 + 1, j0) +
                         (1 - tx) * ty * field.values(i0, j0 + 1) + tx * ty * field.values(i0 + 1, j0 + 1);
    }
  }
  return out;
}

KernelGrid reduce_kernel(const Field2D& field, RotationAngle theta) {
  KernelGrid out = reduce_kernel(rotate_field_bilinear(field, theta));
  if (out.hermiticity_defect() > kHermiticityTolerance) {
    throw NumericalGuardError("reduce_kernel: interpolation broke Hermiticity; refine the grid");
  }
  return out;
}

GsmFit fit_gsm_kernel(const KernelGrid& kernel) {
  require(kernel.dims == 1, "fit_gsm_kernel: kernel must be one-dimensional");
  const Grid1D& g = kernel.axis;
  const int n = g.n_points;
  double i0 = 0.0, i2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = kernel.values(i, i).real();
    i0 += d;
    i2 += g.x(i) * g.x(i) * d;
  }
  double m0 = 0.0, m2 = 0.0;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      const double e = std::norm(kernel.values(i, k));
      const double s = g.x(i) - g.x(k);
      m0 += e;
      m2 += s * s * e;
    }
  }
  GsmFit fit;
  fit.width = std::sqrt(4.0 * i2 / i0);
  // <s^2> under |Gamma|^2 is 1 / (2 (1/w^2 + 1/delta^2)).
  const double inv_delta_sq = m0 / (2.0 * m2) - 1.0 / (fit.width * fit.width);
  if (inv_delta_sq > 0.0) fit.delta = ExtReal::finite(1.0 / std::sqrt(inv_delta_sq));
  return fit;
}

}  // namespace beamlab::oracle
