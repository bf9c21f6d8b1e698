#pragma once

#include <functional>

#include <Eigen/Dense>

#include "beamlab/gaussian_family.hpp"
#include "beamlab/oracle/field.hpp"
#include "beamlab/oracle/grid.hpp"
#include "beamlab/projection_witness.hpp"

namespace beamlab::oracle {

/// A discretized two-point function as a Hermitian matrix.
///
/// dims == 1: values(i, j) = Gamma(x_i, x_j).
/// dims == 2: values(a, b) with a = ix * n + iy over the product grid, i.e.
///            Gamma((x_ix, y_iy), (x_jx, y_jy)) at b = jx * n + jy.
struct KernelGrid {
  Grid1D axis;
  int dims = 1;
  Eigen::MatrixXcd values;

  /// max |values - values^H| / max |values|.
  double hermiticity_defect() const;
};

struct PsdResult {
  double min_eigenvalue_ratio = 0.0;  // lambda_min / lambda_max
  bool psd = false;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
};

/// psd <=> lambda_min / lambda_max >= -kPsdTolerance.
inline constexpr double kPsdTolerance = 1e-8;

/// Hermiticity tolerance for grid-level guards.
inline constexpr double kHermiticityTolerance = 1e-8;

KernelGrid sample_kernel_1d(const std::function<cplx(double, double)>& gamma, const Grid1D& axis);
KernelGrid sample_kernel_2d(const Kernel2DFn& gamma, const Grid1D& axis);

/// Eigenvalues of the sampled Hermitian matrix (LAPACK zheevr).
PsdResult kernel_psd_check(const KernelGrid& kernel);

/// dims == 2: Gamma~[(ix,iy),(jx,jy)] = Gamma[(jx,iy),(ix,jy)].
/// dims == 1: plain transposition.
/// Both sides share one axis grid, so the x and x' samples always coincide.
KernelGrid partial_transpose_kernel(const KernelGrid& kernel);

/// Trace over y' of a coherent field sampled in the rotated frame:
/// Gamma''(x'_i, x'_k) = h sum_j Psi'(x'_i, y'_j) conj Psi'(x'_k, y'_j).
KernelGrid reduce_kernel(const Field2D& rotated_field);

/// Trace over y of a general 2D kernel grid: Gamma''(i, k) = h sum_j Gamma[(i,j),(k,j)].
KernelGrid reduce_kernel(const KernelGrid& kernel2d);

/// Psi'(x', y') = Psi(x' cos - y' sin, x' sin + y' cos), bilinear resampling
/// on the same grid; zero outside the source window.
Field2D rotate_field_bilinear(const Field2D& field, RotationAngle theta);

/// Rotate by bilinear resampling, then trace out y'. Throws
/// NumericalGuardError when the result's Hermiticity defect exceeds
/// kHermiticityTolerance.
KernelGrid reduce_kernel(const Field2D& field, RotationAngle theta);

/// Fitted GSM width and coherence length of a 1D kernel grid, from the
/// intensity second moment and the |Gamma|^2-weighted separation moment.
struct GsmFit {
  double width = 0.0;
  ExtReal delta = ExtReal::infinite();
};
GsmFit fit_gsm_kernel(const KernelGrid& kernel);

}  // namespace beamlab::oracle
