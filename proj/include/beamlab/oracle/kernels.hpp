#pragma once

// Data-parallel inner loops of the numeric oracle.
//
// Every kernel exists twice with identical signatures: `serial::` is the
// reference, `omp::` distributes the same per-row body over OpenMP threads.
// Reductions are done per row into a buffer and summed in row order, so the
// two variants return bit-identical results.

#include <span>

#include <Eigen/Dense>

#include "beamlab/gaussian_family.hpp"
#include "beamlab/oracle/fft.hpp"
#include "beamlab/oracle/field.hpp"
#include "beamlab/oracle/grid.hpp"

namespace beamlab::oracle::kernels {

/// Raw quadrature sums of the Wigner function over a phase-space grid:
/// zeroth, first and second moments in xi = (x, y, p_x, p_y), already scaled
/// by the phase-space cell volume.
struct WignerSums {
  double total = 0.0;
  Eigen::Vector4d first = Eigen::Vector4d::Zero();
  Mat4 second = Mat4::Zero();
  double max_abs = 0.0;       // max |W|
  double max_abs_imag = 0.0;  // max |Im W|
};

struct ProjectedMoment {
  double total = 0.0;   // sum |Psi|^2 h^2
  double second = 0.0;  // sum (x cos + y sin)^2 |Psi|^2 h^2
};

#define BEAMLAB_KERNEL_DECLS                                                                        \
  /* Each column: forward FFT, multiply by transfer[k] / n, inverse FFT. */                         \
  void transform_columns(Eigen::MatrixXcd& m, const FftPlan& plan, std::span<const cplx> transfer);   \
  /* out(ix*n+iy, jx*n+jy) = gamma((x_ix, y_iy), (x_jx, y_jy)). */                                  \
  void sample_kernel_matrix(const Kernel2DFn& gamma, const Grid1D& axis, Eigen::MatrixXcd& out);    \
  WignerSums wigner_sums(const Kernel2DFn& gamma, const Grid1D& position, const Grid1D& separation, \
                         double lambda_bar);                                                        \
  ProjectedMoment projected_moment(const Field2D& field, double cos_t, double sin_t);                \
  /* out(i, k) = h * sum_j Psi(i, j) conj(Psi(k, j)). */                                            \
  Eigen::MatrixXcd trace_out_y(const Field2D& field);

namespace serial {
BEAMLAB_KERNEL_DECLS
}  // namespace serial

namespace omp {
BEAMLAB_KERNEL_DECLS
}  // namespace omp

#undef BEAMLAB_KERNEL_DECLS

}  // namespace beamlab::oracle::kernels
