#include "beamlab/oracle/wigner.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "beamlab/errors.hpp"
#include "beamlab/oracle/kernels.hpp"

namespace beamlab::oracle {

WignerMoments wigner_moments(const Kernel2DFn& gamma, const PhaseSpaceGrid& grid, double lambda_bar,
                             std::optional<double> expected_intensity) {
  require(std::isfinite(lambda_bar) && lambda_bar > 0.0, "wigner_moments: lambda_bar must be > 0");
  const kernels::WignerSums sums =
      kernels::omp::wigner_sums(gamma, grid.position, grid.separation, lambda_bar);
  if (!(sums.total > 0.0)) throw NumericalGuardError("wigner_moments: integrated intensity is not positive");
  if (expected_intensity) {
    const double drift = std::abs(sums.total - *expected_intensity) / *expected_intensity;
    if (drift > kWignerNormalizationTolerance) {
      throw NumericalGuardError("wigner_moments: normalization drift " + std::to_string(drift) +
                                " indicates inadequate sampling");
    }
  }
  WignerMoments out;
  out.total_intensity = sums.total;
  out.mean = sums.first / sums.total;
  out.variance.V = sums.second / sums.total;
  out.variance.lambda_bar = lambda_bar;
  out.imag_ratio = sums.max_abs > 0.0 ? sums.max_abs_imag / sums.max_abs : 0.0;
  return out;
}

PhaseSpaceGrid suggest_phase_space_grid(const AgsmParams& p, int position_points, int separation_points) {
  p.validate();
  constexpr double kSpan = 6.0;  // standard deviations kept inside every window
  Eigen::SelfAdjointEigenSolver<Mat2> el(p.L, Eigen::EigenvaluesOnly);
  const double sigma_pos = 1.0 / std::sqrt(el.eigenvalues()(0));
  const double pos_half = kSpan * sigma_pos;

  // |Gamma(rho + s/2; rho - s/2)| ~ exp(-s^T A s), A = L/8 + M/2.
  const Mat2 a = p.L / 8.0 + p.M / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat2> ea(a, Eigen::EigenvaluesOnly);
  const double sigma_s = 1.0 / std::sqrt(2.0 * ea.eigenvalues()(0));
  const double sigma_p = p.lambda_bar * std::sqrt(2.0 * ea.eigenvalues()(1));
  // The conditional momentum centre is -K rho.
  const double k_norm = p.K.operatorNorm();
  const double p_needed = k_norm * pos_half + kSpan * sigma_p;
  const double hs = std::numbers::pi * p.lambda_bar / p_needed;

  int ns = separation_points;
  const int ns_min = static_cast<int>(std::ceil(2.0 * kSpan * sigma_s / hs));
  if (ns_min > ns) ns = ns_min + (ns_min % 2);

  return PhaseSpaceGrid{Grid1D::sampling(position_points, pos_half), Grid1D::sampling(ns, 0.5 * ns * hs)};
}

}  // namespace beamlab::oracle
