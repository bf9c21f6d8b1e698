#pragma once

#include <optional>

#include "beamlab/gaussian_family.hpp"
#include "beamlab/oracle/grid.hpp"

namespace beamlab::oracle {

/// Position grid for the centre rho and separation grid for s. The momentum
/// grid follows from the separation grid: p = lambda_bar * k.
struct PhaseSpaceGrid {
  Grid1D position;
  Grid1D separation;
};

struct WignerMoments {
  VarianceMatrix variance;
  double total_intensity = 0.0;
  Eigen::Vector4d mean = Eigen::Vector4d::Zero();
  double imag_ratio = 0.0;  // max |Im W| / max |W|
};

/// Drift of the integrated Wigner function from the expected intensity that
/// flags inadequate sampling.
inline constexpr double kWignerNormalizationTolerance = 1e-4;

/// W(rho, p) = (2 pi lambda_bar)^-2 int d^2s exp(-i p.s / lambda_bar)
///             Gamma(rho + s/2; rho - s/2),
/// evaluated by a 2D DFT over s at each rho, followed by trapezoid quadrature
/// of all second moments, normalized by the integrated intensity.
///
/// When expected_intensity is given, a relative drift above
/// kWignerNormalizationTolerance throws NumericalGuardError.
WignerMoments wigner_moments(const Kernel2DFn& gamma, const PhaseSpaceGrid& grid, double lambda_bar,
                             std::optional<double> expected_intensity = std::nullopt);

/// Grid sizing from the magnitudes of L, M and K. Uses only the kernel's own
/// parameters, not the closed-form variance matrix.
PhaseSpaceGrid suggest_phase_space_grid(const AgsmParams& p, int position_points = 32,
                                        int separation_points = 48);

}  // namespace beamlab::oracle
