#pragma once

// Free-space paraxial propagation by the exact transfer function
// exp(-i lambda_bar z k^2 / 2), one forward and one inverse DFT per axis.

#include <span>
#include <vector>

#include "beamlab/oracle/field.hpp"
#include "beamlab/oracle/grid.hpp"
#include "beamlab/oracle/kernel_grid.hpp"
#include "beamlab/projection_witness.hpp"

namespace beamlab::oracle {

/// Fraction of energy allowed in the outer 5% band of the window.
inline constexpr double kEdgeEnergyTolerance = 1e-8;

/// Relative spectral amplitude that counts as occupied for the aliasing guard.
inline constexpr double kBandAmplitudeFloor = 1e-6;

/// Throws NumericalGuardError if more than kEdgeEnergyTolerance of the energy
/// sits in |x| > 0.95 * half_width.
void check_sampling(std::span<const cplx> field, const Grid1D& grid);
void check_sampling(const Field2D& field);

/// Largest |k| whose spectral amplitude exceeds kBandAmplitudeFloor of the peak.
double occupied_bandwidth(std::span<const cplx> field, const Grid1D& grid);

/// Occupied band must stay below this fraction of the Nyquist wavenumber.
inline constexpr double kResolvedBandFraction = 0.9;

/// Aliasing guard: rejects an under-resolved field (occupied band above
/// kResolvedBandFraction of Nyquist), and rejects z if the chirp, which
/// displaces wavenumber k by lambda_bar z k, would wrap the occupied band
/// around the periodic window (lambda_bar |z| k_band > half_width).
void check_aliasing(double bandwidth, const Grid1D& grid, double z, double lambda_bar);

std::vector<cplx> propagate_field_1d(std::span<const cplx> field, const Grid1D& grid, double z,
                                     double lambda_bar);

Field2D propagate_field_2d(const Field2D& field, double z, double lambda_bar);

/// U Gamma U^H for a 1D kernel grid.
KernelGrid propagate_kernel_1d(const KernelGrid& kernel, double z, double lambda_bar);

/// Trapezoid sum h * sum |psi|^2.
double energy_1d(std::span<const cplx> field, const Grid1D& grid);

/// <x^2> of |psi|^2.
double second_moment_1d(std::span<const cplx> field, const Grid1D& grid);

/// sqrt(4 <x'^2>) with x' = x cos + y sin.
double projected_width_numeric(const Field2D& field, RotationAngle theta);

}  // namespace beamlab::oracle
